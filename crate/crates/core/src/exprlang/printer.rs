use num_traits::Signed;

use crate::catalog::ast::Expr;
use crate::cyclotomic::{fmt_rational, zeta_name};

/// Canonical rendering with minimal parentheses; `parse_expr(print_expr(x)) == x` for
/// every tree the parser can produce.
pub fn print_expr(e: &Expr) -> String {
    sum_level(e)
}

fn sum_level(e: &Expr) -> String {
    match e {
        Expr::Sum(xs) if xs.is_empty() => "0".to_string(),
        Expr::Sum(xs) => {
            let mut out = term_level(&xs[0]);
            for x in &xs[1..] {
                match x {
                    Expr::Negate(inner) => {
                        out.push_str(" - ");
                        out.push_str(&term_level(inner));
                    }
                    _ => {
                        out.push_str(" + ");
                        out.push_str(&term_level(x));
                    }
                }
            }
            out
        }
        _ => term_level(e),
    }
}

fn term_level(e: &Expr) -> String {
    match e {
        Expr::Sum(_) => format!("({})", sum_level(e)),
        Expr::Product(xs) if xs.is_empty() => "1".to_string(),
        Expr::Product(xs) => xs
            .iter()
            .map(|x| match x {
                Expr::Product(_) | Expr::Sum(_) => format!("({})", sum_level(x)),
                _ => factor_level(x),
            })
            .collect::<Vec<_>>()
            .join("*"),
        _ => factor_level(e),
    }
}

fn factor_level(e: &Expr) -> String {
    match e {
        Expr::Negate(x) => format!("-{}", powered(x)),
        _ => powered(e),
    }
}

fn powered(e: &Expr) -> String {
    match e {
        Expr::Power(base, k) => format!("{}^{k}", atom(base)),
        _ => atom(e),
    }
}

fn atom(e: &Expr) -> String {
    match e {
        Expr::Var(v) => v.name().to_string(),
        Expr::Root { order, exponent } if *exponent >= 0 => zeta_name(*order, *exponent as u64),
        Expr::Root { order, exponent } => format!("zeta({order},{exponent})"),
        Expr::Rational(r) if r.is_negative() => format!("(-{})", fmt_rational(&r.abs())),
        Expr::Rational(r) => fmt_rational(r),
        Expr::Theta(x, y) => format!("f({}, {})", sum_level(x), sum_level(y)),
        Expr::RealPart(x) => format!("Re({})", sum_level(x)),
        Expr::ImagPart(x) => format!("Im({})", sum_level(x)),
        Expr::SpecializeQ(x) => format!("specq({})", sum_level(x)),
        _ => format!("({})", sum_level(e)),
    }
}
