//! Named theta identities, their evaluation, and verification reports.

pub mod ast;
mod eval;
mod report;

use std::time::Instant;

use rayon::prelude::*;

use crate::cyclotomic::lcm;
use crate::dissect::{closed_form, DissectionSpec};
use crate::error::Result;
use crate::exprlang::{parse_identity, print_expr, ParseError};
use crate::laurent::LaurentSeries;

pub use ast::{Expr, Var};
pub use eval::evaluate;
pub use report::{MismatchReport, Report, RunDocument, Status, Summary};

pub const DEFAULT_DEGREE: i64 = 60;

/// A named equation `lhs = rhs`, verified in Q(zeta_L) with `L` the lcm of the root
/// orders on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub required_order: u64,
    pub reference: String,
    pub default_degree: i64,
}

impl Identity {
    pub fn new(name: impl Into<String>, lhs: Expr, rhs: Expr, reference: impl Into<String>) -> Self {
        let required_order = lcm(lhs.root_order(), rhs.root_order());
        Self {
            name: name.into(),
            lhs,
            rhs,
            required_order,
            reference: reference.into(),
            default_degree: DEFAULT_DEGREE,
        }
    }

    pub fn parse(
        name: impl Into<String>,
        text: &str,
        reference: impl Into<String>,
    ) -> std::result::Result<Self, ParseError> {
        let (lhs, rhs) = parse_identity(text)?;
        Ok(Self::new(name, lhs, rhs, reference))
    }

    /// `lhs = rhs` in the surface syntax.
    pub fn render(&self) -> String {
        format!("{} = {}", print_expr(&self.lhs), print_expr(&self.rhs))
    }

    /// Both sides through degree `n` in Q(zeta_order).
    pub fn evaluate_sides(&self, n: i64, order: u64) -> Result<(LaurentSeries, LaurentSeries)> {
        Ok((evaluate(&self.lhs, n, order)?, evaluate(&self.rhs, n, order)?))
    }
}

/// Verifies `id` through total degree `n` in its required order.
pub fn verify_identity(id: &Identity, n: i64) -> Report {
    verify_identity_in(id, n, id.required_order)
}

/// Verifies `id` in Q(zeta_order); `order` must be a multiple of `id.required_order`.
/// Evaluation errors end up in the report, never in a panic or `Err`.
pub fn verify_identity_in(id: &Identity, n: i64, order: u64) -> Report {
    let started = Instant::now();
    let outcome = id
        .evaluate_sides(n, order)
        .and_then(|(l, r)| Ok((l.equal_through(&r, n)?, l, r)));
    let millis = started.elapsed().as_millis() as u64;
    let mut report = Report {
        name: id.name.clone(),
        reference: id.reference.clone(),
        degree: n,
        status: Status::Verified,
        first_mismatch: None,
        lhs_terms: 0,
        rhs_terms: 0,
        millis,
        error: None,
    };
    match outcome {
        Ok((mismatch, l, r)) => {
            report.lhs_terms = l.len();
            report.rhs_terms = r.len();
            if let Some(m) = mismatch {
                report.status = Status::Failed;
                report.first_mismatch = Some(MismatchReport::from(&m));
            }
        }
        Err(e) => {
            report.status = Status::Error;
            report.error = Some(e.to_string());
        }
    }
    report
}

/// Verifies every identity, fanning out across the current rayon pool. Reports come back
/// sorted by name regardless of completion order.
pub fn verify_all(ids: &[Identity], n: Option<i64>, order: Option<u64>) -> Vec<Report> {
    let mut reports: Vec<Report> = ids
        .par_iter()
        .map(|id| {
            let degree = n.unwrap_or(id.default_degree);
            verify_identity_in(id, degree, order.unwrap_or(id.required_order))
        })
        .collect();
    reports.sort_by(|x, y| x.name.cmp(&y.name));
    reports
}

/// `f(zeta_m a, zeta_m b) = sum_k zeta_m^(k^2) a^.. b^.. f(A_m (ab)^(mk), B_m (ab)^(-mk))`
/// as a generated expression pair.
pub fn transformation_identity(m: i64) -> Identity {
    let order = m as u64;
    let zeta = || Expr::Root { order, exponent: 1 };
    let lhs = Expr::theta(
        Expr::Product(vec![zeta(), Expr::Var(Var::A)]),
        Expr::Product(vec![zeta(), Expr::Var(Var::B)]),
    );
    let mut terms = Vec::new();
    for k in 0..m {
        let form = closed_form(&DissectionSpec::new(m, k).expect("0 <= k < m"));
        let mut factors = Vec::new();
        let weight = (k * k).rem_euclid(m);
        if weight != 0 {
            factors.push(Expr::Root { order, exponent: weight });
        }
        if form.prefix.a != 0 || form.prefix.b != 0 {
            factors.push(Expr::monomial(form.prefix.a, form.prefix.b));
        }
        factors.push(Expr::theta(
            Expr::monomial(form.first.a, form.first.b),
            Expr::monomial(form.second.a, form.second.b),
        ));
        // a^p*b^q prefixes are themselves products; flatten so printing round-trips
        let flat: Vec<Expr> = factors
            .into_iter()
            .flat_map(|f| match f {
                Expr::Product(xs) => xs,
                other => vec![other],
            })
            .collect();
        terms.push(if flat.len() == 1 {
            flat.into_iter().next().unwrap()
        } else {
            Expr::Product(flat)
        });
    }
    let rhs = if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        Expr::Sum(terms)
    };
    Identity::new(
        format!("thm_m{m}"),
        lhs,
        rhs,
        format!("generalized root-of-unity transformation, m = {m}"),
    )
}

const HAND_WRITTEN: &[(&str, &str, &str)] = &[
    (
        "entry30_ii",
        "f(a^3*b, a*b^3) = 1/2*(f(a, b) + f(-a, -b))",
        "Ramanujan's Notebooks, Part III, p. 46, Entry 30(ii)",
    ),
    (
        "entry30_iii",
        "a*f(a^5*b^3, a^-1*b) = 1/2*(f(a, b) - f(-a, -b))",
        "Ramanujan's Notebooks, Part III, p. 46, Entry 30(iii)",
    ),
    (
        "entry25_i",
        "specq(f(a^3*b, a*b^3)) = 1/2*(f(q, q) + f(-q, -q))",
        "Ramanujan's Notebooks, Part III, p. 40, Entry 25(i)",
    ),
    (
        "entry25_ii",
        "specq(a*f(a^5*b^3, a^-1*b)) = 1/2*(f(q, q) - f(-q, -q))",
        "Ramanujan's Notebooks, Part III, p. 40, Entry 25(ii)",
    ),
    (
        "entry7",
        "f(omega*a, omega*b) = omega*f(a, b) + (1 - omega)*f(a^6*b^3, a^3*b^6)",
        "Ramanujan's Notebooks, Part IV, p. 144, Entry 7",
    ),
    (
        "entry9a",
        "f(i*a, i*b) = f(a^10*b^6, a^6*b^10) + a^3*b*f(a^18*b^14, a^-2*b^2) \
         + i*(a*f(a^14*b^10, a^2*b^6) + a^6*b^3*f(a^22*b^18, a^-6*b^-2))",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (four-term dissection form)",
    ),
    (
        "entry9b",
        "f(i*a, i*b) = 1/2*(1 + i)*f(a, b) + 1/2*(1 - i)*f(-a, -b)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (compact form)",
    ),
    (
        "remark_re",
        "Re(f(i*a, i*b)) = f(a^10*b^6, a^6*b^10) + a^3*b*f(a^18*b^14, a^-2*b^2)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (real part, even components)",
    ),
    (
        "remark_re_even",
        "f(a^10*b^6, a^6*b^10) + a^3*b*f(a^18*b^14, a^-2*b^2) = f(a^3*b, a*b^3)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 with Part III, Entry 30(ii)",
    ),
    (
        "remark_im",
        "Im(f(i*a, i*b)) = a*f(a^14*b^10, a^2*b^6) + a^6*b^3*f(a^22*b^18, a^-6*b^-2)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (imaginary part, odd components)",
    ),
    (
        "remark_im_odd",
        "a*f(a^14*b^10, a^2*b^6) + a^6*b^3*f(a^22*b^18, a^-6*b^-2) = a*f(a^5*b^3, a^-1*b)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 with Part III, Entry 30(iii)",
    ),
    (
        "remark_q_re",
        "specq(Re(f(i*a, i*b))) = f(q^16, q^16) + q^4*f(q^32, 1)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (real part at a = b = q)",
    ),
    (
        "remark_q_re_half",
        "f(q^16, q^16) + q^4*f(q^32, 1) = 1/2*(f(q, q) + f(-q, -q))",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (real part at a = b = q)",
    ),
    (
        "remark_q_im",
        "specq(Im(f(i*a, i*b))) = q*f(q^24, q^8) + q^9*f(q^40, q^-8)",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (imaginary part at a = b = q)",
    ),
    (
        "remark_q_im_half",
        "q*f(q^24, q^8) + q^9*f(q^40, q^-8) = 1/2*(f(q, q) - f(-q, -q))",
        "Ramanujan's Notebooks, Part IV, p. 146, Entry 9 (imaginary part at a = b = q)",
    ),
];

/// The built-in identities, sorted by name.
pub fn builtin_catalog() -> Vec<Identity> {
    let mut out: Vec<Identity> = HAND_WRITTEN
        .iter()
        .map(|(name, text, reference)| {
            Identity::parse(*name, text, *reference).expect("built-in identities parse")
        })
        .collect();
    out.extend((2..=8).map(transformation_identity));
    out.sort_by(|x, y| x.name.cmp(&y.name));
    out
}

pub fn find_identity<'c>(catalog: &'c [Identity], name: &str) -> Option<&'c Identity> {
    catalog.iter().find(|id| id.name == name)
}
