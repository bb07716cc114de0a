//! Bottom-up evaluation of expressions to truncated series in one working field.
//!
//! Theta calls are the only truncated leaves. Inside a product each theta factor is
//! expanded far enough that, after multiplying by the other factors' lowest degrees, the
//! product is still exact through the requested degree.

use std::sync::Arc;

use crate::cyclotomic::{CycloNum, CyclotomicField};
use crate::error::{Error, Result};
use crate::exprlang::print_expr;
use crate::laurent::{LaurentSeries, Monomial, ScaledMonomial};
use crate::theta::{theta_expand, ThetaArgs};

use super::ast::{Expr, Var};

/// Evaluates `expr` in Q(zeta_order), exact through total degree `n`.
pub fn evaluate(expr: &Expr, n: i64, order: u64) -> Result<LaurentSeries> {
    let needed = expr.root_order();
    if order == 0 || order % needed != 0 {
        return Err(Error::IncompatibleOrders { from: needed, to: order });
    }
    let ev = Evaluator {
        field: CyclotomicField::new(order),
    };
    let out = ev.eval(expr, n)?;
    Ok(out.truncate(n))
}

struct Evaluator {
    field: Arc<CyclotomicField>,
}

impl Evaluator {
    fn eval(&self, expr: &Expr, budget: i64) -> Result<LaurentSeries> {
        match expr {
            Expr::Var(v) => {
                let (a, b) = match v {
                    Var::A | Var::Q => (1, 0),
                    Var::B => (0, 1),
                };
                Ok(LaurentSeries::monomial(&ScaledMonomial::unit(&self.field, a, b)))
            }
            Expr::Root { order, exponent } => {
                let step = (self.field.order() / order) as i64;
                Ok(LaurentSeries::constant(CycloNum::zeta_power(
                    &self.field,
                    exponent * step,
                )))
            }
            Expr::Rational(r) => Ok(LaurentSeries::constant(CycloNum::from_rational(
                &self.field,
                r.clone(),
            ))),
            Expr::Negate(x) => Ok(self.eval(x, budget)?.neg()),
            Expr::Sum(xs) => {
                let mut acc = LaurentSeries::zero(&self.field, crate::laurent::Validity::Exact);
                for x in xs {
                    acc = acc.add(&self.eval(x, budget)?)?;
                }
                Ok(acc)
            }
            Expr::Product(xs) => {
                let lows = xs
                    .iter()
                    .map(|x| self.lower_bound(x))
                    .collect::<Result<Vec<i64>>>()?;
                let total: i64 = lows.iter().sum();
                let mut acc = LaurentSeries::one(&self.field);
                for (x, low) in xs.iter().zip(&lows) {
                    let own = (budget - (total - low)).max(*low);
                    acc = acc.mul(&self.eval(x, own)?)?;
                }
                Ok(acc)
            }
            Expr::Power(x, e) if *e >= 0 => {
                let e = *e;
                if e == 0 {
                    return Ok(LaurentSeries::one(&self.field));
                }
                let low = self.lower_bound(x)?;
                let base = self.eval(x, (budget - (e - 1) * low).max(low))?;
                let mut acc = base.clone();
                for _ in 1..e {
                    acc = acc.mul(&base)?;
                }
                Ok(acc)
            }
            Expr::Power(x, e) => {
                let base = self.fold_monomial(x).map_err(|err| match err {
                    Error::NonMonomialArgument(s) => Error::NegativePowerOfSeries(s),
                    other => other,
                })?;
                let inv = ScaledMonomial::new(
                    base.coeff().inverse()?,
                    Monomial::new(-base.mono().a, -base.mono().b),
                )?;
                Ok(LaurentSeries::monomial(&inv.pow(e.unsigned_abs())))
            }
            Expr::Theta(x, y) => Ok(theta_expand(&self.theta_args(x, y)?, budget)),
            Expr::RealPart(x) => self
                .eval(x, budget)?
                .map_coeffs(|c| Ok(c.real_imag_parts()?.0)),
            Expr::ImagPart(x) => self
                .eval(x, budget)?
                .map_coeffs(|c| Ok(c.real_imag_parts()?.1)),
            Expr::SpecializeQ(x) => Ok(self.eval(x, budget)?.specialize_q()),
        }
    }

    fn theta_args(&self, x: &Expr, y: &Expr) -> Result<ThetaArgs> {
        ThetaArgs::new(self.fold_monomial(x)?, self.fold_monomial(y)?)
    }

    /// Constant-folds a theta-free expression to a single nonzero scaled monomial.
    fn fold_monomial(&self, x: &Expr) -> Result<ScaledMonomial> {
        let non_monomial = || Error::NonMonomialArgument(print_expr(x));
        if x.contains_theta() {
            return Err(non_monomial());
        }
        self.eval(x, 0)?.as_scaled_monomial().ok_or_else(non_monomial)
    }

    /// A lower bound on the smallest total degree of `expr`'s value.
    fn lower_bound(&self, expr: &Expr) -> Result<i64> {
        if !expr.contains_theta() {
            let exact = self.eval(expr, 0)?;
            return Ok(exact.min_total_degree().unwrap_or(0));
        }
        match expr {
            Expr::Theta(x, y) => Ok(self.theta_args(x, y)?.min_degree()),
            Expr::Sum(xs) => xs
                .iter()
                .map(|x| self.lower_bound(x))
                .try_fold(i64::MAX, |acc, b| Ok(acc.min(b?))),
            Expr::Product(xs) => xs.iter().map(|x| self.lower_bound(x)).sum(),
            Expr::Power(x, e) if *e >= 0 => Ok(e * self.lower_bound(x)?),
            Expr::Power(..) => Ok(0),
            Expr::Negate(x) | Expr::RealPart(x) | Expr::ImagPart(x) | Expr::SpecializeQ(x) => {
                self.lower_bound(x)
            }
            Expr::Var(_) | Expr::Root { .. } | Expr::Rational(_) => Ok(0),
        }
    }
}
