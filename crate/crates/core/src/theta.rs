//! The theta kernel `f(x, y) = sum_n x^(n(n+1)/2) y^(n(n-1)/2)` at scaled-monomial
//! arguments, q-Pochhammer products, and the triple-product side.
//!
//! Convergence is formal: with `d1`, `d2` the total degrees of the two arguments, the
//! index-`n` term has degree `D(n) = d1*n(n+1)/2 + d2*n(n-1)/2`, and each degree carries
//! finitely many terms exactly when `d1 + d2 > 0`.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::laurent::{LaurentSeries, ScaledMonomial, Validity};

/// The argument pair of a theta call; guarantees `d1 + d2 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaArgs {
    first: ScaledMonomial,
    second: ScaledMonomial,
}

impl ThetaArgs {
    pub fn new(first: ScaledMonomial, second: ScaledMonomial) -> Result<Self> {
        if first.order() != second.order() {
            return Err(Error::OrderMismatch {
                left: first.order(),
                right: second.order(),
            });
        }
        let total = first.total_degree() + second.total_degree();
        if total <= 0 {
            return Err(Error::NonConvergent(total));
        }
        Ok(Self { first, second })
    }

    pub fn first(&self) -> &ScaledMonomial {
        &self.first
    }

    pub fn second(&self) -> &ScaledMonomial {
        &self.second
    }

    fn degrees(&self) -> (i64, i64) {
        (self.first.total_degree(), self.second.total_degree())
    }

    /// Smallest total degree of any term in the expansion.
    pub fn min_degree(&self) -> i64 {
        let (d1, d2) = self.degrees();
        term_degree(d1, d2, nearest_vertex(d1, d2))
    }
}

fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Total degree of the index-`n` term.
pub fn term_degree(d1: i64, d2: i64, n: i64) -> i64 {
    d1 * triangular(n) + d2 * triangular(n - 1)
}

/// The integer nearest to the vertex `-(d1 - d2) / (2 (d1 + d2))` of `D`.
fn nearest_vertex(d1: i64, d2: i64) -> i64 {
    // round(-(d1 - d2) / (2s)) = floor((2(d2 - d1) + 2s) / 4s) with s = d1 + d2 > 0
    let s = d1 + d2;
    (2 * (d2 - d1) + 2 * s).div_euclid(4 * s)
}

/// All indices `n` with `D(n) <= bound`, found by walking outward from the vertex.
pub fn index_range(d1: i64, d2: i64, bound: i64) -> Option<RangeInclusive<i64>> {
    assert!(d1 + d2 > 0, "index_range needs d1 + d2 > 0");
    let start = nearest_vertex(d1, d2);
    if term_degree(d1, d2, start) > bound {
        return None;
    }
    let mut hi = start;
    while term_degree(d1, d2, hi + 1) <= bound {
        hi += 1;
    }
    let mut lo = start;
    while term_degree(d1, d2, lo - 1) <= bound {
        lo -= 1;
    }
    Some(lo..=hi)
}

/// Expands `f(args)` through total degree `n`. Negative `n` is accepted and keeps only
/// the negative-degree terms, which internal callers use when a prefix monomial will
/// shift the result back up.
pub fn theta_expand(args: &ThetaArgs, n: i64) -> LaurentSeries {
    let field = args.first.coeff().field().clone();
    let (d1, d2) = args.degrees();
    let mut terms = Vec::new();
    if let Some(range) = index_range(d1, d2, n) {
        for idx in range {
            let e1 = triangular(idx) as u64;
            let e2 = triangular(idx - 1) as u64;
            let x = args.first.pow(e1);
            let y = args.second.pow(e2);
            let t = x.mul(&y).expect("arguments share one field");
            terms.push((t.mono(), t.coeff().clone()));
        }
    }
    LaurentSeries::from_terms(&field, terms, Validity::Through(n))
        .expect("terms are built in the argument field")
}

/// `(x; qq)_inf` through total degree `n`.
pub fn pochhammer_expand(x: &ScaledMonomial, qq: &ScaledMonomial, n: i64) -> Result<LaurentSeries> {
    let step = qq.total_degree();
    if step <= 0 {
        return Err(Error::NonConvergent(step));
    }
    let field = x.coeff().field().clone();
    let dx = x.total_degree();
    // factors with negative degree lower the product's floor; they are finitely many
    let neg_total: i64 = (0..)
        .map(|k| dx + k * step)
        .take_while(|&d| d < 0)
        .sum();
    let mut product = LaurentSeries::one(&field);
    let mut remaining_neg = neg_total;
    let mut power = ScaledMonomial::unit(&field, 0, 0);
    let mut k = 0;
    loop {
        let term = x.mul(&power)?;
        let d = term.total_degree();
        if d > n - neg_total {
            break;
        }
        if d < 0 {
            remaining_neg -= d;
        }
        let factor = LaurentSeries::one(&field).sub(&LaurentSeries::monomial(&term))?;
        product = product.mul(&factor)?.truncate(n - remaining_neg);
        power = power.mul(qq)?;
        k += 1;
        debug_assert!(k < 1 << 20);
    }
    Ok(product.truncate(n))
}

/// `(-x; xy)_inf (-y; xy)_inf (xy; xy)_inf` through total degree `n`.
pub fn triple_product_rhs(args: &ThetaArgs, n: i64) -> Result<LaurentSeries> {
    let (d1, d2) = args.degrees();
    if d1 <= 0 || d2 <= 0 {
        return Err(Error::NonConvergent(d1.min(d2)));
    }
    let xy = args.first.mul(&args.second)?;
    let p1 = pochhammer_expand(&args.first.negate(), &xy, n)?;
    let p2 = pochhammer_expand(&args.second.negate(), &xy, n)?;
    let p3 = pochhammer_expand(&xy, &xy, n)?;
    Ok(p1.mul(&p2)?.mul(&p3)?.truncate(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{CycloNum, CyclotomicField};
    use crate::laurent::Monomial;

    fn unit_args(l: u64, x: (i64, i64), y: (i64, i64)) -> ThetaArgs {
        let f = CyclotomicField::new(l);
        ThetaArgs::new(
            ScaledMonomial::unit(&f, x.0, x.1),
            ScaledMonomial::unit(&f, y.0, y.1),
        )
        .unwrap()
    }

    fn scaled(c: CycloNum, a: i64, b: i64) -> ScaledMonomial {
        ScaledMonomial::new(c, Monomial::new(a, b)).unwrap()
    }

    #[test]
    fn plain_theta_through_nine() {
        let s = theta_expand(&unit_args(1, (1, 0), (0, 1)), 9);
        assert_eq!(s.to_string(), "1 + a + b + a^3*b + a*b^3 + a^6*b^3 + a^3*b^6");
        assert_eq!(s.validity(), Validity::Through(9));
    }

    #[test]
    fn negated_arguments() {
        let f = CyclotomicField::new(1);
        let m1 = CycloNum::from_i64(&f, -1);
        let args = ThetaArgs::new(scaled(m1.clone(), 1, 0), scaled(m1, 0, 1)).unwrap();
        assert_eq!(theta_expand(&args, 4).to_string(), "1 - a - b + a^3*b + a*b^3");
    }

    #[test]
    fn imaginary_unit_arguments() {
        // brute force i^(n^2) for n in -2..=2
        let f = CyclotomicField::new(4);
        let i = CycloNum::zeta_power(&f, 1);
        let args = ThetaArgs::new(scaled(i.clone(), 1, 0), scaled(i.clone(), 0, 1)).unwrap();
        let mut expected = Vec::new();
        for n in -2i64..=2 {
            let mono = Monomial::new(n * (n + 1) / 2, n * (n - 1) / 2);
            if mono.total_degree() <= 4 {
                expected.push((mono, CycloNum::zeta_power(&f, n * n)));
            }
        }
        let expected = LaurentSeries::from_terms(&f, expected, Validity::Through(4)).unwrap();
        let got = theta_expand(&args, 4);
        assert_eq!(got, expected);
        assert_eq!(got.to_string(), "1 + i*a + i*b + a^3*b + a*b^3");
    }

    #[test]
    fn degenerate_arguments_rejected() {
        let f = CyclotomicField::new(1);
        assert_eq!(
            ThetaArgs::new(ScaledMonomial::unit(&f, 1, 0), ScaledMonomial::unit(&f, -1, 0)),
            Err(Error::NonConvergent(0))
        );
    }

    #[test]
    fn index_range_is_complete() {
        for d1 in -6..=10 {
            for d2 in -6..=10 {
                if d1 + d2 <= 0 {
                    continue;
                }
                for bound in -20..=40 {
                    let found: Vec<i64> = index_range(d1, d2, bound).into_iter().flatten().collect();
                    let (lo, hi) = match (found.first(), found.last()) {
                        (Some(&lo), Some(&hi)) => (lo - 5, hi + 5),
                        _ => (-30, 30),
                    };
                    let scan: Vec<i64> = (lo.min(-30)..=hi.max(30))
                        .filter(|&n| term_degree(d1, d2, n) <= bound)
                        .collect();
                    assert_eq!(found, scan, "d1={d1} d2={d2} bound={bound}");
                }
            }
        }
    }

    #[test]
    fn min_degree_matches_expansion() {
        let args = unit_args(1, (22, 18), (-6, -2));
        assert_eq!(args.min_degree(), -8);
        let s = theta_expand(&args, 10);
        assert_eq!(s.min_total_degree(), Ok(-8));
    }

    #[test]
    fn pochhammer_examples() {
        let f = CyclotomicField::new(1);
        let s = pochhammer_expand(&ScaledMonomial::unit(&f, 1, 0), &ScaledMonomial::unit(&f, 1, 1), 2)
            .unwrap();
        assert_eq!(s.to_string(), "1 - a");
        let t = pochhammer_expand(&ScaledMonomial::unit(&f, 4, 0), &ScaledMonomial::unit(&f, 1, 0), 3)
            .unwrap();
        assert_eq!(t.to_string(), "1");
        assert_eq!(
            pochhammer_expand(&ScaledMonomial::unit(&f, 1, 0), &ScaledMonomial::unit(&f, 1, -1), 3),
            Err(Error::NonConvergent(0))
        );
    }

    #[test]
    fn pochhammer_with_negative_leading_factor() {
        // (a^-2; a)_inf through degree 2, against direct expansion of the finite product
        // of all factors that can reach degree <= 2 after the floor of -2 - 1 = -3
        let f = CyclotomicField::new(1);
        let got = pochhammer_expand(&ScaledMonomial::unit(&f, -2, 0), &ScaledMonomial::unit(&f, 1, 0), 2)
            .unwrap();
        let mut brute = LaurentSeries::one(&f);
        for k in 0..12 {
            let t = LaurentSeries::monomial(&ScaledMonomial::unit(&f, k - 2, 0));
            brute = brute.mul(&LaurentSeries::one(&f).sub(&t).unwrap()).unwrap();
        }
        assert_eq!(got.equal_through(&brute.truncate(2), 2).unwrap(), None);
    }

    #[test]
    fn triple_product_small_cases() {
        let args = unit_args(1, (1, 0), (0, 1));
        assert_eq!(triple_product_rhs(&args, 9).unwrap(), theta_expand(&args, 9));
        let args = unit_args(1, (3, 1), (1, 3));
        assert_eq!(triple_product_rhs(&args, 16).unwrap(), theta_expand(&args, 16));
        assert!(triple_product_rhs(&args, 0).unwrap().as_scaled_monomial().is_none());
        assert_eq!(triple_product_rhs(&args, 0).unwrap().to_string(), "1");
        let bad = unit_args(1, (5, 3), (-1, 1));
        assert_eq!(triple_product_rhs(&bad, 4), Err(Error::NonConvergent(0)));
    }

    #[test]
    fn theta_is_symmetric() {
        for (x, y) in [((1, 0), (0, 1)), ((3, 1), (1, 3)), ((5, 3), (-1, 1))] {
            for n in [0, 7, 30] {
                assert_eq!(
                    theta_expand(&unit_args(1, x, y), n),
                    theta_expand(&unit_args(1, y, x), n)
                );
            }
        }
    }
}
