//! Residue-class dissection of `f(a, b)` and the root-of-unity transformation.
//!
//! `S_k` collects the terms of `f(a, b)` whose summation index is `k` mod `m`. It is
//! computed two ways that share nothing below the series layer:
//!
//! * [`dissect_filter`] walks the defining sum and keeps indices in the residue class;
//! * [`dissect_closed`] substitutes `n = m*j + k` and expands
//!   `a^(k(k+1)/2) b^(k(k-1)/2) f(A_m (ab)^(mk), B_m (ab)^(-mk))`.
//!
//! Summing `zeta^(k^2) S_k` over `k` gives `f(zeta a, zeta b)` for any `zeta` with
//! `zeta^m = 1`, primitive or not.

use num_integer::Roots;

use crate::cyclotomic::{CycloNum, CyclotomicField};
use crate::error::{Error, Result};
use crate::laurent::{LaurentSeries, Monomial, ScaledMonomial, Validity};
use crate::theta::{theta_expand, ThetaArgs};

/// Modulus, residue class, and the exponent `e` selecting the root `zeta_m^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DissectionSpec {
    m: i64,
    k: i64,
    zeta_exponent: i64,
}

impl DissectionSpec {
    pub fn new(m: i64, k: i64) -> Result<Self> {
        Self::with_zeta_exponent(m, k, 1)
    }

    pub fn with_zeta_exponent(m: i64, k: i64, zeta_exponent: i64) -> Result<Self> {
        if m < 1 || k < 0 || k >= m {
            return Err(Error::InvalidDissection { m, k });
        }
        Ok(Self { m, k, zeta_exponent })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn zeta_exponent(&self) -> i64 {
        self.zeta_exponent
    }
}

fn half_exact(numerator: i64) -> i64 {
    assert!(numerator % 2 == 0, "exponent {numerator}/2 is not an integer");
    numerator / 2
}

/// `(A_m, B_m) = (a^(m(m+1)/2) b^(m(m-1)/2), a^(m(m-1)/2) b^(m(m+1)/2))`.
pub fn boundary_monomials(m: i64) -> (Monomial, Monomial) {
    assert!(m >= 1, "modulus must be positive");
    let hi = half_exact(m * (m + 1));
    let lo = half_exact(m * (m - 1));
    (Monomial::new(hi, lo), Monomial::new(lo, hi))
}

/// The pieces of the closed form for `S_k`: the prefix monomial and the two theta
/// arguments `A_m (ab)^(mk)` and `B_m (ab)^(-mk)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub prefix: Monomial,
    pub first: Monomial,
    pub second: Monomial,
}

pub fn closed_form(spec: &DissectionSpec) -> ClosedForm {
    let (m, k) = (spec.m, spec.k);
    let (big_a, big_b) = boundary_monomials(m);
    let ab = Monomial::new(1, 1);
    let prefix = Monomial::new(half_exact(k * (k + 1)), half_exact(k * (k - 1)));
    let first = big_a.mul(ab.pow(m * k));
    let second = big_b.mul(ab.pow(-m * k));
    // same exponents as expanding (mj+k)(mj+k +- 1)/2 - k(k +- 1)/2 in j
    debug_assert_eq!(first, Monomial::new(half_exact(m * m + 2 * m * k + m), half_exact(m * m + 2 * m * k - m)));
    debug_assert_eq!(second, Monomial::new(half_exact(m * m - 2 * m * k - m), half_exact(m * m - 2 * m * k + m)));
    ClosedForm {
        prefix,
        first,
        second,
    }
}

/// `S_k` by filtering the defining sum: every `n = k (mod m)` with `n^2 <= n_max`.
pub fn dissect_filter(spec: &DissectionSpec, n_max: i64) -> LaurentSeries {
    let field = CyclotomicField::new(1);
    let one = CycloNum::one(&field);
    let reach = if n_max < 0 { -1 } else { n_max.sqrt() };
    let terms = (-reach..=reach)
        .filter(|n| n.rem_euclid(spec.m) == spec.k)
        .map(|n| {
            let mono = Monomial::new(half_exact(n * (n + 1)), half_exact(n * (n - 1)));
            (mono, one.clone())
        });
    LaurentSeries::from_terms(&field, terms, Validity::Through(n_max))
        .expect("rational field throughout")
}

/// `S_k` from the closed form, exact through total degree `n_max`.
pub fn dissect_closed(spec: &DissectionSpec, n_max: i64) -> LaurentSeries {
    let field = CyclotomicField::new(1);
    let form = closed_form(spec);
    let args = ThetaArgs::new(
        ScaledMonomial::unit(&field, form.first.a, form.first.b),
        ScaledMonomial::unit(&field, form.second.a, form.second.b),
    )
    .expect("argument degrees sum to 2m^2 > 0");
    let budget = n_max - form.prefix.total_degree();
    let inner = theta_expand(&args, budget);
    let out = inner
        .scale(&ScaledMonomial::unit(&field, form.prefix.a, form.prefix.b))
        .expect("rational field throughout");
    debug_assert_eq!(out.validity(), Validity::Through(n_max));
    out
}

/// `sum_k zeta^(k^2) S_k` with `zeta = zeta_m^e`, coefficients in Q(zeta_m).
pub fn transform_rhs(m: i64, zeta_exponent: i64, n_max: i64) -> Result<LaurentSeries> {
    if m < 1 {
        return Err(Error::InvalidDissection { m, k: 0 });
    }
    let field = CyclotomicField::new(m as u64);
    let mut total = LaurentSeries::zero(&field, Validity::Exact);
    for k in 0..m {
        let spec = DissectionSpec::with_zeta_exponent(m, k, zeta_exponent)?;
        let s_k = dissect_closed(&spec, n_max).embed(&field)?;
        let weight = CycloNum::zeta_power(&field, zeta_exponent * k * k);
        total = total.add(&s_k.scale_coeff(&weight)?)?;
    }
    Ok(total)
}

/// `f(zeta a, zeta b)` with `zeta = zeta_m^e`, expanded directly.
pub fn transform_lhs(m: i64, zeta_exponent: i64, n_max: i64) -> Result<LaurentSeries> {
    if m < 1 {
        return Err(Error::InvalidDissection { m, k: 0 });
    }
    let field = CyclotomicField::new(m as u64);
    let zeta = CycloNum::zeta_power(&field, zeta_exponent);
    let args = ThetaArgs::new(
        ScaledMonomial::new(zeta.clone(), Monomial::new(1, 0))?,
        ScaledMonomial::new(zeta, Monomial::new(0, 1))?,
    )?;
    Ok(theta_expand(&args, n_max))
}
