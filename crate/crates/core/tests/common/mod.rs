//! Independent oracles shared by the integration suites. Nothing here calls the
//! engine's expansion code; the checks compare engine output against these.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;
use theta_dissect::catalog::ast::Var;
use theta_dissect::{CycloNum, Expr, CyclotomicField, LaurentSeries, Monomial, Validity};

pub const ORDERS: [u64; 7] = [1, 2, 3, 4, 6, 8, 12];

/// Numerical image of an element under `zeta_L -> exp(2 pi i / L)`.
pub fn complex_value(x: &CycloNum) -> (f64, f64) {
    let l = x.order() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in x.coeffs().iter().enumerate() {
        let c = c.to_f64().unwrap();
        let angle = 2.0 * PI * j as f64 / l;
        re += c * angle.cos();
        im += c * angle.sin();
    }
    (re, im)
}

pub fn close(x: (f64, f64), y: (f64, f64)) -> bool {
    let scale = 1.0 + x.0.abs() + x.1.abs() + y.0.abs() + y.1.abs();
    (x.0 - y.0).abs() < 1e-9 * scale && (x.1 - y.1).abs() < 1e-9 * scale
}

/// A random element with small rational coefficients, about a fifth of them zero.
pub fn random_element(rng: &mut impl Rng, field: &Arc<CyclotomicField>) -> CycloNum {
    let coeffs = (0..field.degree())
        .map(|_| {
            if rng.gen_bool(0.2) {
                BigRational::from_integer(BigInt::from(0))
            } else {
                BigRational::new(
                    BigInt::from(rng.gen_range(-9i64..=9)),
                    BigInt::from(rng.gen_range(1i64..=5)),
                )
            }
        })
        .collect();
    CycloNum::from_coeffs(field, coeffs)
}

/// Coefficients of a series in the group ring `Z[C_L]`: monomial -> count per root exponent.
pub type GroupRingSeries = BTreeMap<(i64, i64), Vec<i64>>;

/// `f(zeta^e1 a^p1 b^q1, zeta^e2 a^p2 b^q2)` by summing the defining series over a wide,
/// fixed index window and keeping total degree at most `n`.
pub fn brute_theta(order: u64, x: (i64, i64, i64), y: (i64, i64, i64), n: i64) -> GroupRingSeries {
    let mut out = GroupRingSeries::new();
    let l = order as i64;
    for idx in -400i64..=400 {
        let tx = idx * (idx + 1) / 2;
        let ty = idx * (idx - 1) / 2;
        let pa = x.1 * tx + y.1 * ty;
        let pb = x.2 * tx + y.2 * ty;
        if pa + pb > n {
            continue;
        }
        let e = (x.0 * tx + y.0 * ty).rem_euclid(l) as usize;
        out.entry((pa, pb)).or_insert_with(|| vec![0; order as usize])[e] += 1;
    }
    out
}

pub fn group_ring_to_series(field: &Arc<CyclotomicField>, g: &GroupRingSeries, n: i64) -> LaurentSeries {
    let terms = g.iter().map(|(&(a, b), counts)| {
        let mut c = CycloNum::zero(field);
        for (e, &k) in counts.iter().enumerate() {
            if k != 0 {
                let term = CycloNum::zeta_power(field, e as i64)
                    .scale(&BigRational::from_integer(BigInt::from(k)));
                c = c.checked_add(&term).unwrap();
            }
        }
        (Monomial::new(a, b), c)
    });
    LaurentSeries::from_terms(field, terms, Validity::Through(n)).unwrap()
}

/// Brute-force `f(x, y)` as a series in `Q(zeta_order)`.
pub fn brute_theta_series(order: u64, x: (i64, i64, i64), y: (i64, i64, i64), n: i64) -> LaurentSeries {
    let field = CyclotomicField::new(order);
    group_ring_to_series(&field, &brute_theta(order, x, y, n), n)
}

/// Univariate brute-force `f(q^u, q^v)` as `{degree: coefficient}`.
pub fn brute_q_theta(u: i64, v: i64, n: i64) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for idx in -400i64..=400 {
        let d = u * (idx * (idx + 1) / 2) + v * (idx * (idx - 1) / 2);
        if d <= n {
            *out.entry(d).or_insert(0) += 1;
        }
    }
    out
}

pub fn shift_q(s: &BTreeMap<i64, i64>, by: i64, n: i64) -> BTreeMap<i64, i64> {
    s.iter()
        .map(|(d, c)| (d + by, *c))
        .filter(|(d, _)| *d <= n)
        .collect()
}

pub fn add_q(x: &BTreeMap<i64, i64>, y: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = x.clone();
    for (d, c) in y {
        *out.entry(*d).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// A rational-coefficient univariate series (stored in the `a` slot) as `{degree: coefficient}`.
pub fn q_coefficients(s: &LaurentSeries, n: i64) -> BTreeMap<i64, i64> {
    s.terms()
        .filter(|(m, _)| m.total_degree() <= n)
        .map(|(m, c)| {
            assert_eq!(m.b, 0, "not a univariate series");
            let r = c.as_rational().expect("rational coefficient");
            assert!(r.is_integer());
            (m.a, r.to_integer().to_i64().unwrap())
        })
        .collect()
}

fn leaf_expr() -> impl Strategy<Value = Expr> {
    prop_oneof![
        prop::sample::select(vec![Var::A, Var::B, Var::Q]).prop_map(Expr::Var),
        (1u64..=12, 0i64..12).prop_map(|(order, exponent)| Expr::Root { order, exponent }),
        (0i64..50, 1i64..7).prop_map(|(p, q)| Expr::Rational(BigRational::new(
            BigInt::from(p),
            BigInt::from(q)
        ))),
    ]
}

/// Trees in the parser's canonical shape: nonnegative rationals, and sums and
/// products with at least two children.
pub fn canonical_expr() -> impl Strategy<Value = Expr> {
    leaf_expr().prop_recursive(5, 48, 4, |inner| {
        let boxed = inner.clone().prop_map(Box::new);
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Sum),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Product),
            (boxed.clone(), -5i64..=5).prop_map(|(b, e)| Expr::Power(b, e)),
            (boxed.clone(), boxed.clone()).prop_map(|(x, y)| Expr::Theta(x, y)),
            boxed.clone().prop_map(Expr::Negate),
            boxed.clone().prop_map(Expr::RealPart),
            boxed.clone().prop_map(Expr::ImagPart),
            boxed.prop_map(Expr::SpecializeQ),
        ]
    })
}

