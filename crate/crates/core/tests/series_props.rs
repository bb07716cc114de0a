mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use theta_dissect::{
    CycloNum, CyclotomicField, LaurentSeries, Monomial, Validity,
};

fn series(field: Arc<CyclotomicField>) -> impl Strategy<Value = LaurentSeries> {
    let terms = prop::collection::vec(((-3i64..=6, -3i64..=6), -4i64..=4, 0i64..12), 0..8);
    (terms, prop::option::of(0i64..=12)).prop_map(move |(terms, bound)| {
        let validity = bound.map_or(Validity::Exact, Validity::Through);
        let terms = terms.into_iter().map(|((a, b), c, e)| {
            let coeff = CycloNum::zeta_power(&field, e).scale(&BigRational::from_integer(BigInt::from(c)));
            (Monomial::new(a, b), coeff)
        });
        LaurentSeries::from_terms(&field, terms, validity).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (LaurentSeries, LaurentSeries, LaurentSeries)> {
    prop::sample::select(vec![1u64, 3, 4, 12]).prop_flat_map(|order| {
        let f = CyclotomicField::new(order);
        (series(f.clone()), series(f.clone()), series(f))
    })
}

/// Brute product of the stored terms, with no truncation at all.
fn naive_product(x: &LaurentSeries, y: &LaurentSeries) -> LaurentSeries {
    let terms = x.terms().flat_map(|(mx, cx)| {
        y.terms()
            .map(move |(my, cy)| (mx.mul(*my), cx.checked_mul(cy).unwrap()))
    });
    LaurentSeries::from_terms(x.field(), terms.collect::<Vec<_>>(), Validity::Exact).unwrap()
}

fn agree(x: &LaurentSeries, y: &LaurentSeries) -> bool {
    let v = x.validity().min(y.validity());
    let n = v.bound().unwrap_or(40);
    x.equal_through(y, n).unwrap().is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_laws_within_validity((x, y, z) in triple()) {
        prop_assert!(agree(&x.add(&y).unwrap(), &y.add(&x).unwrap()));
        prop_assert!(agree(&x.mul(&y).unwrap(), &y.mul(&x).unwrap()));
        let lhs = x.mul(&y.add(&z).unwrap()).unwrap();
        let rhs = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        prop_assert!(agree(&lhs, &rhs));
        let l = x.mul(&y).unwrap().mul(&z).unwrap();
        let r = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert!(agree(&l, &r));
        prop_assert!(x.sub(&x).unwrap().is_empty());
    }

    #[test]
    fn product_validity_is_sound((x, y, _z) in triple()) {
        // Any completion of x and y above their bounds may only change the product
        // above the reported bound; check by completing with a far-away junk term.
        let p = x.mul(&y).unwrap();
        let naive = naive_product(&x, &y);
        if let Some(v) = p.validity().bound() {
            prop_assert!(p.equal_through(&naive.truncate(v), v).unwrap().is_none());
            let field = x.field().clone();
            let pad = |s: &LaurentSeries| -> LaurentSeries {
                let mut terms: Vec<(Monomial, CycloNum)> =
                    s.terms().map(|(m, c)| (*m, c.clone())).collect();
                if let Some(b) = s.validity().bound() {
                    terms.push((Monomial::new(b + 1, 0), CycloNum::one(&field)));
                    terms.push((Monomial::new(-1, b + 3), CycloNum::from_i64(&field, -7)));
                }
                LaurentSeries::from_terms(&field, terms, Validity::Exact).unwrap()
            };
            let completed = naive_product(&pad(&x), &pad(&y));
            prop_assert!(p.equal_through(&completed.truncate(v), v).unwrap().is_none());
        } else {
            prop_assert_eq!(p, naive);
        }
    }

    #[test]
    fn specialization_is_multiplicative((x, y, _z) in triple()) {
        let p = x.mul(&y).unwrap();
        let sp = x.specialize_q().mul(&y.specialize_q()).unwrap();
        prop_assert_eq!(p.specialize_q().validity(), p.validity());
        prop_assert!(agree(&p.specialize_q(), &sp));
        prop_assert!(agree(&x.add(&y).unwrap().specialize_q(), &x.specialize_q().add(&y.specialize_q()).unwrap()));
    }

    #[test]
    fn truncation_caps_validity((x, _y, _z) in triple(), n in -2i64..10) {
        let t = x.truncate(n);
        prop_assert!(t.validity() <= Validity::Through(n));
        prop_assert!(t.terms().all(|(m, _)| m.total_degree() <= n));
        prop_assert!(t.equal_through(&x, n.min(x.validity().bound().unwrap_or(n))).unwrap().is_none());
    }
}

#[test]
fn comparison_past_validity_is_an_error() {
    let f = CyclotomicField::new(1);
    let x = LaurentSeries::zero(&f, Validity::Through(5));
    let y = LaurentSeries::zero(&f, Validity::Exact);
    assert!(x.equal_through(&y, 5).unwrap().is_none());
    assert!(x.equal_through(&y, 6).is_err());
}
