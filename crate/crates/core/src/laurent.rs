//! Sparse bivariate Laurent series in `a` and `b`, graded by total degree.
//!
//! Every series carries a validity bound: the largest total degree through which its
//! stored terms are exact. Arithmetic propagates the bound, and comparisons refuse to
//! look past it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::cyclotomic::{fmt_rational, CycloNum, CyclotomicField};
use crate::error::{Error, Result};

/// Exponent pair `a^p * b^q`. Negative exponents are allowed.
///
/// Ordered by total degree, then by descending `a`-exponent, which is the order used
/// for rendering and for locating the first mismatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: i64,
    pub b: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn total_degree(self) -> i64 {
        self.a + self.b
    }

    pub fn mul(self, other: Self) -> Self {
        Self::new(self.a + other.a, self.b + other.b)
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.a * e, self.b * e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |var: &str, e: i64| match e {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{e}")),
        };
        let parts: Vec<String> = [part("a", self.a), part("b", self.b)]
            .into_iter()
            .flatten()
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A nonzero coefficient times a monomial; the only admissible theta argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMonomial {
    coeff: CycloNum,
    mono: Monomial,
}

impl ScaledMonomial {
    pub fn new(coeff: CycloNum, mono: Monomial) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(Self { coeff, mono })
    }

    /// `1 * a^p * b^q` in the given field.
    pub fn unit(field: &Arc<CyclotomicField>, a: i64, b: i64) -> Self {
        Self {
            coeff: CycloNum::one(field),
            mono: Monomial::new(a, b),
        }
    }

    pub fn coeff(&self) -> &CycloNum {
        &self.coeff
    }

    pub fn mono(&self) -> Monomial {
        self.mono
    }

    pub fn total_degree(&self) -> i64 {
        self.mono.total_degree()
    }

    pub fn order(&self) -> u64 {
        self.coeff.order()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            coeff: self.coeff.checked_mul(&other.coeff)?,
            mono: self.mono.mul(other.mono),
        })
    }

    pub fn negate(&self) -> Self {
        Self {
            coeff: -&self.coeff,
            mono: self.mono,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        Self {
            coeff: self.coeff.pow(e),
            mono: self.mono.pow(e as i64),
        }
    }
}

impl fmt::Display for ScaledMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(&self.coeff, self.mono))
    }
}

/// Exactness bound of a series. `Exact` marks a finite polynomial with no truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Validity {
    Through(i64),
    Exact,
}

impl Validity {
    pub fn shift(self, by: i64) -> Self {
        match self {
            Validity::Through(v) => Validity::Through(v + by),
            Validity::Exact => Validity::Exact,
        }
    }

    pub fn covers(self, degree: i64) -> bool {
        match self {
            Validity::Through(v) => degree <= v,
            Validity::Exact => true,
        }
    }

    pub fn bound(self) -> Option<i64> {
        match self {
            Validity::Through(v) => Some(v),
            Validity::Exact => None,
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validity::Through(v) => write!(f, "{v}"),
            Validity::Exact => f.write_str("exact"),
        }
    }
}

/// The first monomial (in rendering order) where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub left: CycloNum,
    pub right: CycloNum,
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    field: Arc<CyclotomicField>,
    terms: BTreeMap<Monomial, CycloNum>,
    validity: Validity,
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentSeries[L={}, V={}]({})", self.order(), self.validity, self)
    }
}

impl LaurentSeries {
    pub fn zero(field: &Arc<CyclotomicField>, validity: Validity) -> Self {
        Self {
            field: field.clone(),
            terms: BTreeMap::new(),
            validity,
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::constant(CycloNum::one(field))
    }

    /// An exact constant.
    pub fn constant(c: CycloNum) -> Self {
        let field = c.field().clone();
        let mut s = Self::zero(&field, Validity::Exact);
        s.insert(Monomial::ONE, c);
        s
    }

    /// The exact single-term series `s`.
    pub fn monomial(s: &ScaledMonomial) -> Self {
        let mut out = Self::zero(s.coeff.field(), Validity::Exact);
        out.insert(s.mono, s.coeff.clone());
        out
    }

    /// Builds a series from terms; monomials beyond the validity bound are dropped and
    /// repeated monomials are summed.
    pub fn from_terms(
        field: &Arc<CyclotomicField>,
        terms: impl IntoIterator<Item = (Monomial, CycloNum)>,
        validity: Validity,
    ) -> Result<Self> {
        let mut out = Self::zero(field, validity);
        for (m, c) in terms {
            if c.order() != field.order() {
                return Err(Error::OrderMismatch {
                    left: field.order(),
                    right: c.order(),
                });
            }
            if validity.covers(m.total_degree()) {
                out.accumulate(m, &c);
            }
        }
        out.prune();
        Ok(out)
    }

    fn insert(&mut self, m: Monomial, c: CycloNum) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn accumulate(&mut self, m: Monomial, c: &CycloNum) {
        match self.terms.get_mut(&m) {
            Some(slot) => slot.add_assign_unchecked(c),
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&CycloNum> {
        self.terms.get(&m)
    }

    /// The single scaled monomial this series consists of, if it is exact and has
    /// exactly one term.
    pub fn as_scaled_monomial(&self) -> Option<ScaledMonomial> {
        if self.validity != Validity::Exact || self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(ScaledMonomial {
            coeff: c.clone(),
            mono: *m,
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Smallest stored total degree.
    pub fn min_total_degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .map(|m| m.total_degree())
            .ok_or(Error::EmptySeries)
    }

    /// Lowest degree the untruncated series can have: the first stored term, or just past
    /// the bound when nothing is stored. `None` for the exact zero polynomial.
    fn lowest_possible_degree(&self) -> Option<i64> {
        match (self.terms.keys().next(), self.validity) {
            (Some(m), _) => Some(m.total_degree()),
            (None, Validity::Through(v)) => Some(v + 1),
            (None, Validity::Exact) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let validity = self.validity.min(other.validity);
        let mut out = Self::zero(&self.field, validity);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            if validity.covers(m.total_degree()) {
                out.accumulate(*m, c);
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            validity: self.validity,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Truncated product. The result is exact through
    /// `min(V_x + mindeg(y), V_y + mindeg(x))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let (Some(low_x), Some(low_y)) = (self.lowest_possible_degree(), other.lowest_possible_degree())
        else {
            // one factor is the exact zero polynomial
            return Ok(Self::zero(&self.field, Validity::Exact));
        };
        let validity = self.validity.shift(low_y).min(other.validity.shift(low_x));
        let mut out = Self::zero(&self.field, validity);
        for (mx, cx) in &self.terms {
            let dx = mx.total_degree();
            if !validity.covers(dx + low_y) {
                break;
            }
            for (my, cy) in &other.terms {
                if !validity.covers(dx + my.total_degree()) {
                    break;
                }
                let prod = cx.mul_unchecked(cy);
                out.accumulate(mx.mul(*my), &prod);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Multiplies every term by `s`; the validity bound moves by `deg(s)`.
    pub fn scale(&self, s: &ScaledMonomial) -> Result<Self> {
        if self.order() != s.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: s.order(),
            });
        }
        let one = s.coeff.is_one();
        Ok(Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if one { c.clone() } else { c.mul_unchecked(&s.coeff) };
                    (m.mul(s.mono), c)
                })
                .collect(),
            validity: self.validity.shift(s.total_degree()),
        })
    }

    /// Multiplies every coefficient by a field constant.
    pub fn scale_coeff(&self, c: &CycloNum) -> Result<Self> {
        self.scale(&ScaledMonomial::new(c.clone(), Monomial::ONE)?)
            .or_else(|e| match e {
                Error::ZeroCoefficient => Ok(Self::zero(&self.field, self.validity)),
                e => Err(e),
            })
    }

    /// Applies `f` to every coefficient, keeping monomials and validity.
    pub fn map_coeffs(&self, f: impl Fn(&CycloNum) -> Result<CycloNum>) -> Result<Self> {
        let mut out = Self::zero(&self.field, self.validity);
        for (m, c) in &self.terms {
            out.insert(*m, f(c)?);
        }
        Ok(out)
    }

    /// Coefficientwise embedding into a larger cyclotomic field.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        if target.order() % self.order() != 0 {
            return Err(Error::IncompatibleOrders {
                from: self.order(),
                to: target.order(),
            });
        }
        let mut out = Self::zero(target, self.validity);
        for (m, c) in &self.terms {
            out.insert(*m, c.embed(target)?);
        }
        Ok(out)
    }

    /// Drops every term above total degree `n` and caps the validity at `n`.
    pub fn truncate(&self, n: i64) -> Self {
        let validity = self.validity.min(Validity::Through(n));
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
            validity,
        }
    }

    /// Collapses `a^p b^q` to `a^(p+q)`, the univariate specialization `a = b = q`.
    pub fn specialize_q(&self) -> Self {
        let mut out = Self::zero(&self.field, self.validity);
        for (m, c) in &self.terms {
            out.accumulate(Monomial::new(m.total_degree(), 0), c);
        }
        out.prune();
        out
    }

    /// Compares coefficients on every monomial of total degree at most `n`.
    pub fn equal_through(&self, other: &Self, n: i64) -> Result<Option<Mismatch>> {
        self.check_order(other)?;
        let validity = self.validity.min(other.validity);
        if let Validity::Through(v) = validity {
            if n > v {
                return Err(Error::ValidityExceeded {
                    requested: n,
                    validity: v,
                });
            }
        }
        let zero = CycloNum::zero(&self.field);
        let mut left = self.terms.iter().take_while(|(m, _)| m.total_degree() <= n).peekable();
        let mut right = other.terms.iter().take_while(|(m, _)| m.total_degree() <= n).peekable();
        loop {
            let mismatch = match (left.peek(), right.peek()) {
                (None, None) => return Ok(None),
                (Some((ml, cl)), None) => (**ml, (*cl).clone(), zero.clone()),
                (None, Some((mr, cr))) => (**mr, zero.clone(), (*cr).clone()),
                (Some((ml, cl)), Some((mr, cr))) => match ml.cmp(mr) {
                    Ordering::Less => (**ml, (*cl).clone(), zero.clone()),
                    Ordering::Greater => (**mr, zero.clone(), (*cr).clone()),
                    Ordering::Equal => {
                        if cl != cr {
                            (**ml, (*cl).clone(), (*cr).clone())
                        } else {
                            left.next();
                            right.next();
                            continue;
                        }
                    }
                },
            };
            return Ok(Some(Mismatch {
                monomial: mismatch.0,
                left: mismatch.1,
                right: mismatch.2,
            }));
        }
    }
}

/// Renders `c * m` as a parseable product, with the sign folded into the front.
pub(crate) fn render_term(c: &CycloNum, m: Monomial) -> String {
    if m == Monomial::ONE {
        return c.to_string();
    }
    if let Some(r) = c.as_rational() {
        let sign = if r.is_negative() { "-" } else { "" };
        let mag = r.abs();
        return if mag.is_one() {
            format!("{sign}{m}")
        } else {
            format!("{sign}{}*{m}", fmt_rational(&mag))
        };
    }
    if c.is_compound() {
        format!("({c})*{m}")
    } else {
        // a single r*zeta^j term already renders with its own sign
        format!("{c}*{m}")
    }
}

impl fmt::Display for LaurentSeries {
    /// Terms in ascending total degree, `a`-exponent descending within a degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let term = render_term(c, *m);
            match (idx, term.strip_prefix('-')) {
                (0, _) => f.write_str(&term)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}
