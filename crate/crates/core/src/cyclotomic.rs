//! Exact arithmetic in cyclotomic fields Q(zeta_L).
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(L)-1)` modulo the
//! cyclotomic polynomial `Phi_L`, with exact rational coefficients. Equality is
//! coefficientwise; there is no normalization pass.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::new(out)
    }

    /// Exact division by a monic polynomial. Returns `None` if the remainder is nonzero
    /// or the divisor is not monic.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if !divisor.coeffs[dd].is_one() {
            return None;
        }
        let Some(nd) = self.degree() else {
            return Some(Self::new(Vec::new()));
        };
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let lead = rem[shift + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &lead * c;
            }
            quot[shift] = lead;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: &CycloNum) -> CycloNum {
        let field = x.field().clone();
        let mut acc = CycloNum::zero(&field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(x);
            acc.coeffs[0] += BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (deg, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{deg}")?,
                (_, false) => write!(f, "{mag}*x^{deg}")?,
            }
        }
        Ok(())
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The m-th cyclotomic polynomial, by exact division of `x^m - 1` by `Phi_d` for the
/// proper divisors `d` of `m`.
///
/// # Panics
/// If `m == 0`.
pub fn cyclotomic_polynomial(m: u64) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic polynomial order must be positive");
    let mut numerator = vec![BigInt::zero(); m as usize + 1];
    numerator[0] = BigInt::from(-1);
    numerator[m as usize] = BigInt::one();
    let mut quotient = IntPolynomial::new(numerator);
    for d in (1..m).filter(|d| m % d == 0) {
        quotient = quotient
            .div_exact_monic(&cyclotomic_polynomial(d))
            .expect("Phi_d divides x^m - 1 for d | m");
    }
    quotient
}

/// Precomputed data for Q(zeta_L): the modulus and the reduced powers of zeta.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u64,
    modulus: IntPolynomial,
    // powers[e] = zeta^e reduced modulo Phi_L, for e in 0..L
    powers: Vec<Vec<BigInt>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.degree().unwrap_or(0);
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![BigInt::zero(); phi];
        current[0] = BigInt::one();
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x, then reduce x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
            let carry = current.pop().expect("phi >= 1");
            current.insert(0, BigInt::zero());
            for (j, c) in modulus.coeffs()[..phi].iter().enumerate() {
                current[j] -= &carry * c;
            }
        }
        Arc::new(Self {
            order,
            modulus,
            powers,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Dimension over Q, i.e. `phi(L)`.
    pub fn degree(&self) -> usize {
        self.powers[0].len()
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    fn reduced_power(&self, e: u64) -> &[BigInt] {
        &self.powers[(e % self.order) as usize]
    }
}

/// An exact element of Q(zeta_L) in the power basis modulo `Phi_L`.
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum[L={}]({})", self.order(), self)
    }
}

impl CycloNum {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: BigRational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = r;
        x
    }

    pub fn from_i64(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    /// Builds an element from power-basis coefficients; missing trailing entries are zero.
    ///
    /// # Panics
    /// If more than `phi(L)` coefficients are given.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        assert!(coeffs.len() <= field.degree(), "too many coefficients");
        let mut x = Self::zero(field);
        for (slot, c) in x.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        x
    }

    /// `zeta_L^e`, reduced to the power basis.
    pub fn zeta_power(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let exp = e.rem_euclid(field.order as i64) as u64;
        Self::from_int_vec(field, field.reduced_power(exp))
    }

    fn from_int_vec(field: &Arc<CyclotomicField>, v: &[BigInt]) -> Self {
        Self {
            field: field.clone(),
            coeffs: v.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The element as a rational, if it lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
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

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.field.degree();
        let mut full = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let mut out = Self::zero(&self.field);
        for (deg, c) in full.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if deg < n {
                out.coeffs[deg] += c;
            } else {
                for (slot, r) in out
                    .coeffs
                    .iter_mut()
                    .zip(self.field.reduced_power(deg as u64))
                {
                    if !r.is_zero() {
                        *slot += &c * r;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Image under the ring homomorphism `zeta_m -> zeta_L^(L/m)`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let (from, to) = (self.order(), target.order);
        if to % from != 0 {
            return Err(Error::IncompatibleOrders { from, to });
        }
        let step = to / from;
        let mut out = Self::zero(target);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in out.coeffs.iter_mut().zip(target.reduced_power(j as u64 * step)) {
                if !r.is_zero() {
                    *slot += c * BigRational::from_integer(r.clone());
                }
            }
        }
        Ok(out)
    }

    /// The automorphism `zeta -> zeta^-1`, i.e. complex conjugation.
    pub fn conj(&self) -> Self {
        let l = self.order();
        let mut out = Self::zero(&self.field);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = self.field.reduced_power((l - j as u64 % l) % l);
            for (slot, r) in out.coeffs.iter_mut().zip(image) {
                if !r.is_zero() {
                    *slot += c * BigRational::from_integer(r.clone());
                }
            }
        }
        out
    }

    /// `(Re, Im)` with `x = Re + i*Im`, both fixed by conjugation. Needs `4 | L`.
    pub fn real_imag_parts(&self) -> Result<(Self, Self)> {
        let l = self.order();
        if l % 4 != 0 {
            return Err(Error::OrderNotDivisibleBy4(l));
        }
        let half = BigRational::new(1.into(), 2.into());
        let conj = self.conj();
        let re = self.checked_add(&conj)?.scale(&half);
        let minus_i = Self::zeta_power(&self.field, (3 * l / 4) as i64);
        let im = self.checked_sub(&conj)?.mul_unchecked(&minus_i).scale(&half);
        Ok((re, im))
    }

    /// Multiplicative inverse, by solving the linear system `x * y = 1` over Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, r.recip()));
        }
        let n = self.field.degree();
        // column j holds x * zeta^j; augmented with e_0
        let columns: Vec<Self> = (0..n)
            .map(|j| self.mul_unchecked(&Self::zeta_power(&self.field, j as i64)))
            .collect();
        let mut rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = columns.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or(Error::NotInvertible)?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for v in rows[col].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
        Ok(Self::from_coeffs(
            &self.field,
            rows.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        ))
    }

    /// Whether the rendering needs parentheses when used as a multiplicative factor.
    pub(crate) fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;

    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for CycloNum {
    type Output = CycloNum;

    fn neg(self) -> CycloNum {
        -&self
    }
}

/// The expression-language spelling of `zeta_L^j`.
pub fn zeta_name(order: u64, j: u64) -> String {
    match (order, j) {
        (4, 1) => "i".to_string(),
        (3, 1) => "omega".to_string(),
        _ => format!("zeta({order},{j})"),
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycloNum {
    /// Renders as a sum of `c*zeta^j` terms using the same names the parser accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&zeta_name(self.order(), j as u64))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), zeta_name(self.order(), j as u64))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `zeta_L^e` in a freshly built field of order `L`.
pub fn zeta_power(order: u64, e: i64) -> CycloNum {
    CycloNum::zeta_power(&CyclotomicField::new(order), e)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
