//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending order (index `k` holds the
//! coefficient of `t^k`) with no trailing zeros, so the zero polynomial is the
//! empty vector and `degree = len - 1` otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::BigRat;

/// Coefficient ring of a [`Poly`].
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn from_bigint(v: BigInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }
}

impl Coeff for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_bigint(v: BigInt) -> Self {
        v
    }
}

impl Coeff for BigRat {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_bigint(v: BigInt) -> Self {
        BigRat::from_integer(v)
    }
}

/// A dense univariate polynomial in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Polynomial with arbitrary-precision rational coefficients.
pub type RatPoly = Poly<BigRat>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    /// `a + b t`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Number of stored coefficients (`degree + 1`, or 0 for zero).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The `k`-th formal derivative.
    pub fn derive(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|i| {
                // falling factorial i (i-1) ... (i-k+1)
                let f: BigInt = ((i - k + 1)..=i).map(BigInt::from).product();
                self.coeffs[i].clone() * &T::from_bigint(f)
            })
            .collect();
        Self::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x;
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `t^k`; `None` unless the division is exact.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// First coefficient index where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// Whether the coefficients strictly alternate in sign, starting positive.
    pub fn signs_alternate(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| {
            if k % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    }
}

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(BigRat::from_integer).collect(),
        }
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Divide every coefficient by `d`; `None` unless all divisions are exact.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Poly { coeffs })
    }

    /// Exact division over the integers; `None` if the quotient is not an
    /// integer polynomial or the remainder is nonzero.
    pub fn div_exact(&self, den: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_rat().div_rem(&den.to_rat()).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.to_int().ok()
    }

    /// `|lc(den)|^(deg num - deg den + 1) * num mod den`, a positive multiple
    /// of the true remainder with integer coefficients.
    pub fn pseudo_rem(&self, den: &IntPoly) -> Result<IntPoly> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lc = den.coeffs[dd].clone();
        let lc_abs = lc.abs();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let lead = r[k].clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            // r := |lc| r - sign(lc) lead t^(k-dd) den
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            let factor = if lc.is_negative() { -lead } else { lead };
            for (i, dc) in den.coeffs.iter().enumerate() {
                r[k - dd + i] -= &(&factor * dc);
            }
            debug_assert!(r[k].is_zero());
            r.pop();
        }
        Ok(IntPoly::new(r))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b)?.primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        Ok(a)
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derive(1))?;
        let q = self
            .div_exact(&g)
            .ok_or_else(|| Error::Invariant("gcd does not divide its argument".into()))?;
        let q = q.primitive_part();
        Ok(if q.leading().is_some_and(Signed::is_negative) { -q } else { q })
    }

    /// Whether `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derive(1))?.degree() == Some(0))
    }

    /// Exact value at a rational point.
    pub fn eval_rat(&self, x: &BigRat) -> BigRat {
        match self.degree() {
            None => BigRat::zero(),
            Some(d) => BigRat::new(self.homogeneous_value(x), x.denom().pow(d as u32)),
        }
    }

    /// Sign of the value at a rational point, without forming the fraction.
    pub fn sign_at(&self, x: &BigRat) -> Ordering {
        self.homogeneous_value(x).sign().cmp_zero()
    }

    /// `sum c_k n^k d^(deg-k)` for `x = n/d`, `d > 0`.
    fn homogeneous_value(&self, x: &BigRat) -> BigInt {
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        // Horner from the top, multiplying lower coefficients by growing powers of d.
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        acc
    }
}

trait CmpZero {
    fn cmp_zero(self) -> Ordering;
}

impl CmpZero for Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl RatPoly {
    /// Euclidean division: `self = den * q + r` with `deg r < deg den`.
    pub fn div_rem(&self, den: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lc = &den.coeffs[dd];
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut q = vec![BigRat::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / lc;
            for (i, dc) in den.coeffs.iter().enumerate() {
                r[k - dd + i] -= &(&f * dc);
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Demote to an integer polynomial; fails if any coefficient has a
    /// denominator other than 1.
    pub fn to_int(&self) -> Result<IntPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotIntegral { index, value: c.to_string() })
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// `(d, q)` with `d > 0` the lcm of the denominators and `d * self = q`.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let d = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let q = self.coeffs.iter().map(|c| (c * BigRat::from_integer(d.clone())).to_integer()).collect();
        (d, IntPoly::new(q))
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}

impl<'a, T: Coeff> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Coeff> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.len() {
            coeffs.resize(rhs.len(), T::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Coeff> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &a.mul_ref(b);
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl<T: Coeff> $imp<Poly<T>> for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, T: Coeff> $imp<&'a Poly<T>> for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: &'a Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Renders as `1 - 6 t + 5 t^2`; zero renders as `0`.
impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag} ")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
