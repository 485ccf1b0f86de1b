//! Distinct-degree factorization over prime fields.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::IntPoly;

/// Dense polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

impl FpPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    fn from_int(p: &IntPoly, prime: u64) -> Self {
        let m = BigInt::from(prime);
        let c = p
            .coeffs()
            .iter()
            .map(|a| {
                let r = ((a % &m) + &m) % &m;
                r.to_u64().unwrap_or(0)
            })
            .collect();
        FpPoly::new(prime, c)
    }

    fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::new(self.p, vec![]);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        FpPoly::new(self.p, c)
    }

    fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.deg().expect("division by zero polynomial over F_p");
        let inv_lc = self.inv(d.c[dd]);
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (FpPoly::new(self.p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let f = self.mulmod(r[k], inv_lc);
            if f == 0 {
                continue;
            }
            for (i, &dc) in d.c.iter().enumerate() {
                let s = self.mulmod(f, dc);
                r[k - dd + i] = (r[k - dd + i] + self.p - s) % self.p;
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        (FpPoly::new(self.p, q), FpPoly::new(self.p, r))
    }

    fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    fn monic(&self) -> FpPoly {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = self.inv(lc);
                FpPoly::new(self.p, self.c.iter().map(|&a| self.mulmod(a, inv)).collect())
            }
        }
    }

    fn gcd(&self, o: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derive(&self) -> FpPoly {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| self.mulmod(a, i as u64 % self.p))
            .collect();
        FpPoly::new(self.p, c)
    }

    /// `base^e mod m` by square-and-multiply.
    fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes strictly greater than `above`.
pub fn primes_above(above: u64, count: usize) -> Vec<u64> {
    (above + 1..).filter(|&n| is_prime(n)).take(count).collect()
}

/// Degrees of the irreducible factors of `p` modulo `prime`, ascending.
///
/// The reduction must keep its degree and be squarefree; otherwise the prime
/// is rejected and the caller should try another.
pub fn factor_degrees_mod_p(p: &IntPoly, prime: u64) -> Result<Vec<usize>> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if (p.coeffs()[deg].clone() % BigInt::from(prime)).is_zero() {
        return Err(Error::LeadingCoefficientVanishes(prime));
    }
    let f = FpPoly::from_int(p, prime).monic();
    if deg == 0 {
        return Ok(Vec::new());
    }
    let df = f.derive();
    if df.is_zero() || f.gcd(&df).deg() != Some(0) {
        return Err(Error::BadPrime(prime));
    }

    let mut degrees = Vec::new();
    let mut rest = f;
    let x = FpPoly::x(prime);
    let mut h = x.clone();
    let mut d = 1usize;
    while rest.deg().is_some_and(|r| r >= 2 * d) {
        h = h.pow_mod(prime, &rest);
        let g = h.sub(&x).gcd(&rest);
        let gd = g.deg().unwrap_or(0);
        if gd > 0 {
            degrees.extend(std::iter::repeat(d).take(gd / d));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if let Some(r) = rest.deg().filter(|&r| r > 0) {
        degrees.push(r);
    }
    degrees.sort_unstable();
    Ok(degrees)
}
