use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::checks::unit_roots;
use super::isolate::{refine_root, RootBox};
use crate::error::Result;
use crate::exactmath::{BigRat, IntPoly};
use crate::orthopoly::shifted_legendre;

pub const DEFAULT_START_PRECISION: u32 = 128;
pub const DEFAULT_MAX_PRECISION: u32 = 2048;

/// Closed rational interval with dyadic endpoints.
#[derive(Clone, Debug)]
struct Interval {
    lo: BigRat,
    hi: BigRat,
}

fn scale_pow2(bits: u32) -> BigRat {
    BigRat::from_integer(BigInt::one() << bits)
}

fn round_down(x: &BigRat, bits: u32) -> BigRat {
    let s = scale_pow2(bits);
    (x * &s).floor() / s
}

fn round_up(x: &BigRat, bits: u32) -> BigRat {
    let s = scale_pow2(bits);
    (x * &s).ceil() / s
}

impl Interval {
    fn point(x: BigRat) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    fn outward(lo: &BigRat, hi: &BigRat, bits: u32) -> Interval {
        Interval { lo: round_down(lo, bits), hi: round_up(hi, bits) }
    }

    fn add(&self, o: &Interval, bits: u32) -> Interval {
        Interval::outward(&(&self.lo + &o.lo), &(&self.hi + &o.hi), bits)
    }

    fn sub(&self, o: &Interval, bits: u32) -> Interval {
        Interval::outward(&(&self.lo - &o.hi), &(&self.hi - &o.lo), bits)
    }

    fn mul(&self, o: &Interval, bits: u32) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().cloned().unwrap_or_default();
        let hi = c.iter().max().cloned().unwrap_or_default();
        Interval::outward(&lo, &hi, bits)
    }

    /// Multiplication by an exact rational.
    fn scale(&self, c: &BigRat, bits: u32) -> Interval {
        self.mul(&Interval::point(c.clone()), bits)
    }

    fn widen(&self, r: &BigRat) -> Interval {
        Interval { lo: &self.lo - r, hi: &self.hi + r }
    }
}

/// `arctan(1/n)` by its alternating series; partial sums bracket the value.
fn arctan_inv(n: u64, bits: u32) -> Interval {
    let x = BigRat::new(BigInt::one(), BigInt::from(n));
    let x2 = &x * &x;
    let eps = BigRat::new(BigInt::one(), BigInt::one() << (bits + 8));
    let mut power = x.clone();
    let mut sum = Interval::point(BigRat::zero());
    let mut k = 0u64;
    loop {
        let term = Interval::outward(&power, &power, bits + 16).scale(&BigRat::new(1.into(), (2 * k + 1).into()), bits + 16);
        sum = if k % 2 == 0 { sum.add(&term, bits + 16) } else { sum.sub(&term, bits + 16) };
        power = round_up(&(&power * &x2), bits + 16);
        k += 1;
        // the next term bounds the truncation error
        if power < eps {
            return sum.widen(&power);
        }
    }
}

/// Enclosure of pi by Machin's formula.
fn pi_interval(bits: u32) -> Interval {
    let a = arctan_inv(5, bits).scale(&BigRat::from_integer(16.into()), bits + 16);
    let b = arctan_inv(239, bits).scale(&BigRat::from_integer(4.into()), bits + 16);
    a.sub(&b, bits + 16)
}

/// Enclosure of `cos x` for a rational `0 <= x <= 4`, Taylor series with
/// Lagrange remainder.
fn cos_point(x: &BigRat, bits: u32) -> Interval {
    let w = bits + 32;
    let x2 = Interval::point(x * x);
    let eps = BigRat::new(BigInt::one(), BigInt::one() << (bits + 8));
    let mut term = Interval::point(BigRat::one());
    let mut sum = Interval::point(BigRat::one());
    let mut k = 1u64;
    loop {
        let div = BigRat::new(BigInt::one(), BigInt::from((2 * k - 1) * (2 * k)));
        term = term.mul(&x2, w).scale(&div, w);
        sum = if k % 2 == 1 { sum.sub(&term, w) } else { sum.add(&term, w) };
        k += 1;
        // |x|^(2k) / (2k)! bounds the tail once terms decrease
        let next = term.hi.clone() * &x2.hi / BigRat::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        if next < eps && BigRat::from_integer(BigInt::from(2 * k)) > x2.hi {
            return sum.widen(&next);
        }
    }
}

/// `c(m pi / (2l + 1)) = (1 + cos(m pi / (2l + 1))) / 2` for `0 < m <= 2l`,
/// where `cos` is decreasing.
fn half_angle_point(m: u32, l: u32, pi: &Interval, bits: u32) -> Interval {
    let f = BigRat::new(BigInt::from(m), BigInt::from(2 * l + 1));
    let theta = pi.scale(&f, bits + 16);
    let c_hi = cos_point(&theta.lo, bits);
    let c_lo = cos_point(&theta.hi, bits);
    let half = BigRat::new(1.into(), 2.into());
    Interval { lo: (BigRat::one() + &c_lo.lo) * &half, hi: (BigRat::one() + &c_hi.hi) * &half }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BrunsOutcome {
    Holds,
    Fails { nu: u32 },
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrunsReport {
    pub l: u32,
    pub outcome: BrunsOutcome,
    /// Precision (bits) at which the outcome was decided, or the cap.
    pub precision: u32,
}

enum Step {
    Inside,
    Outside,
    Unresolved,
}

/// Refines `bx` until it lies strictly inside `(lower, upper)`, strictly
/// outside, or becomes narrower than `2^-bits`.
fn locate(p: &IntPoly, bx: &RootBox, lower: &Interval, upper: &Interval, bits: u32) -> Result<(Step, RootBox)> {
    let floor = BigRat::new(BigInt::one(), BigInt::one() << bits);
    let mut bx = bx.clone();
    loop {
        let inside = match bx.exact_value() {
            Some(x) => x > &lower.hi && x < &upper.lo,
            None => bx.low() >= &lower.hi && bx.high() <= &upper.lo,
        };
        if inside {
            return Ok((Step::Inside, bx));
        }
        if bx.high() <= &lower.lo || bx.low() >= &upper.hi {
            return Ok((Step::Outside, bx));
        }
        if bx.is_exact() || bx.width() < floor {
            return Ok((Step::Unresolved, bx));
        }
        bx = refine_root(p, &bx, &(bx.width() / BigRat::from_integer(2.into())))?;
    }
}

/// For every root `x_v` of the shifted Legendre polynomial of degree `l`
/// (decreasing), with `cos theta_v = 2 x_v - 1`:
/// `(v - 1/2) pi / (l + 1/2) < theta_v < v pi / (l + 1/2)`.
pub fn bruns_bound_check(l: u32, max_precision: u32) -> Result<BrunsReport> {
    let p = shifted_legendre(l);
    let mut boxes = unit_roots(&p)?;
    let mut bits = DEFAULT_START_PRECISION.min(max_precision);
    let mut pending: Vec<usize> = (0..boxes.len()).collect();
    loop {
        let pi = pi_interval(bits + 16);
        let mut still = Vec::new();
        for &i in &pending {
            let nu = i as u32 + 1;
            let lower = half_angle_point(2 * nu, l, &pi, bits + 8);
            let upper = half_angle_point(2 * nu - 1, l, &pi, bits + 8);
            let (step, bx) = locate(&p, &boxes[i], &lower, &upper, bits)?;
            boxes[i] = bx;
            match step {
                Step::Inside => {}
                Step::Outside => return Ok(BrunsReport { l, outcome: BrunsOutcome::Fails { nu }, precision: bits }),
                Step::Unresolved => still.push(i),
            }
        }
        if still.is_empty() {
            return Ok(BrunsReport { l, outcome: BrunsOutcome::Holds, precision: bits });
        }
        if bits >= max_precision {
            return Ok(BrunsReport { l, outcome: BrunsOutcome::Undecided, precision: bits });
        }
        bits = (bits * 2).min(max_precision);
        pending = still;
    }
}
