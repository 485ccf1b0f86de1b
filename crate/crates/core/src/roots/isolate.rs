use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::{count_roots, sturm_chain, SturmChain};
use crate::error::{Error, Result};
use crate::exactmath::{BigRat, IntPoly};

/// Isolating interval `(low, high]` for one real root, or a single exact
/// rational root. For inexact boxes the root lies strictly inside and the
/// polynomial does not vanish at `high`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox {
    low: BigRat,
    high: BigRat,
    exact: Option<BigRat>,
}

impl RootBox {
    pub fn exact(x: BigRat) -> RootBox {
        RootBox { low: x.clone(), high: x.clone(), exact: Some(x) }
    }

    pub fn open(low: BigRat, high: BigRat) -> Result<RootBox> {
        if low >= high {
            return Err(Error::EmptyInterval { low: low.to_string(), high: high.to_string() });
        }
        Ok(RootBox { low, high, exact: None })
    }

    pub fn low(&self) -> &BigRat {
        &self.low
    }

    pub fn high(&self) -> &BigRat {
        &self.high
    }

    pub fn exact_value(&self) -> Option<&BigRat> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> BigRat {
        &self.high - &self.low
    }

    /// Midpoint as a float, for display and plotting only.
    pub fn approx(&self) -> f64 {
        let m = (&self.low + &self.high) / BigRat::from_integer(2.into());
        m.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether every point of `self` lies strictly above every point of `other`.
    pub fn strictly_above(&self, other: &RootBox) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a > b,
            _ => self.low >= other.high,
        }
    }
}

impl fmt::Display for RootBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(x) => write!(f, "{{{x}}}"),
            None => write!(f, "({}, {}]", self.low, self.high),
        }
    }
}

fn two() -> BigRat {
    BigRat::from_integer(2.into())
}

fn mid(a: &BigRat, b: &BigRat) -> BigRat {
    (a + b) / two()
}

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// open interval `(lo, hi)`; `hi = None` stands for infinity.
pub(crate) fn simplest_between(lo: &BigRat, hi: Option<&BigRat>) -> BigRat {
    let fl = lo.floor();
    let next = &fl + BigRat::one();
    if hi.map_or(true, |h| &next < h) {
        if lo.is_negative() {
            if let Some(h) = hi {
                if h.is_positive() {
                    return BigRat::zero();
                }
                return h.ceil() - BigRat::one();
            }
        }
        return next;
    }
    let h = hi.expect("bounded");
    // both in [fl, fl + 1); recurse on reciprocals of the fractional parts
    let lo_frac = lo - &fl;
    let hi_frac = h - &fl;
    let inner_lo = hi_frac.recip();
    let inner_hi = if lo_frac.is_zero() { None } else { Some(lo_frac.recip()) };
    fl + simplest_between(&inner_lo, inner_hi.as_ref()).recip()
}

/// Approximate Chebyshev-spaced grid strictly inside `(a, b)`, exact rationals.
fn grid(a: &BigRat, b: &BigRat, m: usize) -> Vec<BigRat> {
    let w = b - a;
    let mut out: Vec<BigRat> = Vec::with_capacity(m);
    for j in 1..m {
        let s = (std::f64::consts::FRAC_PI_2 * j as f64 / m as f64).sin();
        let Some(u) = BigRat::from_float(s * s) else { continue };
        if u.is_zero() || u >= BigRat::one() {
            continue;
        }
        let x = a + &w * u;
        if out.last().map_or(true, |l| *l < x) {
            out.push(x);
        }
    }
    out
}

/// Shrinks a box whose upper end is a root (of a different root) until the
/// upper end is no longer a root.
fn settle_high(p: &IntPoly, mut low: BigRat, mut high: BigRat, sign_low: Ordering) -> RootBox {
    loop {
        let m = mid(&low, &high);
        match p.sign_at(&m) {
            Ordering::Equal => return RootBox::exact(m),
            s if s == sign_low => low = m,
            _ => high = m,
        }
        if p.sign_at(&high) != Ordering::Equal {
            return RootBox { low, high, exact: None };
        }
    }
}

/// Sign-change scan over a grid. Exact hits at simple roots are replaced by
/// the one-sided signs `-sign p'(r)` and `sign p'(r)`.
fn grid_scan(p: &IntPoly, a: &BigRat, b: &BigRat, m: usize) -> Option<Vec<RootBox>> {
    let dp = p.derive(1);
    let mut pts: Vec<(BigRat, Ordering)> = Vec::new();
    let mut boxes = Vec::new();
    let mut push_point = |x: BigRat, include_root: bool, boxes: &mut Vec<RootBox>| -> Option<()> {
        match p.sign_at(&x) {
            Ordering::Equal => {
                let d = dp.sign_at(&x);
                if d == Ordering::Equal {
                    return None;
                }
                if include_root {
                    boxes.push(RootBox::exact(x.clone()));
                }
                pts.push((x.clone(), d.reverse()));
                pts.push((x, d));
            }
            s => pts.push((x, s)),
        }
        Some(())
    };
    push_point(a.clone(), false, &mut boxes)?;
    for x in grid(a, b, m) {
        push_point(x, true, &mut boxes)?;
    }
    push_point(b.clone(), true, &mut boxes)?;
    for w in pts.windows(2) {
        let ((x, sx), (y, sy)) = (&w[0], &w[1]);
        if x == y || sx == sy {
            continue;
        }
        let q = simplest_between(x, Some(y));
        if p.sign_at(&q) == Ordering::Equal {
            boxes.push(RootBox::exact(q));
        } else if p.sign_at(y) == Ordering::Equal {
            boxes.push(settle_high(p, x.clone(), y.clone(), *sx));
        } else {
            boxes.push(RootBox { low: x.clone(), high: y.clone(), exact: None });
        }
    }
    Some(boxes)
}

fn bisect_isolate(p: &IntPoly, chain: &SturmChain, lo: BigRat, hi: BigRat, n: usize, out: &mut Vec<RootBox>) {
    if n == 0 {
        return;
    }
    if n == 1 {
        if p.sign_at(&hi) == Ordering::Equal {
            out.push(RootBox::exact(hi));
            return;
        }
        let q = simplest_between(&lo, Some(&hi));
        if p.sign_at(&q) == Ordering::Equal {
            out.push(RootBox::exact(q));
            return;
        }
        if p.sign_at(&lo) != Ordering::Equal {
            out.push(RootBox { low: lo, high: hi, exact: None });
            return;
        }
    }
    let m = mid(&lo, &hi);
    let upper = chain.variations(&m) - chain.variations(&hi);
    bisect_isolate(p, chain, m.clone(), hi, upper, out);
    bisect_isolate(p, chain, lo, m, n - upper, out);
}

/// Isolates every root of a squarefree `p` in `(a, b]`, in decreasing order.
pub fn isolate_roots(p: &IntPoly, a: &BigRat, b: &BigRat) -> Result<Vec<RootBox>> {
    let chain = sturm_chain(p)?;
    isolate_with_chain(p, &chain, a, b)
}

pub(crate) fn isolate_with_chain(p: &IntPoly, chain: &SturmChain, a: &BigRat, b: &BigRat) -> Result<Vec<RootBox>> {
    if !chain.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = count_roots(chain, a, b, true)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut m = (8 * n).max(16);
    for _ in 0..3 {
        if let Some(mut boxes) = grid_scan(p, a, b, m) {
            if boxes.len() == n {
                sort_decreasing(&mut boxes);
                return Ok(boxes);
            }
        }
        m *= 4;
    }
    let mut out = Vec::with_capacity(n);
    bisect_isolate(p, chain, a.clone(), b.clone(), n, &mut out);
    Ok(out)
}

fn sort_decreasing(boxes: &mut [RootBox]) {
    boxes.sort_by(|x, y| y.high.cmp(&x.high));
}

/// Narrows `bx` below width `eps` by sign bisection. `p` must have a single
/// simple root in the box.
pub fn refine_root(p: &IntPoly, bx: &RootBox, eps: &BigRat) -> Result<RootBox> {
    if bx.exact.is_some() {
        return Ok(bx.clone());
    }
    let sign_high = p.sign_at(&bx.high);
    if sign_high == Ordering::Equal {
        return Err(Error::Invariant(format!("polynomial vanishes at the upper end of {bx}")));
    }
    let (mut low, mut high) = (bx.low.clone(), bx.high.clone());
    let mut step = 0u32;
    while &(&high - &low) >= eps {
        if step % 8 == 0 {
            let q = simplest_between(&low, Some(&high));
            if p.sign_at(&q) == Ordering::Equal {
                return Ok(RootBox::exact(q));
            }
        }
        let m = mid(&low, &high);
        match p.sign_at(&m) {
            Ordering::Equal => return Ok(RootBox::exact(m)),
            s if s == sign_high => high = m,
            _ => low = m,
        }
        step += 1;
    }
    Ok(RootBox { low, high, exact: None })
}

/// Halves the box width once.
pub(crate) fn halve(p: &IntPoly, bx: &RootBox) -> Result<RootBox> {
    refine_root(p, bx, &(bx.width() / two()))
}

/// Checks that the roots carried by `items` are strictly decreasing, refining
/// neighbouring boxes until they separate. Gives up (returns false) after
/// `max_steps` halvings of a single pair.
pub fn strictly_decreasing(items: &mut [(&IntPoly, RootBox)], max_steps: u32) -> Result<bool> {
    for i in 1..items.len() {
        let mut steps = 0;
        loop {
            let (head, tail) = items.split_at_mut(i);
            let (pa, a) = &mut head[i - 1];
            let (pb, b) = &mut tail[0];
            if a.strictly_above(b) {
                break;
            }
            if b.strictly_above(a) || (a.is_exact() && b.is_exact()) || steps >= max_steps {
                return Ok(false);
            }
            if !a.is_exact() {
                *a = halve(pa, a)?;
            }
            if !b.is_exact() {
                *b = halve(pb, b)?;
            }
            steps += 1;
        }
    }
    Ok(true)
}

#[cfg(test)]
pub(crate) fn q(n: i64, d: i64) -> BigRat {
    crate::exactmath::rat(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skewgrowth::{skew_growth, CoxeterType};

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn unit(p: &IntPoly) -> Vec<RootBox> {
        isolate_roots(p, &q(0, 1), &q(1, 1)).unwrap()
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&q(1, 4), Some(&q(1, 2))), q(1, 3));
        assert_eq!(simplest_between(&q(0, 1), Some(&q(1, 1))), q(1, 2));
        assert_eq!(simplest_between(&q(3, 10), Some(&q(4, 10))), q(1, 3));
        assert_eq!(simplest_between(&q(1, 1), Some(&q(3, 1))), q(2, 1));
        assert_eq!(simplest_between(&q(-1, 2), Some(&q(1, 2))), q(0, 1));
        assert_eq!(simplest_between(&q(199, 1000), Some(&q(201, 1000))), q(1, 5));
    }

    #[test]
    fn examples() {
        assert_eq!(unit(&ip(&[1, -3, 2])), vec![RootBox::exact(q(1, 1)), RootBox::exact(q(1, 2))]);
        assert_eq!(unit(&ip(&[1, -1])), vec![RootBox::exact(q(1, 1))]);
        let b2 = skew_growth(CoxeterType::b(2).unwrap()).poly;
        assert_eq!(unit(&b2), vec![RootBox::exact(q(1, 1)), RootBox::exact(q(1, 3))]);
        assert!(matches!(isolate_roots(&ip(&[1, -2, 1]), &q(0, 1), &q(1, 1)), Err(Error::NotSquarefree)));
    }

    #[test]
    fn refine_examples() {
        let g2 = skew_growth(CoxeterType::g2()).poly;
        let bx = RootBox::open(q(1, 8), q(1, 4)).unwrap();
        assert_eq!(refine_root(&g2, &bx, &q(1, 1_000_000)).unwrap(), RootBox::exact(q(1, 5)));
        let p = ip(&[-2, 0, 1]);
        let bx = RootBox::open(q(1, 1), q(2, 1)).unwrap();
        let r = refine_root(&p, &bx, &q(1, 1_000_000)).unwrap();
        assert!(r.width() < q(1, 1_000_000));
        assert!(p.sign_at(r.low()) != p.sign_at(r.high()));
        let ex = RootBox::exact(q(1, 2));
        assert_eq!(refine_root(&p, &ex, &q(1, 10)).unwrap(), ex);
    }

    #[test]
    fn root_at_lower_end_is_excluded() {
        // t (1 - 2t) on (0, 1]: only 1/2
        let p = ip(&[0, 1, -2]);
        assert_eq!(unit(&p), vec![RootBox::exact(q(1, 2))]);
        // (2t - 1)(3t - 1)(t - 1) on (1/3, 1]
        let p = &(&ip(&[-1, 2]) * &ip(&[-1, 3])) * &ip(&[-1, 1]);
        let boxes = isolate_roots(&p, &q(1, 3), &q(1, 1)).unwrap();
        assert_eq!(boxes, vec![RootBox::exact(q(1, 1)), RootBox::exact(q(1, 2))]);
    }

    #[test]
    fn bisection_fallback_agrees() {
        let p = skew_growth(CoxeterType::e(8).unwrap()).poly;
        let chain = sturm_chain(&p).unwrap();
        let mut out = Vec::new();
        bisect_isolate(&p, &chain, q(0, 1), q(1, 1), 8, &mut out);
        let grid_boxes = unit(&p);
        assert_eq!(out.len(), 8);
        assert_eq!(grid_boxes.len(), 8);
        for (a, b) in out.iter().zip(&grid_boxes) {
            let a = refine_root(&p, a, &q(1, 1 << 40)).unwrap();
            let b = refine_root(&p, b, &q(1, 1 << 40)).unwrap();
            assert!(!a.strictly_above(&b) && !b.strictly_above(&a));
        }
    }

    #[test]
    fn decreasing_chain() {
        let p = ip(&[-2, 0, 1]);
        let r = ip(&[-1, 1]);
        let mut items = vec![
            (&p, RootBox::open(q(1, 1), q(2, 1)).unwrap()),
            (&r, RootBox::exact(q(1, 1))),
        ];
        assert!(strictly_decreasing(&mut items, 64).unwrap());
        let mut items = vec![(&r, RootBox::exact(q(1, 1))), (&r, RootBox::exact(q(1, 1)))];
        assert!(!strictly_decreasing(&mut items, 64).unwrap());
    }
}
