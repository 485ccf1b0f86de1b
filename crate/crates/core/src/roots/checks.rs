use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::isolate::{isolate_with_chain, refine_root, strictly_decreasing, RootBox};
use super::sturm::{count_roots_unit, sturm_chain};
use crate::error::{Error, Result};
use crate::exactmath::{BigRat, IntPoly};
use crate::orthopoly::shifted_legendre;
use crate::skewgrowth::{reduced_skew_growth, skew_growth, CoxeterType, Series};

/// Halvings allowed per neighbouring pair before a separation check gives up.
pub const SEPARATION_STEPS: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjecture2Report {
    pub rank: u32,
    pub count: usize,
    pub all_simple: bool,
    pub has_root_at_one: bool,
}

impl Conjecture2Report {
    pub fn holds(&self) -> bool {
        self.count == self.rank as usize && self.all_simple && self.has_root_at_one
    }
}

/// Distinct roots of `N` in `(0, 1]`, simplicity and the root at 1.
pub fn verify_conjecture2(ctype: CoxeterType) -> Result<Conjecture2Report> {
    let n = skew_growth(ctype).poly;
    let chain = sturm_chain(&n)?;
    Ok(Conjecture2Report {
        rank: ctype.rank(),
        count: count_roots_unit(&chain),
        all_simple: chain.is_squarefree(),
        has_root_at_one: n.coeffs().iter().sum::<BigInt>().is_zero(),
    })
}

/// Isolating boxes for the roots in `(0, 1]` of a squarefree polynomial,
/// largest first.
pub fn unit_roots(p: &IntPoly) -> Result<Vec<RootBox>> {
    let chain = sturm_chain(p)?;
    isolate_with_chain(p, &chain, &BigRat::zero(), &BigRat::one())
}

fn sign(x: &BigInt) -> Ordering {
    x.sign_ordering()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Boundary behaviour of the chain of `N / (1 - t)`: degrees descend one by
/// one to a nonzero constant, values at `t = 0` strictly alternate in sign,
/// and values at `t = 1` are nonzero of one sign.
pub fn boundary_sign_check(ctype: CoxeterType) -> Result<bool> {
    let reduced = reduced_skew_growth(ctype)?;
    let chain = sturm_chain(&reduced)?;
    let polys = chain.polys();
    let deg = reduced.degree().unwrap_or(0);
    if polys.len() != deg + 1 {
        return Ok(false);
    }
    if polys.iter().enumerate().any(|(k, f)| f.degree() != Some(deg - k)) {
        return Ok(false);
    }
    let at0: Vec<Ordering> = polys.iter().map(|f| sign(&f.coeff(0))).collect();
    let at1: Vec<Ordering> = polys.iter().map(|f| sign(&f.coeffs().iter().sum())).collect();
    if at0.iter().chain(&at1).any(|s| *s == Ordering::Equal) {
        return Ok(false);
    }
    let alternating = at0.windows(2).all(|w| w[0] != w[1]);
    let constant = at1.windows(2).all(|w| w[0] == w[1]);
    Ok(alternating && constant)
}

fn series_poly(series: Series, l: u32) -> Result<IntPoly> {
    Ok(skew_growth(series.at(l)?).poly)
}

fn require_a_or_b(series: Series) -> Result<()> {
    if series == Series::D {
        return Err(Error::Unsupported { ctype: "D".into(), reason: "only the A and B series are covered".into() });
    }
    Ok(())
}

/// `1 = t_1 > x_1 > t_2 > x_2 > ... > t_l > x_l > 0`, with `t` the roots of
/// `N` and `x` those of the shifted Legendre polynomial of degree `l`.
pub fn interlacing_with_legendre(series: Series, l: u32) -> Result<bool> {
    require_a_or_b(series)?;
    let n = series_poly(series, l)?;
    let leg = shifted_legendre(l);
    let t = unit_roots(&n)?;
    let x = unit_roots(&leg)?;
    if t.len() != l as usize || x.len() != l as usize {
        return Ok(false);
    }
    let mut items: Vec<(&IntPoly, RootBox)> = Vec::with_capacity(2 * t.len());
    for (a, b) in t.into_iter().zip(x) {
        items.push((&n, a));
        items.push((&leg, b));
    }
    strictly_decreasing(&mut items, SEPARATION_STEPS)
}

/// `t(l+1, v) > t(l, v) > t(l+1, v+1)` for `v = 2..l`.
pub fn interlacing_across_rank(series: Series, l: u32) -> Result<bool> {
    require_a_or_b(series)?;
    let lo = series_poly(series, l)?;
    let hi = series_poly(series, l + 1)?;
    let t = unit_roots(&lo)?;
    let u = unit_roots(&hi)?;
    if t.len() != l as usize || u.len() != l as usize + 1 {
        return Ok(false);
    }
    let mut items: Vec<(&IntPoly, RootBox)> = Vec::new();
    for v in 1..l as usize {
        items.push((&hi, u[v].clone()));
        items.push((&lo, t[v].clone()));
    }
    if l >= 2 {
        items.push((&hi, u[l as usize].clone()));
    }
    strictly_decreasing(&mut items, SEPARATION_STEPS)
}

/// Smallest root of `N` in `(0, 1]`, refined below width `eps`.
pub fn smallest_root(ctype: CoxeterType, eps: &BigRat) -> Result<(IntPoly, RootBox)> {
    let n = skew_growth(ctype).poly;
    let boxes = unit_roots(&n)?;
    let last = boxes.last().ok_or_else(|| Error::Invariant(format!("{ctype} has no root in (0, 1]")))?;
    let refined = refine_root(&n, last, eps)?;
    Ok((n, refined))
}

#[derive(Clone, Debug)]
pub struct SmallestRootReport {
    pub series: Series,
    pub entries: Vec<(u32, RootBox)>,
    pub decreasing: bool,
    /// For D: whether `t(B_l) < t(D_l) < t(B_(l-1))`, one entry per rank.
    pub sandwich: Option<Vec<bool>>,
}

impl SmallestRootReport {
    pub fn holds(&self) -> bool {
        self.decreasing && self.sandwich.as_ref().map_or(true, |s| s.iter().all(|&ok| ok))
    }
}

fn smallest_roots(series: Series, from: u32, to: u32, eps: &BigRat) -> Result<Vec<(u32, IntPoly, RootBox)>> {
    (from..=to)
        .map(|l| {
            let (p, b) = smallest_root(series.at(l)?, eps)?;
            Ok((l, p, b))
        })
        .collect()
}

pub fn smallest_root_sequence(series: Series, l_max: u32, eps: &BigRat) -> Result<SmallestRootReport> {
    let start = series.min_rank();
    let roots = smallest_roots(series, start, l_max, eps)?;
    let mut items: Vec<(&IntPoly, RootBox)> = roots.iter().map(|(_, p, b)| (p, b.clone())).collect();
    let decreasing = strictly_decreasing(&mut items, SEPARATION_STEPS)?;
    let sandwich = if series == Series::D && l_max >= 4 {
        let bs = smallest_roots(Series::B, 3, l_max, eps)?;
        let mut rows = Vec::with_capacity(roots.len());
        for (l, p, d) in &roots {
            let b_l = &bs[(*l - 3) as usize];
            let b_prev = &bs[(*l - 4) as usize];
            let mut items = vec![(&b_prev.1, b_prev.2.clone()), (p, d.clone()), (&b_l.1, b_l.2.clone())];
            rows.push(strictly_decreasing(&mut items, SEPARATION_STEPS)?);
        }
        Some(rows)
    } else {
        None
    };
    let entries = roots.into_iter().map(|(l, _, b)| (l, b)).collect();
    Ok(SmallestRootReport { series, entries, decreasing, sandwich })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn conjecture2_examples() {
        for (c, r) in [(CoxeterType::f4(), 4), (CoxeterType::d(20).unwrap(), 20), (CoxeterType::a(1).unwrap(), 1)] {
            let rep = verify_conjecture2(c).unwrap();
            assert_eq!(rep.count, r);
            assert!(rep.all_simple && rep.has_root_at_one && rep.holds());
        }
        for c in CoxeterType::exceptional() {
            assert!(verify_conjecture2(c).unwrap().holds(), "{c}");
        }
    }

    #[test]
    fn boundary_signs() {
        for c in CoxeterType::exceptional() {
            assert!(boundary_sign_check(c).unwrap(), "{c}");
        }
        assert!(boundary_sign_check(CoxeterType::a(2).unwrap()).unwrap());
        for l in 2..15 {
            assert!(boundary_sign_check(CoxeterType::b(l).unwrap()).unwrap(), "B{l}");
        }
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlacing_with_legendre(Series::A, 2).unwrap());
        assert!(interlacing_with_legendre(Series::B, 2).unwrap());
        assert!(interlacing_with_legendre(Series::A, 30).unwrap());
        assert!(interlacing_across_rank(Series::B, 2).unwrap());
        assert!(interlacing_across_rank(Series::A, 1).unwrap());
        assert!(interlacing_across_rank(Series::A, 25).unwrap());
        assert!(interlacing_with_legendre(Series::D, 4).is_err());
    }

    #[test]
    fn smallest_root_examples() {
        let eps = rat(1, 1 << 20);
        let (_, b2) = smallest_root(CoxeterType::b(2).unwrap(), &eps).unwrap();
        assert_eq!(b2, RootBox::exact(rat(1, 3)));
        let (_, b3) = smallest_root(CoxeterType::b(3).unwrap(), &eps).unwrap();
        assert!(b3.low() > &rat(155, 1000) && b3.high() < &rat(156, 1000));
        let (_, a3) = smallest_root(CoxeterType::a(3).unwrap(), &eps).unwrap();
        assert!(a3.low() > &rat(276, 1000) && a3.high() < &rat(277, 1000));
        let rep = smallest_root_sequence(Series::D, 6, &eps).unwrap();
        assert!(rep.decreasing);
        assert_eq!(rep.sandwich, Some(vec![true; 3]));
        let rep = smallest_root_sequence(Series::A, 10, &eps).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.entries[1].1, RootBox::exact(rat(1, 2)));
    }
}
