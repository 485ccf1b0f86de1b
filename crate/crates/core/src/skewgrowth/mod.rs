//! Closed-form skew-growth polynomials of dual Artin monoids of finite type,
//! and the elementary facts about them (root at 1, the `1 - 2t` factor,
//! the derivative at 1).

mod ctype;

pub use ctype::{CoxeterType, Family, Series};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, rat, BigRat, IntPoly};

/// Default rank bound for closed-form generation.
pub const DEFAULT_MAX_RANK: u32 = 300;

/// `N(t)` for a given type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewGrowthPoly {
    pub ctype: CoxeterType,
    pub poly: IntPoly,
}

// Literal rows of the exceptional table, ascending coefficients.
const E6: &[i64] = &[1, -36, 300, -1035, 1720, -1368, 418];
const E7: &[i64] = &[1, -63, 777, -3927, 9933, -13299, 9009, -2431];
const E8: &[i64] = &[1, -120, 2135, -15120, 54327, -108360, 121555, -71760, 17342];
const F4: &[i64] = &[1, -24, 101, -144, 66];
const G2: &[i64] = &[1, -6, 5];
const H3: &[i64] = &[1, -15, 35, -21];
const H4: &[i64] = &[1, -60, 307, -480, 232];

/// The skew-growth polynomial of the dual Artin monoid of `ctype`.
pub fn skew_growth(ctype: CoxeterType) -> SkewGrowthPoly {
    let l = i64::from(ctype.rank());
    let poly = match ctype.family() {
        Family::A => series_poly(l, |k| {
            // (1/l) C(l,k) C(l+k,k+1); always an integer
            binomial(l, k) * binomial(l + k, k + 1) / BigInt::from(l)
        }),
        Family::B => series_poly(l, |k| binomial(l, k) * binomial(l + k - 1, k)),
        Family::D => series_poly(l, |k| {
            binomial(l, k) * binomial(l + k - 2, k) + binomial(l - 2, k - 2) * binomial(l + k - 3, k)
        }),
        Family::E => IntPoly::from_i64s(match l {
            6 => E6,
            7 => E7,
            _ => E8,
        }),
        Family::F => IntPoly::from_i64s(F4),
        Family::G => IntPoly::from_i64s(G2),
        Family::H => IntPoly::from_i64s(if l == 3 { H3 } else { H4 }),
        Family::I2 => {
            let p = i64::from(ctype.dihedral_order().unwrap_or(3));
            IntPoly::from_i64s(&[1, -p, p - 1])
        }
    };
    SkewGrowthPoly { ctype, poly }
}

/// [`skew_growth`] with a runtime guard on the rank.
pub fn skew_growth_bounded(ctype: CoxeterType, max_rank: u32) -> Result<SkewGrowthPoly> {
    if ctype.rank() > max_rank {
        return Err(Error::RankBound { rank: ctype.rank(), bound: max_rank });
    }
    Ok(skew_growth(ctype))
}

fn series_poly(l: i64, magnitude: impl Fn(i64) -> BigInt) -> IntPoly {
    IntPoly::new(
        (0..=l)
            .map(|k| {
                let m = magnitude(k);
                if k % 2 == 0 {
                    m
                } else {
                    -m
                }
            })
            .collect(),
    )
}

/// `N(t) / (1 - t)`.
pub fn reduced_skew_growth(ctype: CoxeterType) -> Result<IntPoly> {
    let n = skew_growth(ctype).poly;
    n.div_exact(&IntPoly::from_i64s(&[1, -1]))
        .ok_or_else(|| Error::Invariant(format!("1 - t does not divide N for {ctype}")))
}

/// Whether `N(1/2) = 0`, i.e. `(1 - 2t) | N`.
pub fn has_factor_one_minus_2t(ctype: CoxeterType) -> bool {
    skew_growth(ctype).poly.eval_rat(&rat(1, 2)).is_zero()
}

/// Exact `N'(1)`.
pub fn derivative_at_one(ctype: CoxeterType) -> BigRat {
    skew_growth(ctype).poly.derive(1).eval_rat(&BigRat::one())
}

/// Closed form of `N'(1)` for the three series: `(-1)^l`, `(-1)^l l`,
/// `(-1)^l (l - 2)`. `None` for the other families.
pub fn derivative_at_one_closed_form(ctype: CoxeterType) -> Option<BigRat> {
    let l = i64::from(ctype.rank());
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let v = match ctype.series()? {
        Series::A => sign,
        Series::B => sign * l,
        Series::D => sign * (l - 2),
    };
    Some(rat(v, 1))
}

/// Number of reflections of the type (`|T|`).
pub fn reflection_count(ctype: CoxeterType) -> u64 {
    let l = u64::from(ctype.rank());
    match ctype.family() {
        Family::A => l * (l + 1) / 2,
        Family::B => l * l,
        Family::D => l * (l - 1),
        Family::E => match l {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
        Family::H => {
            if l == 3 {
                15
            } else {
                60
            }
        }
        Family::I2 => u64::from(ctype.dihedral_order().unwrap_or(0)),
    }
}

/// Structural invariants every skew-growth polynomial satisfies; returns a
/// description of the first violation.
pub fn check_shape(sg: &SkewGrowthPoly) -> std::result::Result<(), String> {
    let p = &sg.poly;
    let rank = sg.ctype.rank() as usize;
    if p.degree() != Some(rank) {
        return Err(format!("degree {:?} != rank {rank}", p.degree()));
    }
    if !p.coeff(0).is_one() {
        return Err(format!("constant coefficient {} != 1", p.coeff(0)));
    }
    if !p.eval_rat(&BigRat::one()).is_zero() {
        return Err("N(1) != 0".into());
    }
    if !p.signs_alternate() {
        return Err("coefficient signs do not alternate".into());
    }
    let lin = -p.coeff(1);
    if !lin.is_positive() || lin != BigInt::from(reflection_count(sg.ctype)) {
        return Err(format!("linear coefficient {} != -|T|", p.coeff(1)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn table_examples() {
        assert_eq!(skew_growth(CoxeterType::g2()).poly, ip(&[1, -6, 5]));
        assert_eq!(skew_growth(CoxeterType::h(3).unwrap()).poly, ip(&[1, -15, 35, -21]));
        assert_eq!(skew_growth(CoxeterType::a(3).unwrap()).poly, ip(&[1, -6, 10, -5]));
        assert_eq!(skew_growth(CoxeterType::d(4).unwrap()).poly, ip(&[1, -12, 39, -48, 20]));
        assert_eq!(skew_growth(CoxeterType::i2(6).unwrap()).poly, skew_growth(CoxeterType::g2()).poly);
        assert_eq!(skew_growth(CoxeterType::a(1).unwrap()).poly, ip(&[1, -1]));
        assert_eq!(skew_growth(CoxeterType::b(2).unwrap()).poly, ip(&[1, -4, 3]));
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(reduced_skew_growth(CoxeterType::a(2).unwrap()).unwrap(), ip(&[1, -2]));
        assert_eq!(reduced_skew_growth(CoxeterType::a(1).unwrap()).unwrap(), ip(&[1]));
        assert_eq!(reduced_skew_growth(CoxeterType::g2()).unwrap(), ip(&[1, -5]));
    }

    #[test]
    fn one_minus_2t_factor() {
        assert!(has_factor_one_minus_2t(CoxeterType::a(4).unwrap()));
        assert!(!has_factor_one_minus_2t(CoxeterType::a(3).unwrap()));
        assert!(has_factor_one_minus_2t(CoxeterType::d(4).unwrap()));
        assert!(!has_factor_one_minus_2t(CoxeterType::d(5).unwrap()));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative_at_one(CoxeterType::a(3).unwrap()), rat(-1, 1));
        assert_eq!(derivative_at_one(CoxeterType::b(4).unwrap()), rat(4, 1));
        assert_eq!(derivative_at_one(CoxeterType::d(5).unwrap()), rat(-3, 1));
        assert_eq!(derivative_at_one_closed_form(CoxeterType::g2()), None);
    }

    #[test]
    fn shape_holds_for_all_small_types() {
        let mut types = CoxeterType::exceptional();
        for l in 1..=40 {
            types.push(CoxeterType::a(l).unwrap());
        }
        for l in 2..=40 {
            types.push(CoxeterType::b(l).unwrap());
        }
        for l in 4..=40 {
            types.push(CoxeterType::d(l).unwrap());
        }
        for p in 3..=30 {
            types.push(CoxeterType::i2(p).unwrap());
        }
        for t in types {
            let sg = skew_growth(t);
            check_shape(&sg).unwrap_or_else(|e| panic!("{t}: {e}"));
            let red = reduced_skew_growth(t).unwrap();
            assert_eq!(&red * &ip(&[1, -1]), sg.poly);
            assert_eq!(red.degree(), Some(t.rank() as usize - 1));
        }
    }

    #[test]
    fn rank_guard() {
        let t = CoxeterType::a(301).unwrap();
        assert_eq!(skew_growth_bounded(t, DEFAULT_MAX_RANK), Err(Error::RankBound { rank: 301, bound: 300 }));
    }
}
