use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::IdentityCheck;
use crate::error::{Error, Result};
use crate::exactmath::{factorial, rat, BigRat, IntPoly};
use crate::skewgrowth::{skew_growth, Series};

fn half() -> BigRat {
    rat(1, 2)
}

fn fact(n: i64) -> BigRat {
    BigRat::from_integer(factorial(n as u64))
}

fn pow2(e: i64) -> BigRat {
    let p = BigRat::from_integer(BigInt::from(2)).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn minus_one_pow(e: i64) -> BigRat {
    if e.rem_euclid(2) == 0 {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

/// `(t^2 - t)^k`.
pub fn h_poly(k: u32) -> IntPoly {
    IntPoly::from_i64s(&[0, -1, 1]).pow(k)
}

fn check_order(k: u32, i: u32) -> Result<()> {
    if i > k {
        return Err(Error::DerivativeOrder { order: i, degree: k });
    }
    Ok(())
}

/// `h_k^(i)(1/2)` in closed form: zero for odd `i`, and
/// `(-1/4)^(k-j) k! (2j)! / ((k-j)! j!)` for `i = 2j`.
pub fn h_deriv_at_half(k: u32, i: u32) -> Result<BigRat> {
    check_order(k, i)?;
    if i % 2 == 1 {
        return Ok(BigRat::from_integer(0.into()));
    }
    let (k, j) = (i64::from(k), i64::from(i / 2));
    let quarter = rat(-1, 4).pow((k - j) as u32);
    Ok(quarter * fact(k) * fact(2 * j) / (fact(k - j) * fact(j)))
}

/// `h_k^(i)(1/2)` by repeated differentiation of the expanded polynomial.
pub fn h_deriv_at_half_literal(k: u32, i: u32) -> Result<BigRat> {
    check_order(k, i)?;
    Ok(h_poly(k).derive(i as usize).eval_rat(&half()))
}

/// `H_l = (t^2 - t)^(l-3) {(l-2) - (3l-4) t + (3l-4) t^2}`.
pub fn big_h_poly(l: u32) -> Result<IntPoly> {
    if l < 3 {
        return Err(Error::InvalidType(format!("H_{l} needs l >= 3")));
    }
    let li = i64::from(l);
    let quad = IntPoly::from_i64s(&[li - 2, -(3 * li - 4), 3 * li - 4]);
    Ok(&h_poly(l - 3) * &quad)
}

pub fn big_h_deriv_at_half(l: u32, order: u32) -> Result<BigRat> {
    Ok(big_h_poly(l)?.derive(order as usize).eval_rat(&half()))
}

/// Closed form of `H_l^(2L)(1/2)` with `L = floor(l/4)`, by residue class of
/// `l mod 4`. `None` when `l < 3`.
pub fn formula_a_closed_form(l: u32) -> Option<BigRat> {
    if l < 3 {
        return None;
    }
    let li = i64::from(l);
    let big_l = li / 4;
    let tail = fact(2 * big_l) / fact(big_l);
    let v = match li % 4 {
        0 => minus_one_pow(big_l) * pow2(6 - 6 * big_l) * fact(4 * big_l - 2) / fact(3 * big_l - 2),
        1 => {
            minus_one_pow(big_l + 1) * pow2(2 - 6 * big_l) * rat(3, 1) * fact(4 * big_l - 1)
                / fact(3 * big_l - 1)
        }
        2 => minus_one_pow(big_l) * pow2(1 - 6 * big_l) * fact(4 * big_l) / fact(3 * big_l),
        _ => minus_one_pow(big_l + 1) * pow2(-2 - 6 * big_l) * fact(4 * big_l + 1) / fact(3 * big_l + 1),
    };
    Some(v * tail)
}

/// Closed form against literal differentiation of `H_l`, at order `2 floor(l/4)`.
pub fn verify_formula_a(l: u32) -> Result<bool> {
    let closed = formula_a_closed_form(l).ok_or_else(|| Error::InvalidType(format!("H_{l} needs l >= 3")))?;
    Ok(closed == big_h_deriv_at_half(l, 2 * (l / 4))?)
}

pub fn verify_formula_b(k: u32, i: u32) -> Result<bool> {
    Ok(h_deriv_at_half(k, i)? == h_deriv_at_half_literal(k, i)?)
}

/// `N_D = ((-1)^(l-3) / (l-2)!) d^(l-3)/dt^(l-3) [(1-t) H_l]`.
pub fn verify_d_via_h(l: u32) -> Result<IdentityCheck> {
    let expected = skew_growth(Series::D.at(l)?).poly;
    let body = &IntPoly::from_i64s(&[1, -1]) * &big_h_poly(l)?;
    let mut got = body
        .derive(l as usize - 3)
        .div_exact_scalar(&factorial(u64::from(l) - 2))
        .ok_or_else(|| Error::Invariant(format!("{}! does not divide the derivative", l - 2)))?;
    if (l - 3) % 2 == 1 {
        got = -got;
    }
    Ok(IdentityCheck::compare(&got, &expected))
}

/// `H_l(1 - t) = H_l(t)`.
pub fn verify_h_symmetry(l: u32) -> Result<IdentityCheck> {
    let h = big_h_poly(l)?;
    Ok(IdentityCheck::compare(&h.compose(&IntPoly::from_i64s(&[1, -1])), &h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_examples() {
        assert_eq!(big_h_poly(3).unwrap(), IntPoly::from_i64s(&[1, -5, 5]));
        assert_eq!(big_h_poly(4).unwrap(), IntPoly::from_i64s(&[0, -2, 10, -16, 8]));
        assert!(big_h_poly(2).is_err());
        assert_eq!(big_h_deriv_at_half(3, 0).unwrap(), rat(-1, 4));
        assert_eq!(big_h_deriv_at_half(4, 2).unwrap(), rat(-4, 1));
        assert_eq!(big_h_deriv_at_half(5, 2).unwrap(), rat(9, 8));
    }

    #[test]
    fn formula_b_examples() {
        assert_eq!(h_deriv_at_half(2, 1).unwrap(), rat(0, 1));
        assert_eq!(h_deriv_at_half(2, 2).unwrap(), rat(-1, 1));
        assert_eq!(h_deriv_at_half(4, 2).unwrap(), rat(-1, 8));
        assert_eq!(h_deriv_at_half(3, 0).unwrap(), rat(-1, 64));
        assert!(matches!(h_deriv_at_half(2, 3), Err(Error::DerivativeOrder { order: 3, degree: 2 })));
        for k in 0..20 {
            for i in 0..=k {
                assert!(verify_formula_b(k, i).unwrap(), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn formula_a_small() {
        assert_eq!(formula_a_closed_form(4), Some(rat(-4, 1)));
        assert_eq!(formula_a_closed_form(5), Some(rat(9, 8)));
        assert_eq!(formula_a_closed_form(3), Some(rat(-1, 4)));
        assert_eq!(formula_a_closed_form(2), None);
        for l in 3..40 {
            assert!(verify_formula_a(l).unwrap(), "l={l}");
        }
    }

    #[test]
    fn d_and_symmetry() {
        for l in 4..16 {
            assert!(verify_d_via_h(l).unwrap().holds(), "D{l}");
            assert!(verify_h_symmetry(l).unwrap().holds());
        }
    }
}
