use num_bigint::BigInt;

use super::IdentityCheck;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, IntPoly};
use crate::skewgrowth::{skew_growth, Series};

/// `t^a (1 - t)^b`, expanded.
pub(crate) fn t_pow_one_minus_t_pow(a: usize, b: u32) -> IntPoly {
    let b = i64::from(b);
    let mut coeffs = vec![BigInt::from(0); a + b as usize + 1];
    for k in 0..=b {
        let c = binomial(b, k);
        coeffs[a + k as usize] = if k % 2 == 0 { c } else { -c };
    }
    IntPoly::new(coeffs)
}

/// `(1/n!) d^k/dt^k p`, requiring exact integrality.
fn scaled_derivative(p: &IntPoly, k: usize, n: u64) -> Result<IntPoly> {
    p.derive(k)
        .div_exact_scalar(&factorial(n))
        .ok_or_else(|| Error::Invariant(format!("{n}! does not divide the {k}-th derivative")))
}

fn check_rank(series: Series, l: u32) -> Result<()> {
    if l < series.min_rank() {
        return Err(Error::InvalidType(format!("{series}{l}")));
    }
    Ok(())
}

/// Right-hand side of the Rodrigues-type formula for the given series,
/// computed by expanding and differentiating. For D this is the first
/// (two-term) form; see [`rodrigues_d_second_form`] for the other.
pub fn rodrigues_poly(series: Series, l: u32) -> Result<IntPoly> {
    check_rank(series, l)?;
    let n = l as usize;
    let lu = u64::from(l);
    match series {
        Series::A => {
            let tn = scaled_derivative(&t_pow_one_minus_t_pow(n, l), n - 1, lu)?;
            tn.shift_down(1).ok_or_else(|| Error::Invariant("t does not divide t N_A".into()))
        }
        Series::B => scaled_derivative(&t_pow_one_minus_t_pow(n - 1, l), n - 1, lu - 1),
        Series::D => {
            let first = scaled_derivative(&t_pow_one_minus_t_pow(n - 2, l), n - 2, lu - 2)?;
            let second = scaled_derivative(&t_pow_one_minus_t_pow(n - 1, l - 2), n - 3, lu - 3)?;
            Ok(&first + &second)
        }
    }
}

/// `(1/(l-2)!) d^(l-3)/dt^(l-3) [ t^(l-3) (1-t)^(l-2) {(l-2) - (3l-4) t + (3l-4) t^2} ]`.
pub fn rodrigues_d_second_form(l: u32) -> Result<IntPoly> {
    check_rank(Series::D, l)?;
    let li = i64::from(l);
    let n = l as usize;
    let quad = IntPoly::from_i64s(&[li - 2, -(3 * li - 4), 3 * li - 4]);
    let inner = &t_pow_one_minus_t_pow(n - 3, l - 2) * &quad;
    scaled_derivative(&inner, n - 3, u64::from(l) - 2)
}

/// Rodrigues formula equals the tabulated polynomial; for D both displayed
/// forms are compared as well.
pub fn verify_rodrigues(series: Series, l: u32) -> Result<IdentityCheck> {
    let expected = skew_growth(series.at(l)?).poly;
    let got = rodrigues_poly(series, l)?;
    let mut check = IdentityCheck::compare(&got, &expected);
    if series == Series::D {
        check = check.and(IdentityCheck::compare(&rodrigues_d_second_form(l)?, &got));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(rodrigues_poly(Series::A, 1).unwrap(), ip(&[1, -1]));
        assert_eq!(rodrigues_poly(Series::B, 2).unwrap(), ip(&[1, -4, 3]));
        assert_eq!(rodrigues_poly(Series::D, 4).unwrap(), ip(&[1, -12, 39, -48, 20]));
        assert_eq!(rodrigues_d_second_form(4).unwrap(), ip(&[1, -12, 39, -48, 20]));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(rodrigues_poly(Series::D, 3).is_err());
        assert!(rodrigues_poly(Series::B, 1).is_err());
        assert!(rodrigues_poly(Series::A, 0).is_err());
    }

    #[test]
    fn small_ranks_agree_with_table() {
        for s in Series::ALL {
            for l in s.min_rank()..=25 {
                assert!(verify_rodrigues(s, l).unwrap().holds(), "{s}{l}");
            }
        }
    }

    #[test]
    fn expansion_helper() {
        assert_eq!(t_pow_one_minus_t_pow(1, 2), ip(&[0, 1, -2, 1]));
        assert_eq!(t_pow_one_minus_t_pow(0, 0), ip(&[1]));
    }
}
