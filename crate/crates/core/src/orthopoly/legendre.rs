use num_bigint::BigInt;

use super::IdentityCheck;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, IntPoly};
use crate::skewgrowth::{skew_growth, Series};

/// `P_l(2t - 1) = (-1)^l sum_k (-1)^k (l+k)! / ((l-k)! (k!)^2) t^k`.
pub fn shifted_legendre(l: u32) -> IntPoly {
    let li = i64::from(l);
    let coeffs = (0..=li)
        .map(|k| {
            // (l+k)! / ((l-k)! (k!)^2) = C(l+k, k) C(l, k)
            let m: BigInt = binomial(li + k, k) * binomial(li, k);
            if (li + k) % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

/// `(t N_A)' = (-1)^l P_l` and `N_B + (t/l) N_B' = (-1)^l P_l`.
pub fn verify_legendre_identity(series: Series, l: u32) -> Result<IdentityCheck> {
    let n = skew_growth(series.at(l)?).poly;
    let mut rhs = shifted_legendre(l);
    if l % 2 == 1 {
        rhs = -rhs;
    }
    match series {
        Series::A => Ok(IdentityCheck::compare(&n.shift_up(1).derive(1), &rhs)),
        Series::B => {
            // l N_B + t N_B' = l (-1)^l P_l keeps everything integral
            let lhs = &n.scale(&BigInt::from(l)) + &n.derive(1).shift_up(1);
            Ok(IdentityCheck::compare(&lhs, &rhs.scale(&BigInt::from(l))))
        }
        Series::D => Err(Error::Unsupported {
            ctype: format!("D{l}"),
            reason: "no Legendre identity for the D series".into(),
        }),
    }
}

/// `(l+2) P_(l+2) = (2l+3)(2t-1) P_(l+1) - (l+1) P_l`.
pub fn verify_legendre_recurrence(l: u32) -> IdentityCheck {
    let li = i64::from(l);
    let lhs = shifted_legendre(l + 2).scale(&BigInt::from(li + 2));
    let lin = IntPoly::from_i64s(&[-(2 * li + 3), 2 * (2 * li + 3)]);
    let rhs = &(&lin * &shifted_legendre(l + 1)) - &shifted_legendre(l).scale(&BigInt::from(li + 1));
    IdentityCheck::compare(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{shifted_jacobi, JacobiParams};

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(shifted_legendre(0), ip(&[1]));
        assert_eq!(shifted_legendre(1), ip(&[-1, 2]));
        assert_eq!(shifted_legendre(2), ip(&[1, -6, 6]));
    }

    #[test]
    fn agrees_with_jacobi_zero_zero() {
        for l in 0..30 {
            assert_eq!(shifted_legendre(l).to_rat(), shifted_jacobi(&JacobiParams::integer(0, 0, l)).unwrap());
            assert!(verify_legendre_recurrence(l).holds());
        }
    }

    #[test]
    fn identities() {
        assert!(verify_legendre_identity(Series::A, 1).unwrap().holds());
        assert!(verify_legendre_identity(Series::B, 2).unwrap().holds());
        assert!(verify_legendre_identity(Series::A, 20).unwrap().holds());
        assert!(verify_legendre_identity(Series::D, 4).is_err());
        assert!(verify_legendre_identity(Series::B, 1).is_err());
    }
}
