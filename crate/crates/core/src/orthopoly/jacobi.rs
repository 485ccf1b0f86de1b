//! Shifted Jacobi polynomials `P^(a,b)_l(2t - 1)`.
//!
//! Two exact routes are provided: the Rodrigues identity (differentiate
//! `(t-1)^(l+a) t^(l+b)` and divide out `(t-1)^a t^b`), usable when both
//! parameters are nonnegative integers, and the finite sum
//! `sum_s C(l+a, l-s) C(l+b, s) (t-1)^s t^(l-s)`, valid for any rational
//! parameters above -1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IdentityCheck;
use crate::error::{Error, Result};
use crate::exactmath::{factorial, rat, BigRat, IntPoly, RatPoly};
use crate::skewgrowth::{skew_growth, CoxeterType, Family};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    alpha: BigRat,
    beta: BigRat,
    degree: u32,
}

impl JacobiParams {
    pub fn new(alpha: BigRat, beta: BigRat, degree: u32) -> Result<JacobiParams> {
        let minus_one = -BigRat::one();
        for v in [&alpha, &beta] {
            if *v <= minus_one {
                return Err(Error::JacobiParameter(v.to_string()));
            }
        }
        Ok(JacobiParams { alpha, beta, degree })
    }

    pub fn integer(alpha: u32, beta: u32, degree: u32) -> JacobiParams {
        JacobiParams { alpha: rat(alpha.into(), 1), beta: rat(beta.into(), 1), degree }
    }

    pub fn alpha(&self) -> &BigRat {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRat {
        &self.beta
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn as_nonneg_integers(&self) -> Option<(u32, u32)> {
        let conv = |v: &BigRat| {
            if v.is_integer() && !v.is_negative() {
                v.to_integer().to_u32()
            } else {
                None
            }
        };
        Some((conv(&self.alpha)?, conv(&self.beta)?))
    }
}

/// Rodrigues route for nonnegative integer parameters. The division by
/// `(t-1)^a t^b` must be exact; a nonzero remainder is reported as an
/// invariant violation.
pub fn shifted_jacobi_rodrigues(l: u32, a: u32, b: u32) -> Result<IntPoly> {
    let n = l as usize;
    let t_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    let base = &t_minus_1.pow(l + a) * &IntPoly::monomial(BigInt::one(), n + b as usize);
    let scaled = base
        .derive(n)
        .div_exact_scalar(&factorial(u64::from(l)))
        .ok_or_else(|| Error::Invariant(format!("{l}! does not divide the Rodrigues derivative")))?;
    let mut q = scaled
        .shift_down(b as usize)
        .ok_or_else(|| Error::Invariant(format!("t^{b} does not divide the Rodrigues derivative")))?;
    for _ in 0..a {
        q = q
            .div_exact(&t_minus_1)
            .ok_or_else(|| Error::Invariant("t - 1 does not divide the Rodrigues derivative".into()))?;
    }
    Ok(q)
}

/// Finite-sum route, valid for all admissible parameters:
/// `sum_s C(l+a, l-s) C(l+b, s) (t-1)^s t^(l-s)`, expanded coefficientwise.
pub fn shifted_jacobi_sum(params: &JacobiParams) -> RatPoly {
    let l = params.degree as usize;
    let lr = rat(params.degree.into(), 1);
    let (xa, xb) = (&lr + &params.alpha, &lr + &params.beta);
    // C(x, k + 1) = C(x, k) (x - k) / (k + 1)
    let rising = |x: &BigRat| {
        let mut v = vec![BigRat::one()];
        for k in 0..l {
            let next = &v[k] * (x - rat(k as i64, 1)) / rat(k as i64 + 1, 1);
            v.push(next);
        }
        v
    };
    let ca = rising(&xa);
    let cb = rising(&xb);
    let c: Vec<BigRat> = (0..=l).map(|s| &ca[l - s] * &cb[s]).collect();
    let den = c.iter().fold(BigInt::one(), |d, x| d.lcm(x.denom()));
    // (t-1)^s t^(l-s) contributes C(s, j) (-1)^(s-j) to t^(l-s+j)
    let mut acc = vec![BigInt::zero(); l + 1];
    let mut row = vec![BigInt::one()];
    for (s, cs) in c.iter().enumerate() {
        if s > 0 {
            let mut next = vec![BigInt::one(); s + 1];
            for j in 1..s {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        if cs.is_zero() {
            continue;
        }
        let n = cs.numer() * (&den / cs.denom());
        for (j, b) in row.iter().enumerate() {
            acc[l - s + j] += &n * b;
        }
    }
    let coeffs = acc
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let v = if (l - k) % 2 == 1 { -v } else { v };
            BigRat::new(v, den.clone())
        })
        .collect();
    RatPoly::new(coeffs)
}

/// The shifted Jacobi polynomial. Integer parameters go through the
/// Rodrigues route and are cross-checked against the finite sum.
pub fn shifted_jacobi(params: &JacobiParams) -> Result<RatPoly> {
    let sum = shifted_jacobi_sum(params);
    if let Some((a, b)) = params.as_nonneg_integers() {
        let rod = shifted_jacobi_rodrigues(params.degree, a, b)?.to_rat();
        if let Some(k) = rod.first_difference(&sum) {
            return Err(Error::Invariant(format!(
                "Jacobi routes disagree at t^{k} for (a, b, l) = ({a}, {b}, {})",
                params.degree
            )));
        }
        return Ok(rod);
    }
    Ok(sum)
}

/// Parameters `(a, b) = (p - 3, 0)` satisfying `1 + a = (p - 2)(1 + b)`.
pub fn default_dihedral_params(p: u32) -> (BigRat, BigRat) {
    (rat(i64::from(p) - 3, 1), BigRat::zero())
}

fn jac(a: BigRat, b: BigRat, l: u32) -> Result<RatPoly> {
    shifted_jacobi(&JacobiParams::new(a, b, l)?)
}

fn int(v: i64) -> BigRat {
    rat(v, 1)
}

fn sign(e: u32) -> BigRat {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Checks the shifted-Jacobi expression of `N` for `A_l`, `B_l`, `D_l`,
/// `H3` and `I2(p)`:
///
/// * `N_A = ((-1)^(l-1) / l) (1-t) P^(1,1)_(l-1)`
/// * `N_B = (-1)^(l-1) (1-t) P^(1,0)_(l-1)`
/// * `N_D = (-1)^(l-2) (1-t)^2 P^(2,0)_(l-2) + (-1)^(l-1) t^2 (1-t) P^(1,2)_(l-3)`
/// * `N_H3 = (8/3) (1-t) P^(1,-1/2)_2`
/// * `N_I2(p) = -((1-t)/(1+b)) P^(a,b)_1` with `1 + a = (p-2)(1+b)`
///
/// `dihedral` overrides the default `(a, b)` for `I2(p)`.
pub fn verify_jacobi_identity(ctype: CoxeterType, dihedral: Option<(BigRat, BigRat)>) -> Result<IdentityCheck> {
    let expected = skew_growth(ctype).poly.to_rat();
    let l = ctype.rank();
    let one_minus_t = RatPoly::linear(int(1), int(-1));
    let got = match ctype.family() {
        Family::A => {
            let coef = sign(l - 1) / int(l.into());
            (&one_minus_t * &jac(int(1), int(1), l - 1)?).scale(&coef)
        }
        Family::B => (&one_minus_t * &jac(int(1), int(0), l - 1)?).scale(&sign(l - 1)),
        Family::D => {
            let first = (&one_minus_t.pow(2) * &jac(int(2), int(0), l - 2)?).scale(&sign(l - 2));
            let t2 = RatPoly::monomial(int(1), 2);
            let second = (&(&t2 * &one_minus_t) * &jac(int(1), int(2), l - 3)?).scale(&sign(l - 1));
            &first + &second
        }
        Family::H if l == 3 => (&one_minus_t * &jac(int(1), rat(-1, 2), 2)?).scale(&rat(8, 3)),
        Family::I2 => {
            let p = ctype.dihedral_order().unwrap_or(3);
            let (a, b) = dihedral.unwrap_or_else(|| default_dihedral_params(p));
            let one = BigRat::one();
            if &one + &a != int(i64::from(p) - 2) * (&one + &b) {
                return Err(Error::Unsupported {
                    ctype: ctype.to_string(),
                    reason: format!("parameters ({a}, {b}) violate 1 + a = (p - 2)(1 + b)"),
                });
            }
            let coef = -(&one / (&one + &b));
            (&one_minus_t * &jac(a, b, 1)?).scale(&coef)
        }
        _ => {
            return Err(Error::Unsupported {
                ctype: ctype.to_string(),
                reason: "no Jacobi expression is known".into(),
            })
        }
    };
    Ok(IdentityCheck::compare(&got, &expected))
}

/// `C(l + a, l - s) C(l + b, s)` for integers, used by tests as an
/// independent coefficient oracle.
#[cfg(test)]
pub(crate) fn sum_coefficient(l: i64, a: i64, b: i64, s: i64) -> BigInt {
    use crate::exactmath::binomial;
    binomial(l + a, l - s) * binomial(l + b, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        for (a, b) in [(0, 0), (1, 1), (2, 0), (1, 2)] {
            assert_eq!(shifted_jacobi(&JacobiParams::integer(a, b, 0)).unwrap(), RatPoly::one());
        }
        assert_eq!(shifted_jacobi(&JacobiParams::integer(1, 1, 1)).unwrap(), ip(&[-2, 4]).to_rat());
        assert_eq!(shifted_jacobi(&JacobiParams::integer(1, 0, 1)).unwrap(), ip(&[-1, 3]).to_rat());
        assert_eq!(shifted_jacobi(&JacobiParams::integer(2, 0, 1)).unwrap(), ip(&[-1, 4]).to_rat());
        let h3 = JacobiParams::new(int(1), rat(-1, 2), 2).unwrap();
        let lhs = (&RatPoly::linear(int(1), int(-1)) * &shifted_jacobi(&h3).unwrap()).scale(&rat(8, 3));
        assert_eq!(lhs, ip(&[1, -15, 35, -21]).to_rat());
    }

    #[test]
    fn parameter_validation() {
        assert!(JacobiParams::new(int(-1), int(0), 2).is_err());
        assert!(JacobiParams::new(int(0), rat(-3, 2), 2).is_err());
        assert!(JacobiParams::new(rat(-1, 2), rat(-1, 2), 2).is_ok());
    }

    #[test]
    fn routes_agree_on_integer_parameters() {
        for l in 0..12u32 {
            for a in 0..4u32 {
                for b in 0..4u32 {
                    let rod = shifted_jacobi_rodrigues(l, a, b).unwrap();
                    let sum = shifted_jacobi_sum(&JacobiParams::integer(a, b, l));
                    assert_eq!(rod.to_rat(), sum, "l={l} a={a} b={b}");
                    // coefficient of t^l: sum_s C(l+a, l-s) C(l+b, s)
                    let lead: BigInt = (0..=l as i64)
                        .map(|s| sum_coefficient(l as i64, a as i64, b as i64, s))
                        .sum();
                    assert_eq!(rod.coeff(l as usize), lead);
                }
            }
        }
    }

    #[test]
    fn identities_for_small_types() {
        assert!(verify_jacobi_identity(CoxeterType::a(2).unwrap(), None).unwrap().holds());
        assert!(verify_jacobi_identity(CoxeterType::b(2).unwrap(), None).unwrap().holds());
        assert!(verify_jacobi_identity(CoxeterType::d(4).unwrap(), None).unwrap().holds());
        assert!(verify_jacobi_identity(CoxeterType::h(3).unwrap(), None).unwrap().holds());
        let i25 = CoxeterType::i2(5).unwrap();
        assert!(verify_jacobi_identity(i25, Some((int(2), int(0)))).unwrap().holds());
        // a non-default admissible pair: b = 1/2, 1 + a = 3 * 3/2
        assert!(verify_jacobi_identity(i25, Some((rat(7, 2), rat(1, 2)))).unwrap().holds());
        assert!(verify_jacobi_identity(i25, Some((int(1), int(0)))).is_err());
        assert!(verify_jacobi_identity(CoxeterType::g2(), None).is_err());
    }
}
