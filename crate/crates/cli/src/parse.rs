use std::str::FromStr;

use dualskew_core::exactmath::BigRat;
use dualskew_core::skewgrowth::{CoxeterType, Series};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{CliError, CliResult};

pub fn parse_type(s: &str) -> CliResult<CoxeterType> {
    s.parse().map_err(|_| CliError::usage(format!("invalid type spec '{s}'")))
}

pub fn parse_series(s: &str) -> CliResult<Series> {
    s.parse().map_err(|_| CliError::usage(format!("invalid family '{s}' (expected A, B or D)")))
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// A positive rational from `a/b`, `0.001` or `1e-12`, read exactly.
pub fn parse_eps(s: &str) -> CliResult<BigRat> {
    let bad = || CliError::usage(format!("invalid eps '{s}'"));
    let t = s.trim();
    let value = if t.contains('/') {
        BigRat::from_str(t).map_err(|_| bad())?
    } else {
        let (mant, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (t, 0),
        };
        let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
        if (int.is_empty() && frac.is_empty()) || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let shift = exp - frac.len() as i32;
        if shift >= 0 {
            BigRat::from_integer(digits * pow10(shift as u32))
        } else {
            BigRat::new(digits, pow10(shift.unsigned_abs()))
        }
    };
    if value.is_zero() || value.is_negative() {
        return Err(bad());
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dualskew_core::exactmath::rat;

    #[test]
    fn eps_forms() {
        assert_eq!(parse_eps("1e-12").unwrap(), BigRat::new(1.into(), pow10(12)));
        assert_eq!(parse_eps("1/1000").unwrap(), rat(1, 1000));
        assert_eq!(parse_eps("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_eps("2.5E-1").unwrap(), rat(1, 4));
        assert_eq!(parse_eps("3").unwrap(), rat(3, 1));
        for s in ["", "0", "-1e-3", "x", "1e", ".", "1/0"] {
            assert!(parse_eps(s).is_err(), "{s}");
        }
    }

    #[test]
    fn type_errors_are_usage() {
        assert!(parse_type("Q7").unwrap_err().is_usage());
        assert!(parse_series("E").unwrap_err().is_usage());
        assert_eq!(parse_type("i2:7").unwrap().to_string(), "I2(7)");
    }
}
