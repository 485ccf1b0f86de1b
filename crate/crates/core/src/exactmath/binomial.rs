use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::BigRat;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).map(BigInt::from).product()
}

/// Generalized binomial `a (a-1) ... (a-k+1) / k!` for rational `a`.
///
/// For integer `a` with `0 <= a < k` one of the factors vanishes, so the
/// result is 0 without special casing.
pub fn binomial_general(a: &BigRat, k: u32) -> BigRat {
    let mut num = BigRat::one();
    for i in 0..k {
        num *= a - BigRat::from_integer(BigInt::from(i));
        if num.is_zero() {
            return num;
        }
    }
    num / BigRat::from_integer(factorial(u64::from(k)))
}

/// Integer binomial with the convention `C(n, k) = 0` for `k < 0` and for
/// `0 <= n < k`. Negative `n` follows the generalized definition.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial_general(&rat(4, 1), 2), rat(6, 1));
        assert_eq!(binomial_general(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(binomial_general(&rat(-1, 2), 2), rat(3, 8));
        assert_eq!(binomial_general(&rat(2, 1), 5), rat(0, 1));
    }

    #[test]
    fn edge_conventions() {
        assert_eq!(binomial(2, -1), BigInt::zero());
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // C(-1, k) = (-1)^k
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                assert_eq!(
                    binomial_general(&rat(n, 1), k as u32),
                    BigRat::from_integer(binomial(n, k))
                );
            }
        }
    }
}
