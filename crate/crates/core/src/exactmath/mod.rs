//! Exact scalars and dense univariate polynomial arithmetic.

mod binomial;
mod modp;
mod poly;

pub use binomial::{binomial, binomial_general, factorial};
pub use modp::{factor_degrees_mod_p, is_prime, primes_above};
pub use poly::{Coeff, IntPoly, Poly, RatPoly};

/// Reduced arbitrary-precision rational with positive denominator.
pub type BigRat = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}
