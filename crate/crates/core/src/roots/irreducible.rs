use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{factor_degrees_mod_p, primes_above, IntPoly};
use crate::skewgrowth::{has_factor_one_minus_2t, reduced_skew_growth, CoxeterType};

pub const DEFAULT_PRIME_COUNT: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Degree at most one after stripping.
    Trivial,
    /// A single irreducible factor modulo this prime.
    SinglePrime { prime: u64 },
    /// No proper factor degree is compatible with every listed prime.
    DegreeSets { primes: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Irreducibility {
    Certified { certificate: Certificate },
    Inconclusive { possible_degrees: Vec<usize> },
}

impl Irreducibility {
    pub fn is_certified(&self) -> bool {
        matches!(self, Irreducibility::Certified { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub stripped: String,
    pub degree: usize,
    pub result: Irreducibility,
    /// Primes that divided the leading coefficient or broke squarefreeness.
    pub skipped: Vec<u64>,
}

/// `N / (1 - t)`, further divided by `1 - 2t` when that divides `N`.
pub fn stripped_skew_growth(ctype: CoxeterType) -> Result<IntPoly> {
    let mut q = reduced_skew_growth(ctype)?;
    if has_factor_one_minus_2t(ctype) {
        q = q
            .div_exact(&IntPoly::from_i64s(&[1, -2]))
            .ok_or_else(|| Error::Invariant(format!("1 - 2t does not divide N^ for {ctype}")))?;
    }
    Ok(q)
}

fn subset_sums(degrees: &[usize], n: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (0..=n).filter(|&s| reach[s]).collect()
}

/// One-sided irreducibility test over the rationals for an integer
/// polynomial. Every rational factor of degree `k` reduces to a product of
/// modular factors, so `k` must be a subset sum of the factor degrees for
/// each usable prime; if only `0` and `n` survive the polynomial is
/// irreducible.
pub fn irreducibility_of(p: &IntPoly, primes: &[u64]) -> (Irreducibility, Vec<u64>) {
    let n = p.degree().unwrap_or(0);
    if n <= 1 {
        return (Irreducibility::Certified { certificate: Certificate::Trivial }, Vec::new());
    }
    let mut possible: BTreeSet<usize> = (0..=n).collect();
    let mut used = Vec::new();
    let mut skipped = Vec::new();
    for &prime in primes {
        let degrees = match factor_degrees_mod_p(p, prime) {
            Ok(d) => d,
            Err(_) => {
                skipped.push(prime);
                continue;
            }
        };
        if degrees.len() == 1 {
            return (Irreducibility::Certified { certificate: Certificate::SinglePrime { prime } }, skipped);
        }
        used.push(prime);
        let sums = subset_sums(&degrees, n);
        possible = possible.intersection(&sums).copied().collect();
        if possible.len() == 2 {
            return (
                Irreducibility::Certified { certificate: Certificate::DegreeSets { primes: used } },
                skipped,
            );
        }
    }
    let proper = possible.into_iter().filter(|&d| d != 0 && d != n).collect();
    (Irreducibility::Inconclusive { possible_degrees: proper }, skipped)
}

/// Irreducibility certificate for the stripped skew-growth polynomial.
/// `primes = None` uses the first 25 primes above the degree.
pub fn irreducibility_certificate(ctype: CoxeterType, primes: Option<&[u64]>) -> Result<IrreducibilityReport> {
    let q = stripped_skew_growth(ctype)?;
    let degree = q.degree().unwrap_or(0);
    let default;
    let primes = match primes {
        Some(p) => p,
        None => {
            default = primes_above(degree as u64, DEFAULT_PRIME_COUNT);
            &default
        }
    };
    let (result, skipped) = irreducibility_of(&q, primes);
    Ok(IrreducibilityReport { stripped: q.to_string(), degree, result, skipped })
}
