use std::cmp::Ordering;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactmath::{BigRat, IntPoly};

/// Negated-remainder chain `f0 = p`, `f1 = p'`, `f(k+1) = -rem(f(k-1), f(k))`.
///
/// Elements are kept as primitive integer polynomials; each one is a
/// positive multiple of the textbook rational element, so sign sequences
/// agree. `counting` holds every element divided by the last one, which is
/// the chain of the squarefree part of `p`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
    counting: Vec<IntPoly>,
}

fn positive_primitive(p: &IntPoly) -> IntPoly {
    let c = p.content();
    p.div_exact_scalar(&c).unwrap_or_else(|| p.clone())
}

pub fn sturm_chain(p: &IntPoly) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![positive_primitive(p)];
    let d = p.derive(1);
    if !d.is_zero() {
        chain.push(positive_primitive(&d));
        loop {
            let n = chain.len();
            let r = chain[n - 2].pseudo_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(positive_primitive(&-r));
        }
    }
    let last = chain.last().cloned().unwrap_or_else(IntPoly::one);
    let counting = if last.degree() == Some(0) {
        chain.clone()
    } else {
        chain
            .iter()
            .map(|f| {
                f.div_exact(&last)
                    .ok_or_else(|| Error::Invariant("chain element not divisible by the gcd".into()))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(SturmChain { chain, counting })
}

impl SturmChain {
    pub fn polys(&self) -> &[IntPoly] {
        &self.chain
    }

    /// The chain of `p / gcd(p, p')`.
    pub fn counting_polys(&self) -> &[IntPoly] {
        &self.counting
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.chain.last().and_then(IntPoly::degree) == Some(0)
    }

    pub fn squarefree_part(&self) -> &IntPoly {
        &self.counting[0]
    }

    /// Sign variations of the counting chain at `x`, zeros dropped.
    pub fn variations(&self, x: &BigRat) -> usize {
        sign_variations(self.counting.iter().map(|f| f.sign_at(x)))
    }
}

pub(crate) fn sign_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Distinct real roots in `(a, b]`, or in `(a, b)` when `half_open` is false.
pub fn count_roots(chain: &SturmChain, a: &BigRat, b: &BigRat, half_open: bool) -> Result<usize> {
    if a >= b {
        return Err(Error::EmptyInterval { low: a.to_string(), high: b.to_string() });
    }
    let n = chain.variations(a) - chain.variations(b);
    if !half_open && chain.squarefree_part().sign_at(b) == Ordering::Equal {
        return Ok(n - 1);
    }
    Ok(n)
}

/// `count_roots` on `(0, 1]`, reading signs off coefficients directly.
pub fn count_roots_unit(chain: &SturmChain) -> usize {
    let at0 = sign_variations(chain.counting.iter().map(|f| f.coeff(0).sign().into_ordering()));
    let at1 = sign_variations(chain.counting.iter().map(|f| {
        let s: num_bigint::BigInt = f.coeffs().iter().sum();
        s.signum().sign().into_ordering()
    }));
    at0 - at1
}

trait IntoOrdering {
    fn into_ordering(self) -> Ordering;
}

impl IntoOrdering for num_bigint::Sign {
    fn into_ordering(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}
