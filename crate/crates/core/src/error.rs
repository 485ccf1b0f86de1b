use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("coefficient of t^{index} is not an integer: {value}")]
    NotIntegral { index: usize, value: String },

    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),

    #[error("reduction modulo {0} is not squarefree; pick another prime")]
    BadPrime(u64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),

    #[error("unsupported for {ctype}: {reason}")]
    Unsupported { ctype: String, reason: String },

    #[error("rank {rank} exceeds the configured bound {bound}")]
    RankBound { rank: u32, bound: u32 },

    #[error("Jacobi parameter must exceed -1, got {0}")]
    JacobiParameter(String),

    #[error("derivative order {order} exceeds degree {degree} of (t(t-1))^k")]
    DerivativeOrder { order: u32, degree: u32 },

    #[error("polynomial is not squarefree; deflate by gcd(p, p') first")]
    NotSquarefree,

    #[error("empty interval: lower endpoint {low} is not below upper endpoint {high}")]
    EmptyInterval { low: String, high: String },

    #[error("group order {order} of {ctype} exceeds the configured limit {limit}")]
    OrderLimit { ctype: String, order: String, limit: u64 },

    #[error("{atoms} atoms exceed the subset limit {limit}; use the Möbius route")]
    SubsetLimit { atoms: usize, limit: usize },

    #[error("lattice property fails: {0}")]
    NotALattice(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("cache file: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
