//! Exact real-root counting and isolation, and the root-location checks
//! built on them.

mod bruns;
mod checks;
mod irreducible;
mod isolate;
mod sturm;

pub use checks::{
    boundary_sign_check, interlacing_across_rank, interlacing_with_legendre, smallest_root, smallest_root_sequence,
    unit_roots, verify_conjecture2, Conjecture2Report, SmallestRootReport, SEPARATION_STEPS,
};
pub use bruns::{bruns_bound_check, BrunsOutcome, BrunsReport, DEFAULT_MAX_PRECISION, DEFAULT_START_PRECISION};
pub use irreducible::{
    irreducibility_certificate, irreducibility_of, stripped_skew_growth, Certificate, Irreducibility, IrreducibilityReport,
    DEFAULT_PRIME_COUNT,
};
pub use isolate::{isolate_roots, refine_root, strictly_decreasing, RootBox};
pub use sturm::{count_roots, count_roots_unit, sturm_chain, SturmChain};
