//! Rodrigues-type formulas, shifted Jacobi and Legendre polynomials, and the
//! exact identities and recurrences relating them to the skew-growth
//! polynomials of the A, B and D series.

mod hfunc;
mod jacobi;
mod legendre;
mod recurrence;
mod rodrigues;

pub use hfunc::{
    big_h_deriv_at_half, big_h_poly, formula_a_closed_form, h_deriv_at_half, h_deriv_at_half_literal, h_poly,
    verify_d_via_h, verify_formula_a, verify_formula_b, verify_h_symmetry,
};
pub use jacobi::{
    default_dihedral_params, shifted_jacobi, shifted_jacobi_rodrigues, shifted_jacobi_sum, verify_jacobi_identity,
    JacobiParams,
};
pub use legendre::{shifted_legendre, verify_legendre_identity, verify_legendre_recurrence};
pub use recurrence::{d_from_b_expression, recurrence_coeffs_d, verify_d_from_b, verify_recurrence, DRecurrenceCoeffs};
pub use rodrigues::{rodrigues_d_second_form, rodrigues_poly, verify_rodrigues};

use crate::exactmath::{Coeff, Poly};

/// Outcome of an exact polynomial identity check.
///
/// On failure `first_mismatch` names the lowest coefficient index where the
/// two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub first_mismatch: Option<usize>,
}

impl IdentityCheck {
    pub fn compare<T: Coeff>(lhs: &Poly<T>, rhs: &Poly<T>) -> IdentityCheck {
        IdentityCheck { first_mismatch: lhs.first_difference(rhs) }
    }

    pub fn from_bool(ok: bool) -> IdentityCheck {
        IdentityCheck { first_mismatch: if ok { None } else { Some(0) } }
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }

    /// Combine two checks; the first failure wins.
    pub fn and(self, other: IdentityCheck) -> IdentityCheck {
        if self.holds() {
            other
        } else {
            self
        }
    }
}
