//! Determinant identities and small fermion systems: the generalized Cramer
//! rule, Slater overlaps with Löwdin and Thouless formulas checked on an
//! explicit Fock space, and the two-level Lipkin model with its boson images.

mod cramer;
mod fock;
mod lipkin;
mod slater;

pub use cramer::{determinant, generalized_cramer, generalized_cramer_all, solve_with_det, CramerSolution, Field, Rows, SubstitutionQuery};
pub use fock::{FockVector, TwoBody, MAX_ORBITALS};
pub use lipkin::{
    boson_expansion_coeffs, boson_recurrence_weight, lipkin_alpha, lipkin_beta, lipkin_boson_images, lipkin_boson_images_dim, lipkin_gap_error,
    lipkin_hamiltonian, lipkin_spectrum, LipkinBosonImages, LipkinModel,
};
pub use slater::{
    fock_one_body_element, fock_two_body_element, lowdin_matrix_element, lowdin_two_body, random_unitary, slater_overlap, thouless, thouless_residual,
    SlaterSystem, ThoulessReport, OVERLAP_FLOOR,
};
