//! Dense complex linear algebra sized for 2–16 dimensional operators.
//!
//! Basis convention for n sites: index k is the n-bit number b₁…bₙ with
//! site 1 the most significant bit; bit 0 is spin-up, bit 1 spin-down.

mod eigen;
mod json;
mod matrix;
mod pauli;
mod subspace;

pub use eigen::{group_levels, hermitian_eig, HermitianSpectrum, HERMITIAN_TOL};
pub use json::{round_sig, MatrixJson, SIG_DIGITS};
pub use matrix::{
    anticommutator, commutator, inner, kron, product, vec_distance, vec_norm, ComplexMatrix,
};
pub use pauli::{compile, pauli4, Axis, PauliFactor, PauliString};
pub use subspace::{gram_matrix, span_projector, subspace_action, SubspaceAction};

pub use num_complex::Complex64;

/// Tolerance for identities between integer-entry operators.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Tolerance for eigenpair residuals.
pub const EIGEN_TOL: f64 = 1e-9;
/// Tolerance for merging eigenvalues into levels.
pub const GROUPING_TOL: f64 = 1e-6;
