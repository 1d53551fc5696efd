//! Exact diagonalization and operator algebra for the four-spin
//! triangular-star model.
//!
//! Modules:
//! - [`oplin`]: dense complex matrices, Pauli strings, Jacobi eigensolver.
//! - [`model`]: Hamiltonian, plaquette operators, level tables, named states.
//! - [`statistics`]: cluster and plaquette exchange operators, statistical
//!   matrices, phase maps, braid loops.
//! - [`fermionization`]: inverse Jordan-Wigner Majorana and complex fermions.
//! - [`entanglement`]: partial traces, von Neumann entropy, concurrence.

pub mod entanglement;
pub mod error;
pub mod fermionization;
pub mod model;
pub mod oplin;
pub mod statistics;

pub use error::{Error, Result};
pub use model::{Couplings, FourSpinState};
pub use oplin::{Complex64, ComplexMatrix, HermitianSpectrum, PauliString};
