use super::catalog::ground_basis;
use super::hamiltonian::{plaquette, plaquettes};
use crate::error::{Error, Result};
use crate::oplin::{subspace_action, ComplexMatrix, IDENTITY_TOL};

/// Representation of `op` on the ground basis g1..g4 (row convention).
///
/// Fails with [`Error::SubspaceLeak`] when `op` maps a ground state out of
/// the ground space.
pub fn ground_action(op: &ComplexMatrix) -> Result<ComplexMatrix> {
    let basis: Vec<_> = ground_basis().iter().map(|g| g.to_vec()).collect();
    let act = subspace_action(op, &basis)?;
    let leak = act.max_residual();
    if leak >= IDENTITY_TOL {
        return Err(Error::SubspaceLeak(leak));
    }
    Ok(act.matrix)
}

/// Ŝ₁ on the ground space; it pairs g1 with g3 and g2 with g4.
pub fn plaquette_ground_action() -> Result<ComplexMatrix> {
    ground_action(&plaquette(1)?)
}

/// The concurrence operator τ̂ = Ŝ₃Ŝ₁ on the ground space.
pub fn concurrence_ground_action() -> Result<ComplexMatrix> {
    let [s1, _, s3, _] = plaquettes();
    ground_action(&(&s3 * &s1))
}
