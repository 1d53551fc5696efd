use num_complex::Complex64;

use super::eigen::hermitian_eig;
use super::matrix::{inner, vec_norm, ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Smallest admissible Gram eigenvalue for a basis to count as independent.
const GRAM_FLOOR: f64 = 1e-10;

/// How an operator acts on a list of basis vectors.
#[derive(Debug, Clone)]
pub struct SubspaceAction {
    /// Row convention: `op·vᵢ ≈ Σⱼ matrix[i,j]·vⱼ`.
    pub matrix: ComplexMatrix,
    /// ‖op·vᵢ − Σⱼ matrix[i,j]·vⱼ‖ per basis vector.
    pub residuals: Vec<f64>,
    /// Component of `op·vᵢ` orthogonal to the span.
    pub leak: Vec<Vec<Complex64>>,
}

impl SubspaceAction {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// `G[i,j] = ⟨vᵢ|vⱼ⟩`.
pub fn gram_matrix(basis: &[Vec<Complex64>]) -> ComplexMatrix {
    let d = basis.len().max(1);
    let mut g = ComplexMatrix::zeros(d, d);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            g[(i, j)] = inner(a, b);
        }
    }
    g
}

fn checked_gram(basis: &[Vec<Complex64>]) -> Result<ComplexMatrix> {
    let dim = basis.first().map(Vec::len).unwrap_or(0);
    if basis.is_empty() || dim == 0 || basis.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(
            "basis vectors of unequal or zero length".into(),
        ));
    }
    let g = gram_matrix(basis);
    let smallest = hermitian_eig(&g)?.eigenvalues[0];
    if smallest < GRAM_FLOOR {
        return Err(Error::LinearlyDependent(smallest));
    }
    Ok(g)
}

/// Represents `op` on `span(basis)`; the basis need only be linearly independent.
pub fn subspace_action(op: &ComplexMatrix, basis: &[Vec<Complex64>]) -> Result<SubspaceAction> {
    let g = checked_gram(basis)?;
    if op.cols() != basis[0].len() || !op.is_square() {
        return Err(Error::DimensionMismatch(
            "operator does not act on the basis space".into(),
        ));
    }
    let d = basis.len();
    let images: Vec<Vec<Complex64>> = basis.iter().map(|v| op.apply(v)).collect();
    // overlaps[i,k] = ⟨v_k|op v_i⟩ = Σ_j M[i,j] G[k,j]  ⇒  M = overlaps·(Gᵀ)⁻¹
    let mut overlaps = ComplexMatrix::zeros(d, d);
    for (i, w) in images.iter().enumerate() {
        for (k, v) in basis.iter().enumerate() {
            overlaps[(i, k)] = inner(v, w);
        }
    }
    let matrix = &overlaps * &g.transpose().inverse()?;

    let mut residuals = Vec::with_capacity(d);
    let mut leak = Vec::with_capacity(d);
    for (i, w) in images.iter().enumerate() {
        let mut rest = w.clone();
        for (j, v) in basis.iter().enumerate() {
            let m = matrix[(i, j)];
            for (r, x) in rest.iter_mut().zip(v) {
                *r -= m * x;
            }
        }
        residuals.push(vec_norm(&rest));
        leak.push(rest);
    }
    Ok(SubspaceAction {
        matrix,
        residuals,
        leak,
    })
}

/// Orthogonal projector onto `span(basis)`, `V·G⁻¹·V†`.
pub fn span_projector(basis: &[Vec<Complex64>]) -> Result<ComplexMatrix> {
    let g = checked_gram(basis)?;
    let cols: Vec<&[Complex64]> = basis.iter().map(Vec::as_slice).collect();
    let v = ComplexMatrix::from_columns(&cols)?;
    let p = &(&v * &g.inverse()?) * &v.adjoint();
    Ok(p.map(|z| if z.norm() < 1e-300 { ZERO } else { z }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplin::pauli::Axis;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sigma_x_swaps_computational_basis() {
        let basis = vec![vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(1., 0.)]];
        let act = subspace_action(&Axis::X.matrix(), &basis).unwrap();
        assert!(act.matrix.distance(&Axis::X.matrix()) < 1e-15);
        assert!(act.max_residual() < 1e-15);
    }

    #[test]
    fn non_orthogonal_basis_is_handled() {
        let s = 0.5f64.sqrt();
        let basis = vec![vec![c(1., 0.), c(0., 0.)], vec![c(s, 0.), c(s, 0.)]];
        let act = subspace_action(&ComplexMatrix::identity(2), &basis).unwrap();
        assert!(act.matrix.distance(&ComplexMatrix::identity(2)) < 1e-14);
        let p = span_projector(&basis).unwrap();
        assert!(p.distance(&ComplexMatrix::identity(2)) < 1e-14);
    }

    #[test]
    fn leaking_operator_reports_residual() {
        let basis = vec![vec![c(1., 0.), c(0., 0.)]];
        let act = subspace_action(&Axis::X.matrix(), &basis).unwrap();
        assert!((act.max_residual() - 1.0).abs() < 1e-15);
        assert_eq!(act.leak[0], vec![c(0., 0.), c(1., 0.)]);
    }

    #[test]
    fn dependent_basis_rejected() {
        let basis = vec![vec![c(1., 0.), c(0., 0.)], vec![c(2., 0.), c(0., 0.)]];
        assert!(matches!(
            subspace_action(&ComplexMatrix::identity(2), &basis),
            Err(Error::LinearlyDependent(_))
        ));
    }
}
