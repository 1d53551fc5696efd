use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::FourSpinState;
use crate::oplin::{hermitian_eig, Complex64, ComplexMatrix};

/// Eigenvalues below this are treated as zero.
const EIGEN_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogBase {
    E,
    Two,
}

/// Trace-one Hermitian positive matrix on a set of retained sites.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    subsystem: Vec<usize>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(matrix: ComplexMatrix, subsystem: Vec<usize>) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != 1 << subsystem.len() {
            return Err(Error::InvalidDensity(format!(
                "{}×{} matrix for {} sites",
                matrix.rows(),
                matrix.cols(),
                subsystem.len()
            )));
        }
        let herm = matrix.hermiticity_defect();
        if herm >= 1e-12 {
            return Err(Error::InvalidDensity(format!("not Hermitian ({herm:e})")));
        }
        let tr = matrix.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() >= 1e-12 {
            return Err(Error::InvalidDensity(format!("trace {tr}")));
        }
        let min = hermitian_eig(&matrix)?.eigenvalues[0];
        if min < -1e-10 {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { matrix, subsystem })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn subsystem(&self) -> &[usize] {
        &self.subsystem
    }

    /// Ascending eigenvalues, clamped to zero below 1e-12.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eig(&self.matrix)
            .expect("validated Hermitian")
            .eigenvalues
            .into_iter()
            .map(|l| if l < EIGEN_FLOOR { 0.0 } else { l })
            .collect()
    }

    /// Conjugates by a unitary of matching size.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<Self> {
        let m = &u.matmul(&self.matrix)? * &u.adjoint();
        // restore exact Hermiticity lost to rounding
        let m = (&m + &m.adjoint()).scale_real(0.5);
        Self::new(m, self.subsystem.clone())
    }
}

/// Reduced density matrix on the sites in `keep` (1-based, any order;
/// retained bits follow ascending site number).
pub fn partial_trace(state: &FourSpinState, keep: &[usize]) -> Result<DensityMatrix> {
    let mut sites = keep.to_vec();
    sites.sort_unstable();
    sites.dedup();
    if sites.is_empty()
        || sites.len() != keep.len()
        || sites.len() >= 4
        || sites.iter().any(|s| !(1..=4).contains(s))
    {
        return Err(Error::BadSubsystem(keep.to_vec()));
    }
    let env: Vec<usize> = (1..=4).filter(|s| !sites.contains(s)).collect();
    let bit = |site: usize| 3 - (site - 1);
    let compose = |sub: usize, rest: usize| {
        let mut k = 0;
        for (i, &s) in sites.iter().enumerate() {
            k |= ((sub >> (sites.len() - 1 - i)) & 1) << bit(s);
        }
        for (i, &s) in env.iter().enumerate() {
            k |= ((rest >> (env.len() - 1 - i)) & 1) << bit(s);
        }
        k
    };
    let d = 1 << sites.len();
    let a = state.amplitudes();
    let mut rho = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            rho[(i, j)] = (0..1 << env.len())
                .map(|r| a[compose(i, r)] * a[compose(j, r)].conj())
                .sum();
        }
    }
    let rho = (&rho + &rho.adjoint()).scale_real(0.5);
    DensityMatrix::new(rho, sites)
}

/// −Σ λ log λ with 0·log 0 = 0.
pub fn von_neumann_entropy(rho: &DensityMatrix, base: LogBase) -> f64 {
    let nats: f64 = rho
        .eigenvalues()
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.ln())
        .sum();
    let s = match base {
        LogBase::E => nats,
        LogBase::Two => nats / std::f64::consts::LN_2,
    };
    s.max(0.0)
}

/// Σ |μ ln μ| with μ = λ^(−1/2) over nonzero eigenvalues.
///
/// This is the magnitude obtained when the marginal is built from an
/// unnormalized state whose eigenvalues are the reciprocal square roots of
/// the physical ones; it equals √2·ln 2 for an equal two-level mixture and
/// vanishes for a pure marginal.
pub fn unnormalized_entropy_magnitude(rho: &DensityMatrix) -> f64 {
    rho.eigenvalues()
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| {
            let mu = l.powf(-0.5);
            (mu * mu.ln()).abs()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::catalog_state;
    use std::f64::consts::LN_2;

    #[test]
    fn product_state_marginal_is_pure() {
        let s = FourSpinState::basis(0).unwrap();
        let rho = partial_trace(&s, &[2, 3, 4]).unwrap();
        let mut want = ComplexMatrix::zeros(8, 8);
        want[(0, 0)] = Complex64::new(1.0, 0.0);
        assert!(rho.matrix().distance(&want) < 1e-15);
        assert_eq!(von_neumann_entropy(&rho, LogBase::E), 0.0);
        assert_eq!(unnormalized_entropy_magnitude(&rho), 0.0);
    }

    #[test]
    fn ghz_single_site_marginal() {
        let rho = partial_trace(&catalog_state("GHZ").unwrap(), &[1]).unwrap();
        let want = ComplexMatrix::identity(2).scale_real(0.5);
        assert!(rho.matrix().distance(&want) < 1e-15);
        assert!((von_neumann_entropy(&rho, LogBase::Two) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_ground_state_marginal() {
        let rho = partial_trace(&catalog_state("S+B").unwrap(), &[2, 3, 4]).unwrap();
        let ev = rho.eigenvalues();
        assert!(ev[..6].iter().all(|&l| l == 0.0));
        assert!(ev[6..].iter().all(|&l| (l - 0.5).abs() < 1e-12));
        assert!((von_neumann_entropy(&rho, LogBase::E) - LN_2).abs() < 1e-10);
        assert!((unnormalized_entropy_magnitude(&rho) - 2f64.sqrt() * LN_2).abs() < 1e-10);
    }

    #[test]
    fn kept_bits_follow_site_order() {
        // |↑↓↑↑⟩: site 2 is down
        let s = FourSpinState::basis(0b0100).unwrap();
        let rho = partial_trace(&s, &[3, 2]).unwrap();
        assert_eq!(rho.subsystem(), &[2, 3]);
        assert!((rho.matrix()[(0b10, 0b10)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bad_subsystems() {
        let s = FourSpinState::basis(0).unwrap();
        for keep in [&[][..], &[1, 2, 3, 4], &[0], &[5], &[2, 2]] {
            assert_eq!(
                partial_trace(&s, keep).unwrap_err(),
                Error::BadSubsystem(keep.to_vec())
            );
        }
    }

    #[test]
    fn invalid_density_rejected() {
        let m = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(m, vec![1]),
            Err(Error::InvalidDensity(_))
        ));
        let m = ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]).unwrap();
        assert!(matches!(
            DensityMatrix::new(m, vec![1]),
            Err(Error::InvalidDensity(_))
        ));
    }
}
