use std::fmt;

use serde::Serialize;

use super::permutation::{permutation_matrix, Permutation};
use crate::error::{Error, Result};
use crate::model::{build_hamiltonian, Couplings, FourSpinState};
use crate::oplin::{
    commutator, gram_matrix, group_levels, hermitian_eig, subspace_action, Complex64, ComplexMatrix,
};

/// Closure and unitarity threshold for statistical matrices.
pub const STATISTICS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeClass {
    Boson,
    Fermion,
    Exotic,
}

impl fmt::Display for ExchangeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Boson => "boson",
            Self::Fermion => "fermion",
            Self::Exotic => "exotic",
        })
    }
}

/// Exchange matrix η on a degenerate subspace: P·vᵢ = Σⱼ ηᵢⱼ·vⱼ.
#[derive(Debug, Clone)]
pub struct StatisticalMatrix {
    pub eta: ComplexMatrix,
    pub classification: ExchangeClass,
}

/// Least-squares fit of a permutation on a basis, closed or not.
#[derive(Debug, Clone)]
pub struct StatisticsFit {
    pub eta: ComplexMatrix,
    pub residuals: Vec<f64>,
    /// Component of P·vᵢ orthogonal to the span.
    pub leak: Vec<Vec<Complex64>>,
    /// ‖η̄ G ηᵀ − G‖_F with G the Gram matrix; zero for a unitary action.
    pub unitarity_defect: f64,
}

impl StatisticsFit {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn closed(&self) -> bool {
        self.max_residual() < STATISTICS_TOL
    }
}

/// Fits `p` on `basis` without requiring closure.
pub fn fit_statistics(basis: &[FourSpinState], p: &Permutation) -> Result<StatisticsFit> {
    let vecs: Vec<Vec<Complex64>> = basis.iter().map(FourSpinState::to_vec).collect();
    fit_vectors(&vecs, p)
}

fn fit_vectors(vecs: &[Vec<Complex64>], p: &Permutation) -> Result<StatisticsFit> {
    let act = subspace_action(&permutation_matrix(p), vecs)?;
    let g = gram_matrix(vecs);
    let eta = act.matrix;
    let unitarity_defect = (&(&eta.map(|z| z.conj()) * &g) * &eta.transpose()).distance(&g);
    Ok(StatisticsFit {
        eta,
        residuals: act.residuals,
        leak: act.leak,
        unitarity_defect,
    })
}

/// Exchange matrix of `p` on `basis`.
///
/// The basis need only be linearly independent; η is unitary with respect
/// to its Gram metric, which reduces to ordinary unitarity for an
/// orthonormal basis.
pub fn subspace_statistics(basis: &[FourSpinState], p: &Permutation) -> Result<StatisticalMatrix> {
    let fit = fit_statistics(basis, p)?;
    if !fit.closed() {
        return Err(Error::NotClosed(fit.max_residual()));
    }
    if fit.unitarity_defect >= STATISTICS_TOL {
        return Err(Error::NotUnitary(fit.unitarity_defect));
    }
    let classification = scalar_class(&fit.eta);
    Ok(StatisticalMatrix {
        eta: fit.eta,
        classification,
    })
}

fn scalar_class(eta: &ComplexMatrix) -> ExchangeClass {
    let id = ComplexMatrix::identity(eta.rows());
    if eta.distance(&id) < STATISTICS_TOL {
        ExchangeClass::Boson
    } else if eta.distance(&-&id) < STATISTICS_TOL {
        ExchangeClass::Fermion
    } else {
        ExchangeClass::Exotic
    }
}

/// Boson iff η = I, fermion iff η = −I, otherwise exotic.
pub fn classify(eta: &ComplexMatrix) -> Result<ExchangeClass> {
    if !eta.is_square() {
        return Err(Error::DimensionMismatch("η must be square".into()));
    }
    let defect = eta.unitarity_defect();
    if defect >= STATISTICS_TOL {
        return Err(Error::NotUnitary(defect));
    }
    Ok(scalar_class(eta))
}

/// Outcome of one permutation on one exact eigenspace.
#[derive(Debug, Clone, Serialize)]
pub struct EigenspaceClosure {
    pub energy: f64,
    pub dim: usize,
    /// ‖[P, H]·Π_E‖_F, zero exactly when P maps the eigenspace into itself.
    pub restricted_commutator: f64,
    /// Largest fit residual of P on the eigenspace basis.
    pub residual: f64,
    pub closed: bool,
    pub class: Option<ExchangeClass>,
}

/// Per-eigenspace closure of `p` at couplings `c`.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub permutation: String,
    /// ‖[P, H]‖_F over the whole space.
    pub commutator: f64,
    pub eigenspaces: Vec<EigenspaceClosure>,
}

pub fn closure_report(c: &Couplings, p: &Permutation, group_tol: f64) -> ClosureReport {
    let h = build_hamiltonian(c);
    let pm = permutation_matrix(p);
    let comm = commutator(&pm, &h).expect("16×16 operators");
    let spec = hermitian_eig(&h).expect("Hamiltonian is Hermitian");
    let mut start = 0;
    let mut eigenspaces = Vec::new();
    for (energy, dim) in group_levels(&spec.eigenvalues, group_tol) {
        let vecs: Vec<Vec<Complex64>> = (start..start + dim).map(|k| spec.eigenvector(k)).collect();
        start += dim;
        let restricted = vecs
            .iter()
            .map(|v| {
                let w = comm.apply(v);
                w.iter().map(|z| z.norm_sqr()).sum::<f64>()
            })
            .sum::<f64>()
            .sqrt();
        let fit = fit_vectors(&vecs, p).expect("eigenvectors are orthonormal");
        let closed = fit.closed();
        eigenspaces.push(EigenspaceClosure {
            energy,
            dim,
            restricted_commutator: restricted,
            residual: fit.max_residual(),
            closed,
            class: closed.then(|| scalar_class(&fit.eta)),
        });
    }
    ClosureReport {
        permutation: p.to_string(),
        commutator: comm.frobenius_norm(),
        eigenspaces,
    }
}
