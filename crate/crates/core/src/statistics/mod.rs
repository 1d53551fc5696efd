//! Exchange operators for double-spin clusters and plaquette
//! quasiparticles, their statistical matrices and phase maps.

mod exchange;
mod permutation;
mod phase;

pub use exchange::{
    classify, closure_report, fit_statistics, subspace_statistics, ClosureReport,
    EigenspaceClosure, ExchangeClass, StatisticalMatrix, StatisticsFit, STATISTICS_TOL,
};
pub use permutation::{permutation_matrix, Permutation, PermutationKind};
pub use phase::{
    braid_loop, chi_decomposition_check, phase_map, plaquette_braid_sequence, ChiDecomposition,
    PhaseMap, SUPPORT_EPS,
};
