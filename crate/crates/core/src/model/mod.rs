//! The four-spin triangular-star Hamiltonian, its conserved plaquettes,
//! level tables and a catalog of named states.

mod catalog;
mod couplings;
mod ground;
mod hamiltonian;
mod sector;
mod state;

pub use catalog::{
    catalog_state, chi_parts, ground_basis, Catalog, CatalogEntry, EntryCheck, OverrideJson,
    ProjectorCheck, LEVEL_BASES,
};
pub use couplings::Couplings;
pub use ground::{concurrence_ground_action, ground_action, plaquette_ground_action};
pub use hamiltonian::{
    analytic_levels, build_hamiltonian, numeric_levels, numeric_spectrum, plaquette, plaquettes,
    sorted_distance, verify_conserved, ConservationReport, Level, LevelTable,
};
pub use sector::{project_to_sector, sector_of, FrustrationClass, GaugeSector};
pub use state::{
    basis_label, double_spin_index, double_spin_label, eigen_residual, flip_all, parse_double_ket,
    residual_at, DoubleSpin, FourSpinState, StateJson,
};
