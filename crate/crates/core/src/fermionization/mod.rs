//! Inverse Jordan-Wigner transformation: Majorana and complex fermions,
//! the Hamiltonian in fermionic form, and gauge-sector energies.

mod hamiltonian;
mod majorana;
mod sectors;

pub use hamiltonian::{
    complex_fermion_hamiltonian, fermionized_hamiltonian, gap_operators, ComplexFermionSet,
    GapOperators,
};
pub use majorana::{
    bond_identities, fermionic_plaquette_forms, fermionic_plaquettes, majorana_set, unit_scalar,
    BondOperators, BondReport, MajoranaSet, PlaquetteReport, SiteOrdering,
};
pub use sectors::{exact_sector_energies, sector_energies, sector_table, SectorRow, SectorTable};
