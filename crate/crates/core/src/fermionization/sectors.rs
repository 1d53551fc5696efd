use serde::Serialize;

use crate::model::{build_hamiltonian, numeric_spectrum, Couplings, GaugeSector};
use crate::oplin::{hermitian_eig, Complex64, ComplexMatrix, EIGEN_TOL};

/// Closed-form gauge-sector energies
/// ±√(4Jx² + 2Jz²(1+s₃s₁) + 2Jy²(1+s₂s₁)) ± √(2Jz²(1−s₃s₁) + 2Jy²(1−s₂s₁))
/// + Jp(s₁s₂ + s₂s₃ + s₃s₁), ordered (+,+), (+,−), (−,+), (−,−).
pub fn sector_energies(s: &GaugeSector, c: &Couplings) -> [f64; 4] {
    let [s1, s2, s3] = s.s.map(f64::from);
    let outer = (4.0 * c.jx * c.jx
        + 2.0 * c.jz * c.jz * (1.0 + s3 * s1)
        + 2.0 * c.jy * c.jy * (1.0 + s2 * s1))
        .sqrt();
    let inner = (2.0 * c.jz * c.jz * (1.0 - s3 * s1) + 2.0 * c.jy * c.jy * (1.0 - s2 * s1)).sqrt();
    let shift = c.jp * f64::from(s.pair_sum());
    [
        outer + inner + shift,
        outer - inner + shift,
        -outer + inner + shift,
        -outer - inner + shift,
    ]
}

/// Eigenvalues of H restricted to the sector (two per sector), ascending.
pub fn exact_sector_energies(s: &GaugeSector, c: &Couplings) -> Vec<f64> {
    let projector = s.projector();
    let range = hermitian_eig(&projector).expect("projector is Hermitian");
    let basis: Vec<Vec<Complex64>> = (0..16)
        .filter(|&k| (range.eigenvalues[k] - 1.0).abs() < 1e-6)
        .map(|k| range.eigenvector(k))
        .collect();
    let cols: Vec<&[Complex64]> = basis.iter().map(Vec::as_slice).collect();
    let v = ComplexMatrix::from_columns(&cols).expect("equal-length columns");
    let reduced = &(&v.adjoint() * &build_hamiltonian(c)) * &v;
    hermitian_eig(&reduced)
        .expect("restriction is Hermitian")
        .eigenvalues
}

#[derive(Debug, Clone, Serialize)]
pub struct SectorRow {
    pub sector: [i8; 3],
    pub homogeneous: bool,
    pub energies: [f64; 4],
    /// Distance from each closed-form energy to the nearest exact level.
    pub misses: [f64; 4],
    pub in_spectrum: bool,
    pub exact: Vec<f64>,
}

/// Closed-form and exact energies for all eight sectors.
#[derive(Debug, Clone, Serialize)]
pub struct SectorTable {
    pub rows: Vec<SectorRow>,
    /// Every exact level is hit by some closed-form value.
    pub spectrum_covered: bool,
    /// The exact per-sector energies together reproduce the spectrum.
    pub exact_union_matches: bool,
}

impl SectorTable {
    pub fn all_in_spectrum(&self) -> bool {
        self.rows.iter().all(|r| r.in_spectrum)
    }
}

fn nearest(spectrum: &[f64], e: f64) -> f64 {
    spectrum
        .iter()
        .map(|x| (x - e).abs())
        .fold(f64::INFINITY, f64::min)
}

pub fn sector_table(c: &Couplings) -> SectorTable {
    let spectrum = numeric_spectrum(c);
    let mut rows = Vec::new();
    let mut union = Vec::new();
    let mut closed_form = Vec::new();
    for s in GaugeSector::all() {
        let energies = sector_energies(&s, c);
        let misses = energies.map(|e| nearest(&spectrum, e));
        let exact = exact_sector_energies(&s, c);
        union.extend_from_slice(&exact);
        closed_form.extend_from_slice(&energies);
        rows.push(SectorRow {
            sector: s.s,
            homogeneous: s.pair_sum() == 3,
            energies,
            in_spectrum: misses.iter().all(|&m| m < EIGEN_TOL),
            misses,
            exact,
        });
    }
    union.sort_by(f64::total_cmp);
    let spectrum_covered = spectrum
        .iter()
        .all(|&e| nearest(&closed_form, e) < EIGEN_TOL);
    let exact_union_matches = union
        .iter()
        .zip(&spectrum)
        .all(|(a, b)| (a - b).abs() < EIGEN_TOL);
    SectorTable {
        rows,
        spectrum_covered,
        exact_union_matches,
    }
}
