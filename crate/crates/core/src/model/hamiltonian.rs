use serde::Serialize;

use super::couplings::Couplings;
use crate::error::{Error, Result};
use crate::oplin::{
    commutator, group_levels, hermitian_eig, pauli4, Axis, ComplexMatrix, EIGEN_TOL, IDENTITY_TOL,
};

use Axis::{X, Y, Z};

/// Plaquette string operator Ŝₖ, k ∈ 1..=4.
///
/// Ŝ₁ = σ₁ᶻσ₂ˣσ₃ʸ, Ŝ₂ = σ₄ᶻσ₂ʸσ₃ˣ, Ŝ₃ = σ₁ˣσ₂ᶻσ₄ʸ; Ŝ₄ = σ₁ʸσ₃ᶻσ₄ˣ runs around
/// the outer boundary and equals Ŝ₁Ŝ₂Ŝ₃.
pub fn plaquette(k: usize) -> Result<ComplexMatrix> {
    let factors: &[(usize, Axis)] = match k {
        1 => &[(1, Z), (2, X), (3, Y)],
        2 => &[(4, Z), (2, Y), (3, X)],
        3 => &[(1, X), (2, Z), (4, Y)],
        4 => &[(1, Y), (3, Z), (4, X)],
        _ => return Err(Error::BadIndex(k)),
    };
    Ok(pauli4(factors))
}

/// All four plaquettes, index 0 holding Ŝ₁.
pub fn plaquettes() -> [ComplexMatrix; 4] {
    [1, 2, 3, 4].map(|k| plaquette(k).expect("valid plaquette index"))
}

/// The six two-spin bonds as `(coupling selector, site a, site b, axis)`.
const BONDS: [(Axis, usize, usize); 6] = [
    (X, 1, 3),
    (Y, 1, 2),
    (Z, 2, 3),
    (X, 2, 4),
    (Y, 3, 4),
    (Z, 1, 4),
];

/// Sum of the six Kitaev-type bonds and the three antiferromagnetic
/// plaquette-pair couplings.
pub fn build_hamiltonian(c: &Couplings) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(16, 16);
    for (axis, a, b) in BONDS {
        let j = match axis {
            X => c.jx,
            Y => c.jy,
            Z => c.jz,
        };
        if j != 0.0 {
            h = &h + &pauli4(&[(a, axis), (b, axis)]).scale_real(j);
        }
    }
    if c.jp != 0.0 {
        let [s1, s2, s3, _] = plaquettes();
        let pairs = &(&(&s1 * &s2) + &(&s2 * &s3)) + &(&s3 * &s1);
        h = &h + &pairs.scale_real(c.jp);
    }
    h
}

/// One row of a level table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Level {
    pub energy: f64,
    pub multiplicity: usize,
    pub label: String,
}

/// Energy levels sorted ascending; multiplicities sum to 16.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelTable {
    pub entries: Vec<Level>,
}

impl LevelTable {
    /// Every level repeated by its multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|l| std::iter::repeat_n(l.energy, l.multiplicity))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|l| l.multiplicity).sum()
    }

    /// Labels of all entries within `tol` of `energy`.
    pub fn labels_near(&self, energy: f64, tol: f64) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|l| (l.energy - energy).abs() <= tol)
            .map(|l| l.label.as_str())
            .collect()
    }
}

/// Closed-form levels: E_p^± = 3Jp ± 2√(Jx²+Jy²+Jz²) and E_μ^± = −Jp ± 2Jμ,
/// each doubly degenerate; coincident values (within 1e-9) are merged.
pub fn analytic_levels(c: &Couplings) -> LevelTable {
    let root = (c.jx * c.jx + c.jy * c.jy + c.jz * c.jz).sqrt();
    let mut raw = vec![
        (3.0 * c.jp + 2.0 * root, "E_p^+"),
        (3.0 * c.jp - 2.0 * root, "E_p^-"),
    ];
    for (j, plus, minus) in [
        (c.jx, "E_x^+", "E_x^-"),
        (c.jy, "E_y^+", "E_y^-"),
        (c.jz, "E_z^+", "E_z^-"),
    ] {
        raw.push((-c.jp + 2.0 * j, plus));
        raw.push((-c.jp - 2.0 * j, minus));
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut entries: Vec<Level> = Vec::new();
    let mut members: Vec<Vec<f64>> = Vec::new();
    for (e, label) in raw {
        match entries.last_mut() {
            Some(last) if (e - members.last().unwrap()[0]).abs() <= 1e-9 => {
                last.multiplicity += 2;
                last.label.push(',');
                last.label.push_str(label);
                members.last_mut().unwrap().push(e);
            }
            _ => {
                entries.push(Level {
                    energy: e,
                    multiplicity: 2,
                    label: label.to_string(),
                });
                members.push(vec![e]);
            }
        }
    }
    for (level, m) in entries.iter_mut().zip(&members) {
        level.energy = m.iter().sum::<f64>() / m.len() as f64;
    }
    LevelTable { entries }
}

/// Sorted eigenvalues of the Hamiltonian.
pub fn numeric_spectrum(c: &Couplings) -> Vec<f64> {
    hermitian_eig(&build_hamiltonian(c))
        .expect("Hamiltonian is Hermitian")
        .eigenvalues
}

/// Numerical levels grouped at `tol`, labelled from the analytic table.
pub fn numeric_levels(c: &Couplings, tol: f64) -> LevelTable {
    let analytic = analytic_levels(c);
    let entries = group_levels(&numeric_spectrum(c), tol)
        .into_iter()
        .map(|(energy, multiplicity)| Level {
            energy,
            multiplicity,
            label: analytic.labels_near(energy, tol.max(EIGEN_TOL)).join(","),
        })
        .collect();
    LevelTable { entries }
}

/// Largest elementwise gap between two ascending multisets of equal size;
/// infinite when the sizes differ.
pub fn sorted_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Frobenius norms of every commutator among H and the plaquettes.
#[derive(Debug, Clone, Serialize)]
pub struct ConservationReport {
    /// ‖[Ŝₖ, H]‖_F for k = 1..4.
    pub with_hamiltonian: [f64; 4],
    /// ‖[Ŝᵢ, Ŝⱼ]‖_F for i < j.
    pub between_plaquettes: Vec<((usize, usize), f64)>,
}

impl ConservationReport {
    pub fn max_norm(&self) -> f64 {
        self.with_hamiltonian
            .iter()
            .chain(self.between_plaquettes.iter().map(|(_, n)| n))
            .copied()
            .fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_norm() < tol
    }
}

pub fn verify_conserved(c: &Couplings) -> ConservationReport {
    let h = build_hamiltonian(c);
    let s = plaquettes();
    let norm = |a: &ComplexMatrix, b: &ComplexMatrix| {
        commutator(a, b).expect("16×16 operators").frobenius_norm()
    };
    let with_hamiltonian = [0, 1, 2, 3].map(|k| norm(&s[k], &h));
    let mut between_plaquettes = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            between_plaquettes.push(((i + 1, j + 1), norm(&s[i], &s[j])));
        }
    }
    ConservationReport {
        with_hamiltonian,
        between_plaquettes,
    }
}

impl ConservationReport {
    /// Default pass criterion at the exact-identity tolerance.
    pub fn ok(&self) -> bool {
        self.passes(IDENTITY_TOL)
    }
}
