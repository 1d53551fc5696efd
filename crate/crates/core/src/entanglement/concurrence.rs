use serde::Serialize;

use crate::model::{concurrence_ground_action, plaquettes, FourSpinState};
use crate::oplin::{inner, pauli4, Axis, Complex64, ComplexMatrix};

fn uniform(axis: Axis) -> ComplexMatrix {
    pauli4(&[(1, axis), (2, axis), (3, axis), (4, axis)])
}

/// τ = |⟨ψ|σʸ⊗σʸ⊗σʸ⊗σʸ|ψ*⟩|², conjugation in the computational basis.
pub fn concurrence_tau(state: &FourSpinState) -> f64 {
    let conj: Vec<Complex64> = state.amplitudes().iter().map(|z| z.conj()).collect();
    let image = uniform(Axis::Y).apply(&conj);
    inner(state.amplitudes(), &image).norm_sqr().min(1.0)
}

/// Plaquette products as uniform Pauli strings, and the concurrence
/// operator Ŝ₃Ŝ₁ on the ground space.
#[derive(Debug, Clone, Serialize)]
pub struct ConcurrenceOperatorReport {
    /// ‖Ŝ₃Ŝ₁ − σʸ⊗⁴‖_F.
    pub s3s1_vs_y: f64,
    /// ‖Ŝ₁Ŝ₂ − σᶻ⊗⁴‖_F.
    pub s1s2_vs_z: f64,
    /// ‖Ŝ₂Ŝ₃ − σˣ⊗⁴‖_F.
    pub s2s3_vs_x: f64,
    /// ‖(Ŝ₃Ŝ₁)² − I‖_F.
    pub square_defect: f64,
    /// Diagonal of Ŝ₃Ŝ₁ on [g1, g2, g3, g4] (real parts).
    pub ground_diagonal: [f64; 4],
    /// Largest off-diagonal magnitude of that action.
    pub ground_off_diagonal: f64,
}

impl ConcurrenceOperatorReport {
    pub fn strings_hold(&self, tol: f64) -> bool {
        [
            self.s3s1_vs_y,
            self.s1s2_vs_z,
            self.s2s3_vs_x,
            self.square_defect,
        ]
        .iter()
        .all(|&d| d < tol)
    }

    /// Frobenius distance of the ground action from diag(`want`).
    pub fn ground_distance(&self, want: [f64; 4]) -> f64 {
        let diag: f64 = self
            .ground_diagonal
            .iter()
            .zip(want)
            .map(|(a, b)| (a - b).powi(2))
            .sum();
        (diag + 12.0 * self.ground_off_diagonal.powi(2)).sqrt()
    }
}

pub fn concurrence_operator_check() -> ConcurrenceOperatorReport {
    let [s1, s2, s3, _] = plaquettes();
    let tau = &s3 * &s1;
    let ground = concurrence_ground_action().expect("Ŝ₃Ŝ₁ preserves the ground space");
    let mut off: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                off = off.max(ground[(i, j)].norm());
            }
        }
    }
    ConcurrenceOperatorReport {
        s3s1_vs_y: tau.distance(&uniform(Axis::Y)),
        s1s2_vs_z: (&s1 * &s2).distance(&uniform(Axis::Z)),
        s2s3_vs_x: (&s2 * &s3).distance(&uniform(Axis::X)),
        square_defect: (&tau * &tau).distance(&ComplexMatrix::identity(16)),
        ground_diagonal: [0, 1, 2, 3].map(|k| ground[(k, k)].re),
        ground_off_diagonal: off,
    }
}
