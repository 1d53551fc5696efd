use std::collections::BTreeMap;

use serde::Serialize;

use super::permutation::{permutation_matrix, Permutation};
use crate::error::{Error, Result};
use crate::model::{catalog_state, chi_parts, parse_double_ket, FourSpinState};
use crate::oplin::{vec_distance, Complex64, ComplexMatrix};

/// Amplitudes at or below this magnitude count as outside the support.
pub const SUPPORT_EPS: f64 = 1e-10;

/// Per-configuration ratio (P·ψ)ₖ/ψₖ over the support of ψ.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMap {
    pub entries: BTreeMap<usize, Complex64>,
}

impl PhaseMap {
    pub fn ratio(&self, k: usize) -> Option<Complex64> {
        self.entries.get(&k).copied()
    }

    /// Ratios listed in the order of the given double-spin kets.
    pub fn in_order(&self, kets: &[&str]) -> Result<Vec<Complex64>> {
        kets.iter()
            .map(|ket| {
                let k = parse_double_ket(ket)?;
                self.ratio(k).ok_or(Error::BadIndex(k))
            })
            .collect()
    }

    /// True when every ratio equals `value` within `tol`.
    pub fn is_constant(&self, value: Complex64, tol: f64) -> bool {
        self.entries.values().all(|r| (r - value).norm() < tol)
    }
}

/// Phase ratios of `p` acting on `state`.
///
/// Fails when P·ψ has weight outside ψ's support or when a ratio is not a
/// pure phase.
pub fn phase_map(state: &FourSpinState, p: &Permutation) -> Result<PhaseMap> {
    let psi = state.amplitudes();
    let phi = permutation_matrix(p).apply(psi);
    let outside: f64 = (0..16)
        .filter(|&k| psi[k].norm() <= SUPPORT_EPS)
        .map(|k| phi[k].norm_sqr())
        .sum::<f64>()
        .sqrt();
    if outside > SUPPORT_EPS {
        return Err(Error::SupportMismatch(outside));
    }
    let mut entries = BTreeMap::new();
    for k in state.support(SUPPORT_EPS) {
        let r = phi[k] / psi[k];
        if (r.norm() - 1.0).abs() > SUPPORT_EPS {
            return Err(Error::NonUnimodularRatio {
                index: k,
                modulus: r.norm(),
            });
        }
        entries.insert(k, r);
    }
    Ok(PhaseMap { entries })
}

/// Ordered product of permutation matrices; the last element acts first.
pub fn braid_loop(seq: &[Permutation]) -> ComplexMatrix {
    seq.iter().fold(ComplexMatrix::identity(16), |acc, p| {
        &acc * &permutation_matrix(p)
    })
}

/// The four-exchange loop P[S₃;S₂]·P[S₂;S₁]·P[S₁;S₃]·P[S₁;S₂].
pub fn plaquette_braid_sequence() -> [Permutation; 4] {
    [(3, 2), (2, 1), (1, 3), (1, 2)]
        .map(|(i, j)| Permutation::plaquette_swap(i, j).expect("inner plaquettes"))
}

/// Split of χ⁰⁰ into pair-swap even and odd parts.
#[derive(Debug, Clone, Serialize)]
pub struct ChiDecomposition {
    /// ‖Π₊χ − χ₁‖.
    pub symmetric_distance: f64,
    /// ‖Π₋χ − χ₂‖.
    pub antisymmetric_distance: f64,
    /// ‖P·χ₁ − χ₁‖.
    pub chi1_parity_residual: f64,
    /// ‖P·χ₂ + χ₂‖.
    pub chi2_parity_residual: f64,
    /// Distance of the normalized odd part from (|⇑⇓⟩ − |⇓⇑⟩)/√2.
    pub two_term_distance: f64,
    /// ‖Π₊ + Π₋ − I‖_F.
    pub resolution_defect: f64,
}

impl ChiDecomposition {
    pub fn passes(&self, tol: f64) -> bool {
        [
            self.symmetric_distance,
            self.antisymmetric_distance,
            self.chi1_parity_residual,
            self.chi2_parity_residual,
            self.two_term_distance,
            self.resolution_defect,
        ]
        .iter()
        .all(|&d| d < tol)
    }
}

pub fn chi_decomposition_check() -> ChiDecomposition {
    let p = permutation_matrix(&Permutation::pair_swap());
    let id = ComplexMatrix::identity(16);
    let plus = (&id + &p).scale_real(0.5);
    let minus = (&id - &p).scale_real(0.5);

    // the catalog state is normalized; the parts carry the unnormalized 1/√8 scale
    let [chi1, chi2] = chi_parts();
    let scale = (chi1.iter().chain(&chi2).map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
    let chi: Vec<Complex64> = catalog_state("chi00")
        .expect("chi00 in catalog")
        .amplitudes()
        .iter()
        .map(|z| z * scale)
        .collect();
    let even = plus.apply(&chi);
    let odd = minus.apply(&chi);
    let neg_chi2: Vec<Complex64> = chi2.iter().map(|z| -z).collect();

    let odd_norm = odd.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let odd_unit: Vec<Complex64> = odd.iter().map(|z| z / odd_norm).collect();
    let two_term = FourSpinState::from_double_kets(
        &[
            (Complex64::new(1.0, 0.0), "⇑⇓"),
            (Complex64::new(-1.0, 0.0), "⇓⇑"),
        ],
        None,
    )
    .expect("valid kets");

    ChiDecomposition {
        symmetric_distance: vec_distance(&even, &chi1),
        antisymmetric_distance: vec_distance(&odd, &chi2),
        chi1_parity_residual: vec_distance(&p.apply(&chi1), &chi1),
        chi2_parity_residual: vec_distance(&p.apply(&chi2), &neg_chi2),
        two_term_distance: vec_distance(&odd_unit, two_term.amplitudes()),
        resolution_defect: (&plus + &minus).distance(&id),
    }
}
