use std::fmt;

use serde::Serialize;

use super::hamiltonian::plaquette;
use super::state::FourSpinState;
use crate::error::{Error, Result};
use crate::oplin::{vec_norm, Complex64, ComplexMatrix};

/// Residual above which a state is not a plaquette eigenstate.
const SECTOR_TOL: f64 = 1e-8;

/// Flux configuration on the three inner plaquettes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GaugeSector {
    pub s: [i8; 3],
}

/// Fully frustrated sectors have all three fluxes equal, so every
/// antiferromagnetic plaquette pair is unsatisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrustrationClass {
    FullyFrustrated,
    MinimallyFrustrated,
}

impl GaugeSector {
    /// Fails unless every entry is ±1.
    pub fn new(s: [i8; 3]) -> Result<Self> {
        match s.iter().position(|&x| x != 1 && x != -1) {
            Some(i) => Err(Error::BadIndex(i + 1)),
            None => Ok(Self { s }),
        }
    }

    /// All eight sectors, (+,+,+) first.
    pub fn all() -> Vec<GaugeSector> {
        let mut out = Vec::with_capacity(8);
        for a in [1, -1] {
            for b in [1, -1] {
                for c in [1, -1] {
                    out.push(GaugeSector { s: [a, b, c] });
                }
            }
        }
        out
    }

    /// s₁s₂ + s₂s₃ + s₃s₁, which is 3 or −1.
    pub fn pair_sum(&self) -> i32 {
        let [a, b, c] = self.s.map(i32::from);
        a * b + b * c + c * a
    }

    pub fn frustration_class(&self) -> FrustrationClass {
        if self.pair_sum() == 3 {
            FrustrationClass::FullyFrustrated
        } else {
            FrustrationClass::MinimallyFrustrated
        }
    }

    /// Outer plaquette flux s₄ = s₁s₂s₃.
    pub fn outer(&self) -> i8 {
        self.s[0] * self.s[1] * self.s[2]
    }

    /// Π (1 + sₖŜₖ)/2 over k = 1, 2, 3.
    pub fn projector(&self) -> ComplexMatrix {
        let id = ComplexMatrix::identity(16);
        let mut p = id.clone();
        for (k, &sk) in self.s.iter().enumerate() {
            let factor = (&id
                + &plaquette(k + 1)
                    .expect("valid index")
                    .scale_real(f64::from(sk)))
                .scale_real(0.5);
            p = &p * &factor;
        }
        p
    }
}

impl fmt::Display for GaugeSector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |x: i8| if x > 0 { '+' } else { '-' };
        write!(
            f,
            "({},{},{})",
            sign(self.s[0]),
            sign(self.s[1]),
            sign(self.s[2])
        )
    }
}

/// Plaquette eigenvalues of a state that is a simultaneous eigenstate of
/// Ŝ₁, Ŝ₂, Ŝ₃.
pub fn sector_of(state: &FourSpinState) -> Result<GaugeSector> {
    let v = state.to_vec();
    let mut s = [0i8; 3];
    let mut worst = 0.0f64;
    for (k, slot) in s.iter_mut().enumerate() {
        let op = plaquette(k + 1)?;
        let image = op.apply(&v);
        let ev = state.expectation(&op).re;
        let sign = if ev >= 0.0 { 1.0 } else { -1.0 };
        let diff: Vec<Complex64> = image.iter().zip(&v).map(|(a, b)| a - b * sign).collect();
        worst = worst.max(vec_norm(&diff));
        *slot = sign as i8;
    }
    if worst >= SECTOR_TOL {
        return Err(Error::NotSectorEigenstate(worst));
    }
    Ok(GaugeSector { s })
}

/// Normalized projection of `state` onto a sector; fails when the
/// component in that sector vanishes.
pub fn project_to_sector(state: &FourSpinState, sector: &GaugeSector) -> Result<FourSpinState> {
    let v = sector.projector().apply(state.amplitudes());
    if vec_norm(&v) < SECTOR_TOL {
        return Err(Error::NotSectorEigenstate(vec_norm(&v)));
    }
    FourSpinState::normalized(&v, state.label().map(str::to_string))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::catalog::catalog_state;

    #[test]
    fn sector_classes() {
        let all = GaugeSector::all();
        assert_eq!(all.len(), 8);
        let homogeneous = all
            .iter()
            .filter(|s| s.frustration_class() == FrustrationClass::FullyFrustrated)
            .count();
        assert_eq!(homogeneous, 2);
        for s in &all {
            assert!(matches!(s.pair_sum(), 3 | -1));
        }
    }

    #[test]
    fn projectors_partition_identity() {
        let mut sum = ComplexMatrix::zeros(16, 16);
        for s in GaugeSector::all() {
            let p = s.projector();
            assert!((&p * &p).distance(&p) < 1e-12);
            assert!((p.trace().re - 2.0).abs() < 1e-12);
            sum = &sum + &p;
        }
        assert!(sum.distance(&ComplexMatrix::identity(16)) < 1e-12);
    }

    #[test]
    fn symmetric_ground_states_have_definite_sectors() {
        assert_eq!(
            sector_of(&catalog_state("S+A").unwrap()).unwrap().s,
            [1, -1, 1]
        );
        assert_eq!(
            sector_of(&catalog_state("S+B").unwrap()).unwrap().s,
            [1, 1, -1]
        );
    }

    #[test]
    fn real_states_are_not_sector_eigenstates() {
        // every plaquette carries one σʸ, so ⟨Ŝₖ⟩ vanishes on real vectors
        assert!(matches!(
            sector_of(&catalog_state("e15").unwrap()),
            Err(Error::NotSectorEigenstate(_))
        ));
    }

    #[test]
    fn single_ground_state_is_not_a_sector_eigenstate() {
        assert!(matches!(
            sector_of(&catalog_state("g1").unwrap()),
            Err(Error::NotSectorEigenstate(_))
        ));
    }

    #[test]
    fn highest_level_lives_in_fully_frustrated_sectors() {
        use crate::model::{eigen_residual, Couplings};
        let e15 = catalog_state("e15").unwrap();
        for s in GaugeSector::all() {
            match project_to_sector(&e15, &s) {
                Ok(p) => {
                    assert_eq!(sector_of(&p).unwrap(), s);
                    assert_eq!(s.frustration_class(), FrustrationClass::FullyFrustrated);
                    let (e, r) = eigen_residual(&p, &Couplings::reference(1.0));
                    assert!((e - 12.0).abs() < 1e-10 && r < 1e-10);
                }
                Err(e) => assert!(matches!(e, Error::NotSectorEigenstate(_))),
            }
        }
        assert!(project_to_sector(&e15, &GaugeSector::new([1, 1, 1]).unwrap()).is_ok());
    }

    #[test]
    fn invalid_sector_rejected() {
        assert!(GaugeSector::new([1, 0, -1]).is_err());
        assert_eq!(GaugeSector::new([1, -1, -1]).unwrap().outer(), 1);
    }
}
