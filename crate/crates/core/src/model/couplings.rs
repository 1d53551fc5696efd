use serde::{Deserialize, Serialize};

/// Exchange constants of the triangular-star Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub jp: f64,
}

impl Couplings {
    pub const ZERO: Couplings = Couplings::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(jx: f64, jy: f64, jz: f64, jp: f64) -> Self {
        Self { jx, jy, jz, jp }
    }

    /// The reference point Jp = Jy = Jz = 2Jx, where the zero level is
    /// four-fold degenerate and the ground energy is −6Jx.
    pub const fn reference(jx: f64) -> Self {
        Self::new(jx, 2.0 * jx, 2.0 * jx, 2.0 * jx)
    }

    pub fn is_finite(&self) -> bool {
        [self.jx, self.jy, self.jz, self.jp]
            .iter()
            .all(|v| v.is_finite())
    }

    /// Unit for reported energies: Jx when nonzero, else 1.
    pub fn energy_unit(&self) -> f64 {
        if self.jx != 0.0 {
            self.jx
        } else {
            1.0
        }
    }
}

impl Default for Couplings {
    fn default() -> Self {
        Self::reference(1.0)
    }
}
