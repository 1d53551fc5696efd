//! Shared inputs for the criterion benches.

use tristar::Couplings;

/// Deterministic coupling points covering the reference point, an
/// isotropic point without plaquette term and a generic anisotropic one.
pub fn workload() -> [Couplings; 3] {
    [
        Couplings::reference(1.0),
        Couplings::new(1.0, 1.0, 1.0, 0.0),
        Couplings::new(-1.3, 0.4, 2.7, -0.9),
    ]
}
