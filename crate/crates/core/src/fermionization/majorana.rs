use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{build_hamiltonian, plaquettes, Couplings};
use crate::oplin::{anticommutator, commutator, pauli4, Axis, Complex64, ComplexMatrix};

use Axis::{X, Y, Z};

/// Order in which sites are threaded by the Jordan-Wigner string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SiteOrdering {
    order: [usize; 4],
}

impl SiteOrdering {
    /// Any bijection on {1,2,3,4}.
    pub fn new(order: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &s in &order {
            if !(1..=4).contains(&s) {
                return Err(Error::SiteOutOfRange {
                    site: s,
                    n_sites: 4,
                });
            }
            if seen[s - 1] {
                return Err(Error::DuplicateSite(s));
            }
            seen[s - 1] = true;
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> [usize; 4] {
        self.order
    }
}

impl Default for SiteOrdering {
    fn default() -> Self {
        Self {
            order: [1, 4, 2, 3],
        }
    }
}

/// Eight Majorana operators, `psi[i]` and `b[i]` belonging to site i + 1.
#[derive(Debug, Clone)]
pub struct MajoranaSet {
    pub psi: [ComplexMatrix; 4],
    pub b: [ComplexMatrix; 4],
}

fn string(sign: f64, factors: &[(usize, Axis)]) -> ComplexMatrix {
    pauli4(factors).scale_real(sign)
}

/// Spin strings for the Majoranas along the 1-4-2-3 chain.
pub fn majorana_set(ordering: SiteOrdering) -> Result<MajoranaSet> {
    if ordering != SiteOrdering::default() {
        return Err(Error::UnsupportedOrdering(ordering.order));
    }
    let psi = [
        string(1.0, &[(1, Y)]),
        string(1.0, &[(2, Y), (1, Z), (4, Z)]),
        string(1.0, &[(3, X), (1, Z), (4, Z), (2, Z)]),
        string(1.0, &[(4, X), (1, Z)]),
    ];
    let b = [
        string(-1.0, &[(1, X)]),
        string(-1.0, &[(2, X), (1, Z), (4, Z)]),
        string(-1.0, &[(3, Y), (1, Z), (4, Z), (2, Z)]),
        string(-1.0, &[(4, Y), (1, Z)]),
    ];
    Ok(MajoranaSet { psi, b })
}

impl MajoranaSet {
    /// The default-ordering set, built once.
    pub fn standard() -> &'static Self {
        static SET: OnceLock<MajoranaSet> = OnceLock::new();
        SET.get_or_init(|| majorana_set(SiteOrdering::default()).expect("default ordering"))
    }

    /// ψ₁..ψ₄ followed by b₁..b₄.
    pub fn all(&self) -> Vec<&ComplexMatrix> {
        self.psi.iter().chain(self.b.iter()).collect()
    }

    /// ψᵢ for site i (1-based).
    pub fn psi(&self, i: usize) -> &ComplexMatrix {
        &self.psi[i - 1]
    }

    /// bᵢ for site i (1-based).
    pub fn b(&self, i: usize) -> &ComplexMatrix {
        &self.b[i - 1]
    }

    /// Largest deviation from {γᵢ, γⱼ} = 2δᵢⱼ and γᵢ = γᵢ†.
    pub fn clifford_defect(&self) -> f64 {
        let ops = self.all();
        let id2 = ComplexMatrix::identity(16).scale_real(2.0);
        let zero = ComplexMatrix::zeros(16, 16);
        let mut worst: f64 = 0.0;
        for (i, a) in ops.iter().enumerate() {
            worst = worst.max(a.hermiticity_defect());
            for (j, b) in ops.iter().enumerate().skip(i) {
                let ac = anticommutator(a, b).expect("16×16 operators");
                let want = if i == j { &id2 } else { &zero };
                worst = worst.max(ac.distance(want));
            }
        }
        worst
    }
}

/// B₁₄ = iψ₁ψ₄ and B₂₃ = iψ₂ψ₃.
#[derive(Debug, Clone)]
pub struct BondOperators {
    pub b14: ComplexMatrix,
    pub b23: ComplexMatrix,
}

impl BondOperators {
    pub fn new(m: &MajoranaSet) -> Self {
        let i = Complex64::new(0.0, 1.0);
        Self {
            b14: (m.psi(1) * m.psi(4)).scale(i),
            b23: (m.psi(2) * m.psi(3)).scale(i),
        }
    }
}

/// Plaquettes written as Majorana products:
/// b₁ψ₁ψ₂b₃, ψ₄b₄b₂ψ₃, ψ₁ψ₂b₂b₄, b₁ψ₃b₃ψ₄.
pub fn fermionic_plaquette_forms(m: &MajoranaSet) -> [ComplexMatrix; 4] {
    let prod = |ops: [&ComplexMatrix; 4]| &(&(ops[0] * ops[1]) * ops[2]) * ops[3];
    [
        prod([m.b(1), m.psi(1), m.psi(2), m.b(3)]),
        prod([m.psi(4), m.b(4), m.b(2), m.psi(3)]),
        prod([m.psi(1), m.psi(2), m.b(2), m.b(4)]),
        prod([m.b(1), m.psi(3), m.b(3), m.psi(4)]),
    ]
}

/// Unit scalar s ∈ {1, −1, i, −i} with `a ≈ s·b`.
pub fn unit_scalar(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<(Complex64, f64)> {
    let candidates = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
    ];
    let (s, d) = candidates
        .iter()
        .map(|&s| (s, a.distance(&b.scale(s))))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("nonempty");
    if d < tol {
        Ok((s, d))
    } else {
        Err(Error::NoScalarMatch(d))
    }
}

/// Fermionic plaquettes against the spin strings.
#[derive(Debug, Clone, Serialize)]
pub struct PlaquetteReport {
    /// sₖ with fermionic Ŝₖ = sₖ · spin Ŝₖ.
    pub scalars: [Complex64; 4],
    /// ‖fermionic − sₖ·spin‖_F.
    pub distances: [f64; 4],
    /// ‖F₁F₂F₃ − (s₁s₂s₃/s₄)F₄‖_F, mirroring Ŝ₁Ŝ₂Ŝ₃ = Ŝ₄.
    pub product_defect: f64,
    /// Largest ‖Fₖ² − I‖_F.
    pub square_defect: f64,
}

pub fn fermionic_plaquettes() -> Result<PlaquetteReport> {
    let m = MajoranaSet::standard();
    let f = fermionic_plaquette_forms(m);
    let spin = plaquettes();
    let mut scalars = [Complex64::new(0.0, 0.0); 4];
    let mut distances = [0.0; 4];
    for k in 0..4 {
        let (s, d) = unit_scalar(&f[k], &spin[k], 1e-12)?;
        scalars[k] = s;
        distances[k] = d;
    }
    let ratio = scalars[0] * scalars[1] * scalars[2] / scalars[3];
    let product_defect = (&(&f[0] * &f[1]) * &f[2]).distance(&f[3].scale(ratio));
    let id = ComplexMatrix::identity(16);
    let square_defect = f.iter().map(|x| (x * x).distance(&id)).fold(0.0, f64::max);
    Ok(PlaquetteReport {
        scalars,
        distances,
        product_defect,
        square_defect,
    })
}

/// Bond-operator identities. The `claimed_*` fields are the conservation
/// and product relations as usually stated; `b14b23_vs_s2s3` is the
/// relation that actually holds.
#[derive(Debug, Clone, Serialize)]
pub struct BondReport {
    /// ‖[B₁₄, H]‖_F.
    pub claimed_b14_h: f64,
    /// ‖[B₂₃, H]‖_F.
    pub claimed_b23_h: f64,
    /// ‖[B₁₄, B₂₃]‖_F.
    pub b14_b23: f64,
    /// ‖Ŝ₁Ŝ₃ + B₁₄B₂₃‖_F.
    pub claimed_s1s3: f64,
    /// ‖Ŝ₂Ŝ₄ + B₁₄B₂₃‖_F.
    pub claimed_s2s4: f64,
    /// ‖B₁₄B₂₃ − Ŝ₂Ŝ₃‖_F.
    pub b14b23_vs_s2s3: f64,
    /// Largest of ‖Bᵢⱼ² − I‖_F and the Hermiticity defects.
    pub involution_defect: f64,
}

impl BondReport {
    /// All relations in their commonly stated form.
    pub fn claimed_hold(&self, tol: f64) -> bool {
        [
            self.claimed_b14_h,
            self.claimed_b23_h,
            self.b14_b23,
            self.claimed_s1s3,
            self.claimed_s2s4,
        ]
        .iter()
        .all(|&d| d < tol)
    }

    /// Relations that hold for this model: mutual commutation,
    /// involution, and B₁₄B₂₃ = Ŝ₂Ŝ₃.
    pub fn exact_hold(&self, tol: f64) -> bool {
        self.b14_b23 < tol && self.b14b23_vs_s2s3 < tol && self.involution_defect < tol
    }
}

pub fn bond_identities(c: &Couplings) -> BondReport {
    let bonds = BondOperators::new(MajoranaSet::standard());
    let h = build_hamiltonian(c);
    let [s1, s2, s3, s4] = plaquettes();
    let comm =
        |a: &ComplexMatrix, b: &ComplexMatrix| commutator(a, b).expect("16×16").frobenius_norm();
    let prod = &bonds.b14 * &bonds.b23;
    let id = ComplexMatrix::identity(16);
    let involution_defect = [&bonds.b14, &bonds.b23]
        .iter()
        .map(|b| (*b * *b).distance(&id).max(b.hermiticity_defect()))
        .fold(0.0, f64::max);
    BondReport {
        claimed_b14_h: comm(&bonds.b14, &h),
        claimed_b23_h: comm(&bonds.b23, &h),
        b14_b23: comm(&bonds.b14, &bonds.b23),
        claimed_s1s3: (&(&s1 * &s3) + &prod).frobenius_norm(),
        claimed_s2s4: (&(&s2 * &s4) + &prod).frobenius_norm(),
        b14b23_vs_s2s3: prod.distance(&(&s2 * &s3)),
        involution_defect,
    }
}
