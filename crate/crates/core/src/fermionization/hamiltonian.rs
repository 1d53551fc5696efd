use super::majorana::{fermionic_plaquette_forms, BondOperators, MajoranaSet};
use crate::model::{plaquettes, Couplings};
use crate::oplin::{anticommutator, Complex64, ComplexMatrix};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn plaquette_pairs(jp: f64) -> ComplexMatrix {
    let [s1, s2, s3, _] = plaquettes();
    (&(&(&s1 * &s2) + &(&s2 * &s3)) + &(&s3 * &s1)).scale_real(jp)
}

/// The Hamiltonian rebuilt from Majorana bilinears dressed by bond and
/// plaquette operators:
///
/// iJx b₂b₄ − iJy [Ŝ₂B₂₃] b₃b₄ + iJz B₁₄ b₁b₄ + iJx [Ŝ₁Ŝ₂] b₁b₃
/// − iJy [Ŝ₃B₁₄] b₁b₂ + iJz B₂₃ b₂b₃ + Jp(Ŝ₁Ŝ₂ + Ŝ₂Ŝ₃ + Ŝ₃Ŝ₁).
///
/// Bracketed plaquettes are the Majorana products, which differ from the
/// spin strings by the sign of Ŝ₁.
pub fn fermionized_hamiltonian(c: &Couplings) -> ComplexMatrix {
    let m = MajoranaSet::standard();
    let bonds = BondOperators::new(m);
    let [f1, f2, f3, _] = fermionic_plaquette_forms(m);
    let b = |k: usize| m.b(k);
    let term = |coef: Complex64, ops: &[&ComplexMatrix]| {
        ops.iter()
            .fold(ComplexMatrix::identity(16), |acc, o| &acc * *o)
            .scale(coef)
    };
    let f12 = &f1 * &f2;
    let terms = [
        term(I * c.jx, &[b(2), b(4)]),
        term(-I * c.jy, &[&f2, &bonds.b23, b(3), b(4)]),
        term(I * c.jz, &[&bonds.b14, b(1), b(4)]),
        term(I * c.jx, &[&f12, b(1), b(3)]),
        term(-I * c.jy, &[&f3, &bonds.b14, b(1), b(2)]),
        term(I * c.jz, &[&bonds.b23, b(2), b(3)]),
        plaquette_pairs(c.jp),
    ];
    terms
        .iter()
        .fold(ComplexMatrix::zeros(16, 16), |acc, t| &acc + t)
}

/// Two complex fermions built from the b Majoranas:
/// c_a = (b₁ + ib₃)/2, c_b = (b₂ − ib₄)/2.
#[derive(Debug, Clone)]
pub struct ComplexFermionSet {
    pub ca: ComplexMatrix,
    pub ca_dag: ComplexMatrix,
    pub cb: ComplexMatrix,
    pub cb_dag: ComplexMatrix,
}

impl ComplexFermionSet {
    pub fn new(m: &MajoranaSet) -> Self {
        let half =
            |a: &ComplexMatrix, s: Complex64, b: &ComplexMatrix| (a + &b.scale(s)).scale_real(0.5);
        Self {
            ca: half(m.b(1), I, m.b(3)),
            ca_dag: half(m.b(1), -I, m.b(3)),
            cb: half(m.b(2), -I, m.b(4)),
            cb_dag: half(m.b(2), I, m.b(4)),
        }
    }

    pub fn standard() -> Self {
        Self::new(MajoranaSet::standard())
    }

    /// Largest deviation from canonical anticommutation for both species.
    pub fn algebra_defect(&self) -> f64 {
        let id = ComplexMatrix::identity(16);
        let zero = ComplexMatrix::zeros(16, 16);
        let ac = |a: &ComplexMatrix, b: &ComplexMatrix| anticommutator(a, b).expect("16×16");
        let checks = [
            (ac(&self.ca, &self.ca_dag), &id),
            (ac(&self.cb, &self.cb_dag), &id),
            (&self.ca * &self.ca, &zero),
            (&self.cb * &self.cb, &zero),
            (ac(&self.ca, &self.cb), &zero),
            (ac(&self.ca, &self.cb_dag), &zero),
            (ac(&self.ca_dag, &self.cb), &zero),
            (ac(&self.ca_dag, &self.cb_dag), &zero),
        ];
        let adjoint = self
            .ca
            .adjoint()
            .distance(&self.ca_dag)
            .max(self.cb.adjoint().distance(&self.cb_dag));
        checks
            .iter()
            .map(|(a, b)| a.distance(b))
            .fold(adjoint, f64::max)
    }
}

/// Pairing and hopping operators
/// Δ = Jz(B₁₄ − B₂₃) + iJy(Ŝ₂B₂₃ − Ŝ₃B₁₄),
/// t = Jz(B₁₄ + B₂₃) − iJy(Ŝ₂B₂₃ + Ŝ₃B₁₄),
/// together with Δ̄, t̄ (the same expressions with i → −i).
#[derive(Debug, Clone)]
pub struct GapOperators {
    pub delta: ComplexMatrix,
    pub delta_bar: ComplexMatrix,
    pub t: ComplexMatrix,
    pub t_bar: ComplexMatrix,
}

pub fn gap_operators(c: &Couplings) -> GapOperators {
    let bonds = BondOperators::new(MajoranaSet::standard());
    let [_, s2, s3, _] = plaquettes();
    let s2b = &s2 * &bonds.b23;
    let s3b = &s3 * &bonds.b14;
    let z_minus = (&bonds.b14 - &bonds.b23).scale_real(c.jz);
    let z_plus = (&bonds.b14 + &bonds.b23).scale_real(c.jz);
    let y_minus = (&s2b - &s3b).scale(I * c.jy);
    let y_plus = (&s2b + &s3b).scale(I * c.jy);
    GapOperators {
        delta: &z_minus + &y_minus,
        delta_bar: &z_minus - &y_minus,
        t: &z_plus - &y_plus,
        t_bar: &z_plus + &y_plus,
    }
}

/// The Hamiltonian in terms of c_a, c_b:
///
/// Jx F(2n_a − 1) + Jx(1 − 2n_b) + Δ c_a c_b† − Δ̄ c_a† c_b
/// + t c_a† c_b† − t̄ c_a c_b + Jp(Ŝ₁Ŝ₂ + Ŝ₂Ŝ₃ + Ŝ₃Ŝ₁),
///
/// with F the Majorana-product Ŝ₁Ŝ₂ and operator coefficients on the left.
pub fn complex_fermion_hamiltonian(c: &Couplings) -> ComplexMatrix {
    let m = MajoranaSet::standard();
    let cf = ComplexFermionSet::new(m);
    let g = gap_operators(c);
    let [f1, f2, _, _] = fermionic_plaquette_forms(m);
    let id = ComplexMatrix::identity(16);
    let na = &cf.ca_dag * &cf.ca;
    let nb = &cf.cb_dag * &cf.cb;

    let x_a = (&(&f1 * &f2) * &(&na.scale_real(2.0) - &id)).scale_real(c.jx);
    let x_b = (&id - &nb.scale_real(2.0)).scale_real(c.jx);
    let pair = |op: &ComplexMatrix, a: &ComplexMatrix, b: &ComplexMatrix| &(op * a) * b;
    let terms = [
        x_a,
        x_b,
        pair(&g.delta, &cf.ca, &cf.cb_dag),
        -&pair(&g.delta_bar, &cf.ca_dag, &cf.cb),
        pair(&g.t, &cf.ca_dag, &cf.cb_dag),
        -&pair(&g.t_bar, &cf.ca, &cf.cb),
        plaquette_pairs(c.jp),
    ];
    terms
        .iter()
        .fold(ComplexMatrix::zeros(16, 16), |acc, t| &acc + t)
}
