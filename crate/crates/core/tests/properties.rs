use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tristar::entanglement::{concurrence_tau, partial_trace, von_neumann_entropy, LogBase};
use tristar::fermionization::{fermionized_hamiltonian, sector_table};
use tristar::model::{
    analytic_levels, build_hamiltonian, flip_all, numeric_spectrum, sorted_distance,
    verify_conserved, Catalog,
};
use tristar::oplin::{
    commutator, hermitian_eig, pauli4, Axis, Complex64, ComplexMatrix, PauliString,
};
use tristar::{Couplings, FourSpinState};

fn random_couplings(rng: &mut StdRng) -> Couplings {
    let mut draw = || rng.gen_range(-3.0..3.0);
    Couplings::new(draw(), draw(), draw(), draw())
}

fn random_state(rng: &mut StdRng) -> FourSpinState {
    let a: Vec<Complex64> = (0..16)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    FourSpinState::normalized(&a, None).unwrap()
}

/// exp(iθP) = cos θ + i sin θ P for an involutory Pauli string P.
fn pauli_rotation(factors: &[(usize, Axis)], theta: f64, n: usize) -> ComplexMatrix {
    let p = PauliString::unit(factors.iter().copied(), n)
        .unwrap()
        .compile();
    let id = ComplexMatrix::identity(1 << n);
    &id.scale_real(theta.cos()) + &p.scale(Complex64::new(0.0, theta.sin()))
}

fn axis() -> impl Strategy<Value = Option<Axis>> {
    prop_oneof![
        Just(None),
        Just(Some(Axis::X)),
        Just(Some(Axis::Y)),
        Just(Some(Axis::Z))
    ]
}

fn pauli_string() -> impl Strategy<Value = PauliString> {
    proptest::collection::vec(axis(), 4).prop_map(|axes| {
        let factors: Vec<(usize, Axis)> = axes
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| (i + 1, a)))
            .collect();
        PauliString::unit(factors, 4).unwrap()
    })
}

proptest! {
    #[test]
    fn symbolic_commutation_matches_matrices(a in pauli_string(), b in pauli_string()) {
        let comm = commutator(&a.compile(), &b.compile()).unwrap();
        prop_assert_eq!(a.commutes_with(&b), comm.is_zero(1e-12));
    }

    #[test]
    fn pauli_strings_are_traceless_involutions(a in pauli_string()) {
        let m = a.compile();
        prop_assert!((&m * &m).distance(&ComplexMatrix::identity(16)) < 1e-12);
        if !a.factors().is_empty() {
            prop_assert!(m.trace().norm() < 1e-12);
        }
    }

    #[test]
    fn eigensolver_reconstructs_hermitian_matrices(
        entries in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 64)
    ) {
        let z: Vec<Complex64> = entries.iter().map(|&(r, i)| Complex64::new(r, i)).collect();
        let a = ComplexMatrix::from_vec(8, 8, z).unwrap();
        let h = (&a + &a.adjoint()).scale_real(0.5);
        let spec = hermitian_eig(&h).unwrap();
        let sum: f64 = spec.eigenvalues.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-9);
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        for k in 0..8 {
            let v = spec.eigenvector(k);
            let hv = h.apply(&v);
            let r: f64 = hv.iter().zip(&v).map(|(x, y)| (x - y * spec.eigenvalues[k]).norm_sqr()).sum();
            prop_assert!(r.sqrt() < 1e-9);
        }
    }

    #[test]
    fn flip_all_is_an_involution(seed in any::<u64>()) {
        let s = random_state(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(flip_all(&flip_all(&s)), s);
    }

    #[test]
    fn tau_is_bounded_and_phase_invariant(seed in any::<u64>(), phase in 0.0f64..6.3) {
        let s = random_state(&mut StdRng::seed_from_u64(seed));
        let t = concurrence_tau(&s);
        prop_assert!((0.0..=1.0).contains(&t));
        let rotated = s.rephase(Complex64::from_polar(1.0, phase));
        prop_assert!((concurrence_tau(&rotated) - t).abs() < 1e-12);
    }

    #[test]
    fn complementary_marginals_share_entropy(seed in any::<u64>(), mask in 1usize..15) {
        let s = random_state(&mut StdRng::seed_from_u64(seed));
        let keep: Vec<usize> = (1..=4).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let rest: Vec<usize> = (1..=4).filter(|i| mask >> (i - 1) & 1 == 0).collect();
        let a = partial_trace(&s, &keep).unwrap();
        let b = partial_trace(&s, &rest).unwrap();
        prop_assert!((a.matrix().trace().re - 1.0).abs() < 1e-12);
        let (ea, eb) = (von_neumann_entropy(&a, LogBase::E), von_neumann_entropy(&b, LogBase::E));
        prop_assert!((ea - eb).abs() < 1e-9);
        prop_assert!(ea <= (keep.len().min(rest.len()) as f64) * std::f64::consts::LN_2 + 1e-9);
    }

    #[test]
    fn entropy_is_unitarily_invariant(seed in any::<u64>(), t1 in -3.0f64..3.0, t2 in -3.0f64..3.0) {
        let s = random_state(&mut StdRng::seed_from_u64(seed));
        let rho = partial_trace(&s, &[1, 3]).unwrap();
        let u = &pauli_rotation(&[(1, Axis::X), (2, Axis::Y)], t1, 2)
            * &pauli_rotation(&[(2, Axis::Z)], t2, 2);
        let turned = rho.conjugate(&u).unwrap();
        let (a, b) = (von_neumann_entropy(&rho, LogBase::E), von_neumann_entropy(&turned, LogBase::E));
        prop_assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn analytic_levels_match_eigensolver_on_random_couplings() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..100 {
        let c = random_couplings(&mut rng);
        let d = sorted_distance(&analytic_levels(&c).expanded(), &numeric_spectrum(&c));
        assert!(d < 1e-9, "{c:?}: {d:e}");
    }
}

#[test]
fn spectrum_sums_to_zero_trace() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let c = random_couplings(&mut rng);
        let total: f64 = numeric_spectrum(&c).iter().sum();
        assert!(total.abs() < 1e-9);
        assert!(build_hamiltonian(&c).trace().norm() < 1e-12);
    }
}

#[test]
fn plaquettes_conserved_on_random_couplings() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..20 {
        let c = random_couplings(&mut rng);
        assert!(verify_conserved(&c).ok(), "{c:?}");
    }
}

#[test]
fn fermionized_hamiltonian_is_exact_on_random_couplings() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..50 {
        let c = random_couplings(&mut rng);
        let d = fermionized_hamiltonian(&c).distance(&build_hamiltonian(&c));
        assert!(d < 1e-12, "{c:?}: {d:e}");
    }
}

#[test]
fn fully_frustrated_sector_energies_lie_in_spectrum() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..20 {
        let c = random_couplings(&mut rng);
        let t = sector_table(&c);
        assert!(t.exact_union_matches);
        for row in t.rows.iter().filter(|r| r.homogeneous) {
            assert!(row.in_spectrum, "{c:?} {row:?}");
        }
    }
}

#[test]
fn catalog_marginals_have_complementary_entropy() {
    for entry in &Catalog::standard().entries {
        for keep in [&[1][..], &[1, 2], &[2, 3, 4], &[1, 3]] {
            let rest: Vec<usize> = (1..=4).filter(|s| !keep.contains(s)).collect();
            let a = von_neumann_entropy(&partial_trace(&entry.state, keep).unwrap(), LogBase::E);
            let b = von_neumann_entropy(&partial_trace(&entry.state, &rest).unwrap(), LogBase::E);
            assert!((a - b).abs() < 1e-9, "{} {keep:?}", entry.name);
        }
    }
}

#[test]
fn tau_bounded_over_many_random_states() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for _ in 0..1000 {
        let t = concurrence_tau(&random_state(&mut rng));
        assert!((0.0..=1.0).contains(&t));
    }
}

#[test]
fn uniform_strings_flip_every_spin() {
    let x4 = pauli4(&[(1, Axis::X), (2, Axis::X), (3, Axis::X), (4, Axis::X)]);
    let mut rng = StdRng::seed_from_u64(11);
    let s = random_state(&mut rng);
    let flipped = flip_all(&s);
    let applied = s.apply(&x4).unwrap();
    for (a, b) in flipped.amplitudes().iter().zip(applied.amplitudes()) {
        assert!((a - b).norm() < 1e-15);
    }
}
