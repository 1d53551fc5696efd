//! Named four-spin states written over double-spin kets.
//!
//! Energies are recorded in units of Jx at the reference couplings
//! (Jp = Jy = Jz = 2Jx). States without a recorded energy are not
//! eigenstates and only take part in the entanglement and exchange checks.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::couplings::Couplings;
use super::hamiltonian::build_hamiltonian;
use super::state::{residual_at, FourSpinState, StateJson};
use crate::error::{Error, Result};
use crate::oplin::{hermitian_eig, span_projector, Complex64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub state: FourSpinState,
    /// Eigenvalue in units of Jx at the reference couplings, if any.
    #[serde(default)]
    pub energy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

/// Result of checking one catalog entry against the Hamiltonian.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub expected_energy: Option<f64>,
    pub rayleigh_energy: f64,
    /// ‖(H − E)ψ‖ at the expected energy, or at the Rayleigh energy when
    /// no energy is recorded.
    pub residual: f64,
    pub passed: bool,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(x: f64) -> Complex64 {
    c(x, 0.0)
}

fn kets(name: &str, terms: &[(Complex64, &str)]) -> FourSpinState {
    FourSpinState::from_double_kets(terms, Some(name.to_string())).expect("catalog ket is valid")
}

fn combine(
    name: &str,
    a: &FourSpinState,
    wa: Complex64,
    b: &FourSpinState,
    wb: Complex64,
) -> FourSpinState {
    let v: Vec<Complex64> = a
        .amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| wa * x + wb * y)
        .collect();
    FourSpinState::normalized(&v, Some(name.to_string())).expect("combination is nonzero")
}

fn standard() -> Catalog {
    let i = c(0.0, 1.0);
    let g1 = kets(
        "g1",
        &[(r(1.), "⇓●"), (r(-1.), "⇑○"), (r(1.), "⇑●"), (r(-1.), "⇓○")],
    );
    let g2 = kets("g2", &[(r(1.), "⇓⇑"), (r(-1.), "⇑⇓")]);
    let g3 = kets(
        "g3",
        &[(r(1.), "●⇓"), (r(-1.), "○⇑"), (r(1.), "●⇑"), (r(-1.), "○⇓")],
    );
    let g4 = kets("g4", &[(r(1.), "●●"), (r(-1.), "○○")]);

    let mut entries = Vec::new();
    let mut add = |state: FourSpinState, energy: Option<f64>| {
        entries.push(CatalogEntry {
            name: state.label().unwrap_or_default().to_string(),
            state,
            energy,
        });
    };
    let s_plus_a = combine("S+A", &g1, r(1.), &g3, i);
    let s_minus_a = combine("S-A", &g1, r(1.), &g3, -i);
    let s_plus_b = combine("S+B", &g2, r(1.), &g4, -i);
    let s_minus_b = combine("S-B", &g2, r(1.), &g4, i);
    for g in [g1, g2, g3, g4] {
        add(g, Some(-6.0));
    }
    for s in [s_plus_a, s_minus_a, s_plus_b, s_minus_b] {
        add(s, Some(-6.0));
    }

    let zero_level = [
        kets(
            "o1",
            &[
                (r(1.), "⇑⇑"),
                (r(1.), "⇓⇓"),
                (r(2.), "○●"),
                (r(2.), "●○"),
                (r(-5.), "○○"),
                (r(-5.), "●●"),
            ],
        ),
        kets(
            "o2",
            &[(r(1.), "⇑○"), (r(1.), "○⇑"), (r(1.), "●⇓"), (r(1.), "⇓●")],
        ),
        kets(
            "o3",
            &[(r(1.), "⇑●"), (r(1.), "●⇑"), (r(1.), "○⇓"), (r(1.), "⇓○")],
        ),
        kets(
            "o4",
            &[
                (r(1.), "⇑⇓"),
                (r(1.), "⇓⇑"),
                (r(2.), "○○"),
                (r(2.), "●●"),
                (r(-1.), "○●"),
                (r(-1.), "●○"),
            ],
        ),
    ];
    for s in zero_level {
        add(s, Some(0.0));
    }

    add(
        kets(
            "e9",
            &[(r(1.), "⇑○"), (r(-1.), "○⇑"), (r(-1.), "●⇓"), (r(1.), "⇓●")],
        ),
        Some(-4.0),
    );
    add(
        kets(
            "e10",
            &[(r(1.), "⇑●"), (r(-1.), "○⇓"), (r(-1.), "●⇑"), (r(1.), "⇓○")],
        ),
        Some(-4.0),
    );
    add(kets("e11", &[(r(-1.), "⇑⇑"), (r(1.), "⇓⇓")]), Some(2.0));
    add(
        kets(
            "e12",
            &[(r(-1.), "⇑○"), (r(-1.), "⇑●"), (r(1.), "⇓○"), (r(1.), "⇓●")],
        ),
        Some(2.0),
    );
    add(
        kets(
            "e13",
            &[(r(-1.), "○⇑"), (r(-1.), "●⇑"), (r(1.), "○⇓"), (r(1.), "●⇓")],
        ),
        Some(2.0),
    );
    add(kets("e14", &[(r(-1.), "○●"), (r(1.), "●○")]), Some(2.0));
    add(
        kets(
            "e15",
            &[
                (r(1.), "⇑⇑"),
                (r(1.), "⇓⇓"),
                (r(2.), "○●"),
                (r(2.), "●○"),
                (r(1.), "○○"),
                (r(1.), "●●"),
            ],
        ),
        Some(12.0),
    );
    add(
        kets(
            "e16",
            &[
                (r(1.), "⇑⇓"),
                (r(1.), "⇓⇑"),
                (r(2.), "○○"),
                (r(2.), "●●"),
                (r(5.), "○●"),
                (r(5.), "●○"),
            ],
        ),
        Some(12.0),
    );

    add(kets("GHZ", &[(r(1.), "⇑⇑"), (r(1.), "⇓⇓")]), None);
    add(
        kets(
            "W",
            &[(r(1.), "⇑○"), (r(1.), "⇑●"), (r(1.), "○⇑"), (r(1.), "●⇑")],
        ),
        None,
    );
    let [chi1, chi2] = chi_parts();
    let chi: Vec<Complex64> = chi1.iter().zip(&chi2).map(|(a, b)| a + b).collect();
    add(
        FourSpinState::normalized(&chi, Some("chi00".into())).expect("nonzero"),
        None,
    );

    Catalog { entries }
}

/// Unnormalized pieces χ₁, χ₂ with χ₀₀ = χ₁ + χ₂, each carrying the
/// common 1/√8 prefactor.
pub fn chi_parts() -> [Vec<Complex64>; 2] {
    let s = 8f64.sqrt().recip();
    let build = |terms: &[(f64, &str)]| {
        let mut v = vec![r(0.0); 16];
        for (w, k) in terms {
            v[super::state::parse_double_ket(k).expect("valid ket")] += r(w * s);
        }
        v
    };
    [
        build(&[
            (1., "⇓⇓"),
            (1., "⇑⇑"),
            (1., "○○"),
            (-1., "●●"),
            (1., "○●"),
            (1., "●○"),
        ]),
        build(&[(1., "⇑⇓"), (-1., "⇓⇑")]),
    ]
}

/// Accepts the ASCII and Unicode spellings of the signed names.
fn canonical(name: &str) -> String {
    let n = name.trim().replace('−', "-").replace('₊', "+");
    match n.as_str() {
        "χ00" | "χ₀₀" | "chi" => "chi00".to_string(),
        _ => n,
    }
}

impl Catalog {
    /// The built-in table, constructed once.
    pub fn standard() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(standard)
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        let key = canonical(name);
        self.entries
            .iter()
            .find(|e| e.name == key)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Replaces entries with matching names and appends the rest.
    pub fn with_overrides(&self, overrides: Vec<CatalogEntry>) -> Catalog {
        let mut out = self.clone();
        for mut o in overrides {
            o.name = canonical(&o.name);
            match out.entries.iter_mut().find(|e| e.name == o.name) {
                Some(e) => *e = o,
                None => out.entries.push(o),
            }
        }
        out
    }

    /// Checks every entry at `Couplings::reference(jx)`.
    ///
    /// Entries with a recorded energy pass when both the residual at that
    /// energy and the Rayleigh gap are below `tol`; others always pass.
    pub fn validate(&self, jx: f64, tol: f64) -> Vec<EntryCheck> {
        let h = build_hamiltonian(&Couplings::reference(jx));
        self.entries
            .iter()
            .map(|e| {
                let rayleigh = e.state.expectation(&h).re;
                let (residual, passed) = match e.energy {
                    Some(en) => {
                        let res = residual_at(&h, &e.state, en * jx);
                        (res, res < tol && (rayleigh - en * jx).abs() < tol)
                    }
                    None => (residual_at(&h, &e.state, rayleigh), true),
                };
                EntryCheck {
                    name: e.name.clone(),
                    expected_energy: e.energy,
                    rayleigh_energy: rayleigh,
                    residual,
                    passed,
                }
            })
            .collect()
    }
}

/// Catalog states spanning each degenerate level at the reference
/// couplings, with the level energy in units of Jx.
pub const LEVEL_BASES: [(f64, &[&str]); 5] = [
    (-6.0, &["g1", "g2", "g3", "g4"]),
    (-4.0, &["e9", "e10"]),
    (0.0, &["o1", "o2", "o3", "o4"]),
    (2.0, &["e11", "e12", "e13", "e14"]),
    (12.0, &["e15", "e16"]),
];

/// Distance between the projector onto a set of catalog states and the
/// numerical eigenspace projector at the same energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectorCheck {
    pub energy: f64,
    pub states: Vec<String>,
    pub distance: f64,
    pub passed: bool,
}

impl Catalog {
    /// Compares each level span of [`LEVEL_BASES`] with the eigensolver's
    /// eigenspace at `Couplings::reference(jx)`.
    pub fn projector_checks(
        &self,
        jx: f64,
        group_tol: f64,
        tol: f64,
    ) -> Result<Vec<ProjectorCheck>> {
        let spec = hermitian_eig(&build_hamiltonian(&Couplings::reference(jx)))?;
        LEVEL_BASES
            .iter()
            .map(|&(energy, names)| {
                let basis = names
                    .iter()
                    .map(|n| Ok(self.get(n)?.state.to_vec()))
                    .collect::<Result<Vec<_>>>()?;
                let ours = span_projector(&basis)?;
                let distance = match spec.eigenspace_projector(energy * jx, group_tol) {
                    Some(p) => ours.distance(&p),
                    None => f64::INFINITY,
                };
                Ok(ProjectorCheck {
                    energy,
                    states: names.iter().map(|n| n.to_string()).collect(),
                    distance,
                    passed: distance < tol,
                })
            })
            .collect()
    }
}

/// Looks up a named state in the built-in catalog.
pub fn catalog_state(name: &str) -> Result<FourSpinState> {
    Ok(Catalog::standard().get(name)?.state.clone())
}

/// The four ground states g1..g4 in order.
pub fn ground_basis() -> [FourSpinState; 4] {
    ["g1", "g2", "g3", "g4"].map(|n| catalog_state(n).expect("ground state in catalog"))
}

/// Override file entry: a name, amplitudes and an optional energy.
#[derive(Debug, Clone, Deserialize)]
pub struct OverrideJson {
    pub name: String,
    #[serde(flatten)]
    pub state: StateJson,
    #[serde(default)]
    pub energy: Option<f64>,
}

impl TryFrom<OverrideJson> for CatalogEntry {
    type Error = Error;

    fn try_from(o: OverrideJson) -> Result<Self> {
        let mut state = FourSpinState::try_from(o.state)?;
        if state.label().is_none() {
            state = state.with_label(o.name.clone());
        }
        Ok(CatalogEntry {
            name: canonical(&o.name),
            state,
            energy: o.energy,
        })
    }
}
