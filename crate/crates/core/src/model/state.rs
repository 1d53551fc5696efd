use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::couplings::Couplings;
use super::hamiltonian::build_hamiltonian;
use crate::error::{Error, Result};
use crate::oplin::{inner, round_sig, vec_norm, Complex64, ComplexMatrix};

/// Normalization slack accepted by [`FourSpinState::from_amplitudes`].
const NORM_TOL: f64 = 1e-10;

/// State of one spin pair, written with the double-spin symbols
/// ⇑ = ↑↑, ⇓ = ↓↓, ○ = ↑↓, ● = ↓↑.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoubleSpin {
    Up,
    Down,
    Open,
    Filled,
}

impl DoubleSpin {
    pub const ALL: [DoubleSpin; 4] = [Self::Up, Self::Down, Self::Open, Self::Filled];

    /// Two bits, first spin high; bit 1 means ↓.
    pub fn bits(self) -> usize {
        match self {
            Self::Up => 0b00,
            Self::Open => 0b01,
            Self::Filled => 0b10,
            Self::Down => 0b11,
        }
    }

    pub fn from_bits(bits: usize) -> Self {
        match bits & 0b11 {
            0b00 => Self::Up,
            0b01 => Self::Open,
            0b10 => Self::Filled,
            _ => Self::Down,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Self::Up => '⇑',
            Self::Down => '⇓',
            Self::Open => '○',
            Self::Filled => '●',
        }
    }

    /// Accepts the arrow/circle glyphs or the ASCII letters U, D, o, c.
    pub fn from_symbol(ch: char) -> Option<Self> {
        match ch {
            '⇑' | 'U' => Some(Self::Up),
            '⇓' | 'D' => Some(Self::Down),
            '○' | 'o' => Some(Self::Open),
            '●' | 'c' => Some(Self::Filled),
            _ => None,
        }
    }
}

/// Basis index of the double-spin ket |first second⟩, pairs (1,2) and (3,4).
pub fn double_spin_index(first: DoubleSpin, second: DoubleSpin) -> usize {
    (first.bits() << 2) | second.bits()
}

/// Parses a two-symbol ket such as `"⇑○"` or `"Uo"` into a basis index.
pub fn parse_double_ket(s: &str) -> Result<usize> {
    let symbols: Vec<DoubleSpin> = s
        .chars()
        .map(DoubleSpin::from_symbol)
        .collect::<Option<_>>()
        .ok_or_else(|| Error::UnknownName(s.to_string()))?;
    match symbols[..] {
        [a, b] => Ok(double_spin_index(a, b)),
        _ => Err(Error::UnknownName(s.to_string())),
    }
}

/// `"↑↓↑↑"` style label of basis index `k`.
pub fn basis_label(k: usize) -> String {
    (0..4)
        .map(|i| {
            if (k >> (3 - i)) & 1 == 0 {
                '↑'
            } else {
                '↓'
            }
        })
        .collect()
}

/// `"⇑○"` style label of basis index `k`.
pub fn double_spin_label(k: usize) -> String {
    [DoubleSpin::from_bits(k >> 2), DoubleSpin::from_bits(k)]
        .iter()
        .map(|d| d.symbol())
        .collect()
}

/// A normalized vector in the 16-dimensional space of four spins.
#[derive(Debug, Clone, PartialEq)]
pub struct FourSpinState {
    amplitudes: [Complex64; 16],
    label: Option<String>,
}

impl FourSpinState {
    /// Accepts amplitudes whose norm is already 1 (within 1e-10).
    pub fn from_amplitudes(amplitudes: [Complex64; 16], label: Option<String>) -> Result<Self> {
        let n = vec_norm(&amplitudes);
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self { amplitudes, label })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: &[Complex64], label: Option<String>) -> Result<Self> {
        if amplitudes.len() != 16 {
            return Err(Error::DimensionMismatch(format!(
                "state needs 16 amplitudes, got {}",
                amplitudes.len()
            )));
        }
        let n = vec_norm(amplitudes);
        if n < 1e-300 || !n.is_finite() {
            return Err(Error::NotNormalized(n));
        }
        let mut a = [Complex64::new(0.0, 0.0); 16];
        for (dst, src) in a.iter_mut().zip(amplitudes) {
            *dst = src / n;
        }
        Ok(Self {
            amplitudes: a,
            label,
        })
    }

    /// Builds a state from weighted double-spin kets, then normalizes.
    pub fn from_double_kets(terms: &[(Complex64, &str)], label: Option<String>) -> Result<Self> {
        let mut a = [Complex64::new(0.0, 0.0); 16];
        for (w, ket) in terms {
            a[parse_double_ket(ket)?] += w;
        }
        Self::normalized(&a, label)
    }

    pub fn basis(k: usize) -> Result<Self> {
        if k >= 16 {
            return Err(Error::BadIndex(k));
        }
        let mut a = [Complex64::new(0.0, 0.0); 16];
        a[k] = Complex64::new(1.0, 0.0);
        Ok(Self {
            amplitudes: a,
            label: Some(basis_label(k)),
        })
    }

    pub fn amplitudes(&self) -> &[Complex64; 16] {
        &self.amplitudes
    }

    pub fn to_vec(&self) -> Vec<Complex64> {
        self.amplitudes.to_vec()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    /// ⟨self|other⟩.
    pub fn overlap(&self, other: &Self) -> Complex64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// ⟨self|op|self⟩.
    pub fn expectation(&self, op: &ComplexMatrix) -> Complex64 {
        inner(&self.amplitudes, &op.apply(&self.amplitudes))
    }

    /// Applies `op` and renormalizes; fails when the image vanishes.
    pub fn apply(&self, op: &ComplexMatrix) -> Result<Self> {
        if op.rows() != 16 || op.cols() != 16 {
            return Err(Error::DimensionMismatch("operator must be 16×16".into()));
        }
        Self::normalized(&op.apply(&self.amplitudes), self.label.clone())
    }

    /// Multiplies every amplitude by a unit-modulus phase.
    pub fn rephase(&self, phase: Complex64) -> Self {
        let mut a = self.amplitudes;
        for x in a.iter_mut() {
            *x *= phase;
        }
        Self {
            amplitudes: a,
            label: self.label.clone(),
        }
    }

    /// Basis indices with |amplitude| above `eps`.
    pub fn support(&self, eps: f64) -> Vec<usize> {
        (0..16)
            .filter(|&k| self.amplitudes[k].norm() > eps)
            .collect()
    }
}

/// Global spin flip: amplitude at k moves to k ⊕ 1111.
pub fn flip_all(state: &FourSpinState) -> FourSpinState {
    let mut a = [Complex64::new(0.0, 0.0); 16];
    for (k, x) in state.amplitudes.iter().enumerate() {
        a[k ^ 0b1111] = *x;
    }
    FourSpinState {
        amplitudes: a,
        label: state.label.clone(),
    }
}

/// Rayleigh quotient ⟨ψ|H|ψ⟩ and ‖(H − E)ψ‖ at that energy.
pub fn eigen_residual(state: &FourSpinState, c: &Couplings) -> (f64, f64) {
    let h = build_hamiltonian(c);
    let e = state.expectation(&h).re;
    (e, residual_at(&h, state, e))
}

/// ‖(H − E)ψ‖ for a given `energy`.
pub fn residual_at(h: &ComplexMatrix, state: &FourSpinState, energy: f64) -> f64 {
    let hv = h.apply(&state.amplitudes);
    let diff: Vec<Complex64> = hv
        .iter()
        .zip(&state.amplitudes)
        .map(|(x, y)| x - y * energy)
        .collect();
    vec_norm(&diff)
}

impl fmt::Display for FourSpinState {
    /// Nonzero amplitudes over double-spin kets, e.g. `0.5|⇑○⟩ + …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in self.support(1e-12) {
            let a = self.amplitudes[k];
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a.im.abs() < 1e-12 {
                write!(f, "{:.6}", a.re)?;
            } else {
                write!(f, "({:.6}{:+.6}i)", a.re, a.im)?;
            }
            write!(f, "|{}⟩", double_spin_label(k))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialized state: `{"label": ..., "re": [16], "im": [16]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    #[serde(default)]
    pub label: Option<String>,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&FourSpinState> for StateJson {
    fn from(s: &FourSpinState) -> Self {
        Self {
            label: s.label.clone(),
            re: s.amplitudes.iter().map(|z| round_sig(z.re)).collect(),
            im: s.amplitudes.iter().map(|z| round_sig(z.im)).collect(),
        }
    }
}

impl TryFrom<StateJson> for FourSpinState {
    type Error = Error;

    /// Normalizes on load so hand-written fixtures need not be exact.
    fn try_from(j: StateJson) -> Result<Self> {
        if j.re.len() != 16 || j.im.len() != 16 {
            return Err(Error::DimensionMismatch(format!(
                "state needs 16 re and 16 im values, got {} and {}",
                j.re.len(),
                j.im.len()
            )));
        }
        let a: Vec<Complex64> =
            j.re.iter()
                .zip(&j.im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect();
        Self::normalized(&a, j.label)
    }
}

impl Serialize for FourSpinState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StateJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FourSpinState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = StateJson::deserialize(d)?;
        FourSpinState::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl FromStr for DoubleSpin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(DoubleSpin::from_symbol), chars.next()) {
            (Some(d), None) => Ok(d),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}
