use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oplin::{Complex64, ComplexMatrix};

/// How a permutation was specified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermutationKind {
    /// Swap of the clusters (1,2) and (3,4).
    PairSwap,
    /// Swap of two sites.
    Transposition(usize, usize),
    /// Exchange of two inner plaquettes, realized as a site transposition.
    PlaquetteSwap(usize, usize),
}

/// A relabeling of the four sites; new bit i is old bit `mapping[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: [usize; 4],
    kind: PermutationKind,
}

impl Permutation {
    pub fn pair_swap() -> Self {
        Self {
            mapping: [2, 3, 0, 1],
            kind: PermutationKind::PairSwap,
        }
    }

    /// Swap of sites `i` and `j` (1-based, distinct).
    pub fn transposition(i: usize, j: usize) -> Result<Self> {
        for s in [i, j] {
            if !(1..=4).contains(&s) {
                return Err(Error::SiteOutOfRange {
                    site: s,
                    n_sites: 4,
                });
            }
        }
        if i == j {
            return Err(Error::DuplicateSite(i));
        }
        let mut mapping = [0, 1, 2, 3];
        mapping.swap(i - 1, j - 1);
        let (a, b) = (i.min(j), i.max(j));
        Ok(Self {
            mapping,
            kind: PermutationKind::Transposition(a, b),
        })
    }

    /// Exchange of plaquettes Ŝᵢ and Ŝⱼ (i, j ∈ 1..=3): the transposition
    /// of the two sites not shared by both plaquettes.
    pub fn plaquette_swap(i: usize, j: usize) -> Result<Self> {
        let (a, b) = (i.min(j), i.max(j));
        let (s, t) = match (a, b) {
            (1, 2) => (1, 4),
            (1, 3) => (3, 4),
            (2, 3) => (1, 3),
            _ if a == b && (1..=3).contains(&a) => return Err(Error::DuplicateSite(a)),
            _ => return Err(Error::BadIndex(if (1..=3).contains(&a) { b } else { a })),
        };
        let mut p = Self::transposition(s, t)?;
        p.kind = PermutationKind::PlaquetteSwap(a, b);
        Ok(p)
    }

    pub fn mapping(&self) -> [usize; 4] {
        self.mapping
    }

    pub fn kind(&self) -> PermutationKind {
        self.kind
    }

    /// Image of basis index `k`.
    pub fn apply_index(&self, k: usize) -> usize {
        let bit = |i: usize| (k >> (3 - i)) & 1;
        (0..4).fold(0, |acc, i| (acc << 1) | bit(self.mapping[i]))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PermutationKind::PairSwap => write!(f, "pair"),
            PermutationKind::Transposition(i, j) => write!(f, "({i},{j})"),
            PermutationKind::PlaquetteSwap(i, j) => write!(f, "S{i}S{j}"),
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `pair`, `(i,j)` or `i,j` for site swaps, and `SiSj` for
    /// plaquette swaps.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::UnknownName(s.to_string());
        if t.eq_ignore_ascii_case("pair") {
            return Ok(Self::pair_swap());
        }
        let digits = |body: &str| -> Result<(usize, usize)> {
            let parts: Vec<&str> = body.split(',').collect();
            match parts[..] {
                [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
                _ => Err(bad()),
            }
        };
        if let Some(rest) = t.strip_prefix(['S', 's']) {
            let (a, b) = rest.split_once(['S', 's']).ok_or_else(bad)?;
            let a: usize = a.trim_end_matches(',').parse().map_err(|_| bad())?;
            let b: usize = b.parse().map_err(|_| bad())?;
            return Self::plaquette_swap(a, b);
        }
        let body = t.trim_start_matches('(').trim_end_matches(')');
        let (a, b) = digits(body)?;
        Self::transposition(a, b)
    }
}

/// 16×16 permutation matrix with P|k⟩ = |p(k)⟩.
pub fn permutation_matrix(p: &Permutation) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(16, 16);
    for k in 0..16 {
        m[(p.apply_index(k), k)] = Complex64::new(1.0, 0.0);
    }
    m
}
