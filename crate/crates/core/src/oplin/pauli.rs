use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, I, ONE, ZERO};
use crate::error::{Error, Result};

/// Pauli axis of a single-site factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// The 2×2 Pauli matrix.
    pub fn matrix(self) -> ComplexMatrix {
        let rows = match self {
            Axis::X => vec![vec![ZERO, ONE], vec![ONE, ZERO]],
            Axis::Y => vec![vec![ZERO, -I], vec![I, ZERO]],
            Axis::Z => vec![vec![ONE, ZERO], vec![ZERO, -ONE]],
        };
        ComplexMatrix::from_rows(&rows).expect("2×2 literal")
    }

    pub fn symbol(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// One site-local factor σ_site^axis; sites are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliFactor {
    pub site: usize,
    pub axis: Axis,
}

/// Symbolic product of single-site Pauli factors times a scalar.
///
/// At most one factor per site. Factor order is irrelevant for the compiled
/// matrix since factors on distinct sites commute.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliString {
    coefficient: Complex64,
    factors: Vec<PauliFactor>,
    n_sites: usize,
}

impl PauliString {
    pub fn new(
        coefficient: Complex64,
        factors: impl IntoIterator<Item = (usize, Axis)>,
        n_sites: usize,
    ) -> Result<Self> {
        let mut seen = vec![false; n_sites + 1];
        let mut out = Vec::new();
        for (site, axis) in factors {
            if site == 0 || site > n_sites {
                return Err(Error::SiteOutOfRange { site, n_sites });
            }
            if std::mem::replace(&mut seen[site], true) {
                return Err(Error::DuplicateSite(site));
            }
            out.push(PauliFactor { site, axis });
        }
        Ok(Self {
            coefficient,
            factors: out,
            n_sites,
        })
    }

    /// Unit-coefficient string.
    pub fn unit(factors: impl IntoIterator<Item = (usize, Axis)>, n_sites: usize) -> Result<Self> {
        Self::new(ONE, factors, n_sites)
    }

    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }

    pub fn factors(&self) -> &[PauliFactor] {
        &self.factors
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn axis_at(&self, site: usize) -> Option<Axis> {
        self.factors.iter().find(|f| f.site == site).map(|f| f.axis)
    }

    /// Symbolic commutation test: two strings commute iff the number of
    /// sites where both act with different axes is even.
    pub fn commutes_with(&self, other: &Self) -> bool {
        let clashes = self
            .factors
            .iter()
            .filter(|f| other.axis_at(f.site).is_some_and(|a| a != f.axis))
            .count();
        clashes % 2 == 0
    }

    /// Dense 2ⁿ×2ⁿ matrix; site 1 is the leftmost tensor factor.
    pub fn compile(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(1);
        for site in 1..=self.n_sites {
            let local = match self.axis_at(site) {
                Some(axis) => axis.matrix(),
                None => ComplexMatrix::identity(2),
            };
            m = m.kron(&local);
        }
        m.scale(self.coefficient)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}i)", self.coefficient.re, self.coefficient.im)?;
        if self.factors.is_empty() {
            return write!(f, "·I");
        }
        for fac in &self.factors {
            write!(f, "·σ{}^{}", fac.site, fac.axis.symbol())?;
        }
        Ok(())
    }
}

/// Compiles `ps`, rechecking the duplicate-site invariant.
pub fn compile(ps: &PauliString) -> ComplexMatrix {
    ps.compile()
}

/// Shorthand: compiled unit string on four sites from `(site, axis)` pairs.
///
/// Panics on a malformed literal; intended for fixed operator tables.
pub fn pauli4(factors: &[(usize, Axis)]) -> ComplexMatrix {
    PauliString::unit(factors.iter().copied(), 4)
        .expect("literal Pauli string")
        .compile()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplin::matrix::commutator;

    #[test]
    fn empty_string_is_identity() {
        let ps = PauliString::unit([], 2).unwrap();
        assert_eq!(ps.compile(), ComplexMatrix::identity(4));
    }

    #[test]
    fn duplicate_site_rejected() {
        let err = PauliString::unit([(1, Axis::X), (2, Axis::Y), (1, Axis::Z)], 3).unwrap_err();
        assert_eq!(err, Error::DuplicateSite(1));
    }

    #[test]
    fn site_out_of_range_rejected() {
        assert!(matches!(
            PauliString::unit([(5, Axis::X)], 4),
            Err(Error::SiteOutOfRange {
                site: 5,
                n_sites: 4
            })
        ));
        assert!(PauliString::unit([(0, Axis::X)], 4).is_err());
    }

    #[test]
    fn sigma_z_on_site_one_of_four() {
        let m = pauli4(&[(1, Axis::Z)]);
        for k in 0..16 {
            let want = if k < 8 { 1.0 } else { -1.0 };
            assert_eq!(m[(k, k)], Complex64::new(want, 0.0));
        }
        assert!(
            m.distance(&ComplexMatrix::from_diagonal(
                &(0..16).map(|k| m[(k, k)]).collect::<Vec<_>>()
            )) == 0.0
        );
    }

    #[test]
    fn plaquette_string_is_an_involution() {
        let s1 = pauli4(&[(1, Axis::Z), (2, Axis::X), (3, Axis::Y)]);
        assert!((&s1 * &s1).distance(&ComplexMatrix::identity(16)) < 1e-12);
        assert!(s1.is_hermitian(1e-12));
        assert!(s1.unitarity_defect() < 1e-12);
    }

    #[test]
    fn pauli_commutator_xy() {
        let x = Axis::X.matrix();
        let y = Axis::Y.matrix();
        let want = Axis::Z.matrix().scale(Complex64::new(0.0, 2.0));
        assert!(commutator(&x, &y).unwrap().distance(&want) < 1e-15);
    }

    #[test]
    fn symbolic_and_matrix_commutation_agree_on_plaquettes() {
        let a = PauliString::unit([(1, Axis::Z), (2, Axis::X), (3, Axis::Y)], 4).unwrap();
        let b = PauliString::unit([(4, Axis::Z), (2, Axis::Y), (3, Axis::X)], 4).unwrap();
        assert!(a.commutes_with(&b));
        assert!(commutator(&a.compile(), &b.compile())
            .unwrap()
            .is_zero(1e-12));
    }
}
