//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Input must satisfy ‖M − M†‖_F below this.
pub const HERMITIAN_TOL: f64 = 1e-12;

const CONVERGENCE: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k)
    }

    /// Orthogonal projector onto the eigenspace of all eigenvalues within
    /// `tol` of `energy`; `None` if no eigenvalue qualifies.
    pub fn eigenspace_projector(&self, energy: f64, tol: f64) -> Option<ComplexMatrix> {
        let n = self.dim();
        let cols: Vec<usize> = (0..n)
            .filter(|&k| (self.eigenvalues[k] - energy).abs() < tol)
            .collect();
        if cols.is_empty() {
            return None;
        }
        let mut p = ComplexMatrix::zeros(n, n);
        for &k in &cols {
            let v = self.eigenvector(k);
            for i in 0..n {
                for j in 0..n {
                    p[(i, j)] += v[i] * v[j].conj();
                }
            }
        }
        Some(p)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// Sweeps the upper triangle in row-major order; each rotation zeroes one
/// off-diagonal pair. Stops once the off-diagonal Frobenius norm falls below
/// `1e-13·‖M‖_F`.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianSpectrum> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "eigenproblem needs a square matrix".into(),
        ));
    }
    let defect = m.hermiticity_defect();
    if defect >= HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.rows();
    // symmetrize so the diagonal is exactly real
    let mut a = (m + &m.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);
    let threshold = CONVERGENCE * m.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, dst)] = v[(i, src)];
        }
    }
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Applies the unitary J that annihilates a[p,q]: A ← J†AJ, V ← VJ.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let n = a.rows();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // phase e^{-iφ} on q makes the (p,q) entry real, then a real Jacobi rotation
    let phase = (apq / mag).conj();
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // J = [[c, s], [-s·phase, c·phase]] on the (p, q) block
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = phase * (-s);
    let jqq = phase * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// Merges adjacent eigenvalues within `tol` of their predecessor into
/// `(mean energy, multiplicity)` groups. Input must be ascending.
pub fn group_levels(eigenvalues: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for &e in eigenvalues {
        match groups.last_mut() {
            Some(g) if (e - *g.last().expect("non-empty group")).abs() <= tol => g.push(e),
            _ => groups.push(vec![e]),
        }
    }
    groups
        .into_iter()
        .map(|g| (g.iter().sum::<f64>() / g.len() as f64, g.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplin::pauli::Axis;

    #[test]
    fn sigma_z_spectrum() {
        let s = hermitian_eig(&Axis::Z.matrix()).unwrap();
        assert_eq!(s.eigenvalues, vec![-1.0, 1.0]);
    }

    #[test]
    fn sigma_y_needs_complex_rotation() {
        let s = hermitian_eig(&Axis::Y.matrix()).unwrap();
        assert!((s.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-14);
        for k in 0..2 {
            let v = s.eigenvector(k);
            let mv = Axis::Y.matrix().apply(&v);
            let r: f64 = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - b * s.eigenvalues[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(r < 1e-14);
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let s = hermitian_eig(&ComplexMatrix::zeros(4, 4)).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 4]);
        assert!(s.eigenvectors.unitarity_defect() < 1e-15);
    }

    #[test]
    fn grouping_merges_near_duplicates() {
        let g = group_levels(&[-6.0000000001, -6.0, -5.9999999999, -6.0], 1e-6);
        assert_eq!(g.len(), 1);
        assert!((g[0].0 + 6.0).abs() < 1e-12);
        assert_eq!(g[0].1, 4);
    }

    #[test]
    fn grouping_keeps_separated_levels() {
        let g = group_levels(&[-1.0, 0.0, 0.0, 2.0], 1e-6);
        assert_eq!(g, vec![(-1.0, 1), (0.0, 2), (2.0, 1)]);
        assert!(group_levels(&[], 1e-6).is_empty());
    }
}
