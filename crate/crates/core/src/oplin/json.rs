//! Serialized matrix form: `{"rows": n, "cols": m, "re": [[...]], "im": [[...]]}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use crate::error::Error;

/// Significant digits kept when serializing floats.
pub const SIG_DIGITS: usize = 15;

/// Rounds to [`SIG_DIGITS`] significant digits; maps −0 to 0.
///
/// Any decimal with at most 15 significant digits round-trips through an
/// f64, so the shortest representation of the result never exceeds 15 digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{:.*e}", SIG_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        let part = |f: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..m.rows())
                .map(|i| m.row(i).iter().map(|z| round_sig(f(z))).collect())
                .collect()
        };
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            re: part(|z| z.re),
            im: part(|z| z.im),
        }
    }
}

impl From<ComplexMatrix> for MatrixJson {
    fn from(m: ComplexMatrix) -> Self {
        MatrixJson::from(&m)
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self, Error> {
        let shape_ok = j.re.len() == j.rows
            && j.im.len() == j.rows
            && j.re.iter().chain(&j.im).all(|r| r.len() == j.cols);
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "matrix JSON does not match declared {}×{} shape",
                j.rows, j.cols
            )));
        }
        let data =
            j.re.iter()
                .flatten()
                .zip(j.im.iter().flatten())
                .map(|(&re, &im)| Complex64::new(re, im))
                .collect();
        ComplexMatrix::from_vec(j.rows, j.cols, data)
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        ComplexMatrix::try_from(j).map_err(serde::de::Error::custom)
    }
}
