//! Deterministic rendering: sorted JSON keys and floats rounded to a fixed
//! number of significant digits.

use serde::Serialize;
use serde_json::Value;
use tristar::oplin::round_sig;
use tristar::Complex64;

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| serde_json::Number::from_f64(round_sig(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

/// Pretty JSON with sorted keys, rounded floats and a trailing newline.
pub fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&round_value(v)).expect("values serialize");
    s.push('\n');
    s
}

/// Energies closer to zero than this are reported as exactly zero.
pub const ZERO_SNAP: f64 = 1e-12;

/// Significant digits kept for reported energies.
pub const ENERGY_SIG_DIGITS: usize = 13;

/// Strips eigensolver noise: values near zero become 0 and the rest are
/// rounded to [`ENERGY_SIG_DIGITS`] significant digits.
pub fn snap(x: f64) -> f64 {
    if x.abs() < ZERO_SNAP {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{:.*e}", ENERGY_SIG_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

/// Float for CSV cells, rounded like the JSON output.
pub fn cell(x: f64) -> String {
    format!("{}", round_sig(x))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}
