use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tristar::oplin::{EIGEN_TOL, GROUPING_TOL, IDENTITY_TOL};
use tristar::Couplings;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
        })
    }
}

/// Thresholds for exact identities, eigenpair residuals and level grouping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub identity: f64,
    pub eigen: f64,
    pub grouping: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            identity: IDENTITY_TOL,
            eigen: EIGEN_TOL,
            grouping: GROUPING_TOL,
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub couplings: Couplings,
    pub tolerances: Tolerances,
    /// `None` selects the subcommand's natural format.
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    /// Rejects non-finite couplings and non-positive tolerances.
    pub fn validate(&self) -> Result<(), String> {
        if !self.couplings.is_finite() {
            return Err("couplings must be finite".into());
        }
        let t = &self.tolerances;
        for (name, v) in [
            ("identity", t.identity),
            ("eigen", t.eigen),
            ("grouping", t.grouping),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("{name} tolerance must be positive, got {v}"));
            }
        }
        Ok(())
    }

    pub fn format_or(&self, fallback: OutputFormat) -> OutputFormat {
        self.output_format.unwrap_or(fallback)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_config_fills_defaults() {
        let c: RunConfig =
            serde_json::from_str(r#"{"couplings": {"jx": 2, "jy": 4, "jz": 4, "jp": 4}}"#).unwrap();
        assert_eq!(c.couplings, Couplings::reference(2.0));
        assert_eq!(c.tolerances, Tolerances::default());
        assert_eq!(c.output_format, None);
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<RunConfig>(r#"{"colour": 1}"#).is_err());
        assert!(serde_json::from_str::<RunConfig>(r#"{"output_format": "xml"}"#).is_err());
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.tolerances.eigen = 0.0;
        assert!(c.validate().is_err());
        c = RunConfig::default();
        c.couplings.jp = f64::NAN;
        assert!(c.validate().is_err());
    }
}
