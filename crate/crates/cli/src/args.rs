use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::OutputFormat;

/// Exact diagonalization and operator checks for the four-spin
/// triangular-star model.
#[derive(Debug, Parser)]
#[command(name = "tristar", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// RunConfig JSON file; flags given on the command line override it.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// x-bond coupling.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub jx: Option<f64>,
    /// y-bond coupling.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub jy: Option<f64>,
    /// z-bond coupling.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub jz: Option<f64>,
    /// Plaquette-pair coupling.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub jp: Option<f64>,
    /// Sets both the identity and the eigen-residual tolerance.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Tolerance for exact operator identities.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub identity_tol: Option<f64>,
    /// Tolerance for eigenpair residuals and spectrum agreement.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub eig_tol: Option<f64>,
    /// Tolerance for merging eigenvalues into levels.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub group_tol: Option<f64>,
    /// Output format (json or csv).
    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grouped energy levels with analytic labels.
    Spectrum,
    /// Run every invariant check and report per-check results.
    Verify(VerifyArgs),
    /// Statistical matrix of a permutation on a span of named states.
    Stats(StatsArgs),
    /// Per-configuration amplitude ratios of a permuted state.
    Phase(PhaseArgs),
    /// Majorana fermionization report.
    Jw,
    /// Reduced density matrix eigenvalues and entropies.
    Entropy(EntropyArgs),
    /// Full spectrum over a range of one coupling.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON array of catalog overrides: {"name", "re", "im", "energy"}.
    #[arg(long, value_name = "FILE")]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Comma-separated state names, e.g. g1,g3.
    #[arg(long, value_delimiter = ',', required = true)]
    pub basis: Vec<String>,
    /// Permutation: pair, (i,j), i,j or SiSj.
    #[arg(long, default_value = "pair")]
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct PhaseArgs {
    /// State name.
    #[arg(long)]
    pub state: String,
    /// Permutation: pair, (i,j), i,j or SiSj.
    #[arg(long)]
    pub perm: String,
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    /// State name.
    #[arg(long)]
    pub state: String,
    /// Comma-separated sites to keep, e.g. 2,3,4.
    #[arg(long, value_delimiter = ',', required = true)]
    pub keep: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Jx,
    Jy,
    Jz,
    Jp,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Coupling to vary.
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    /// Number of rows, endpoints included.
    #[arg(long)]
    pub steps: usize,
}
