//! Command-line front end for the `tristar` toolkit.
//!
//! [`run`] parses arguments and executes one subcommand, returning the
//! report text and exit code without touching the process. Exit codes:
//! 0 success, 1 usage error, 2 verification or validation failure.

pub mod args;
pub mod commands;
pub mod config;
pub mod render;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;
use tristar::model::{Catalog, CatalogEntry, OverrideJson};

use args::{Cli, Command, GlobalArgs, VerifyArgs};
use config::{OutputFormat, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

/// Report text and the exit code it carries.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    pub code: i32,
}

impl Report {
    pub fn new(body: String, code: i32) -> Self {
        Self { body, code }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Module(tristar::Error),
}

impl From<tristar::Error> for CliError {
    fn from(e: tristar::Error) -> Self {
        Self::Module(e)
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorReport {
    error: &'static str,
    message: String,
}

fn build_config(g: &GlobalArgs) -> Result<RunConfig, String> {
    let mut c = match &g.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    let k = &mut c.couplings;
    for (slot, flag) in [
        (&mut k.jx, g.jx),
        (&mut k.jy, g.jy),
        (&mut k.jz, g.jz),
        (&mut k.jp, g.jp),
    ] {
        if let Some(v) = flag {
            *slot = v;
        }
    }
    let t = &mut c.tolerances;
    if let Some(v) = g.tol {
        t.identity = v;
        t.eigen = v;
    }
    for (slot, flag) in [
        (&mut t.identity, g.identity_tol),
        (&mut t.eigen, g.eig_tol),
        (&mut t.grouping, g.group_tol),
    ] {
        if let Some(v) = flag {
            *slot = v;
        }
    }
    if g.format.is_some() {
        c.output_format = g.format;
    }
    if g.output.is_some() {
        c.output_path = g.output.clone();
    }
    c.validate()?;
    Ok(c)
}

fn load_catalog(args: &VerifyArgs) -> Result<Catalog, CliError> {
    let Some(path) = &args.catalog else {
        return Ok(Catalog::standard().clone());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let overrides: Vec<OverrideJson> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid catalog file {}: {e}", path.display())))?;
    let entries = overrides
        .into_iter()
        .map(CatalogEntry::try_from)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Catalog::standard().with_overrides(entries))
}

fn verify(config: &RunConfig, args: &VerifyArgs) -> Result<Report, CliError> {
    if config.format_or(OutputFormat::Json) != OutputFormat::Json {
        return Err(CliError::Usage("`verify` only supports json output".into()));
    }
    let catalog = load_catalog(args)?;
    let report = verify::run(&config.couplings, &config.tolerances, &catalog);
    let code = if report.passed { EXIT_OK } else { EXIT_FAILURE };
    Ok(Report::new(render::json(&report), code))
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<Report, CliError> {
    match command {
        Command::Spectrum => commands::spectrum(config),
        Command::Verify(a) => verify(config, a),
        Command::Stats(a) => commands::stats(config, a),
        Command::Phase(a) => commands::phase(config, a),
        Command::Jw => commands::jw(config),
        Command::Entropy(a) => commands::entropy(config, a),
        Command::Sweep(a) => commands::sweep(config, a),
    }
}

fn usage(message: String) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

/// Parses `args` (program name first) and runs the selected subcommand.
/// When an output path is configured the report is written there and
/// stdout stays empty.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = match build_config(&cli.global) {
        Ok(c) => c,
        Err(msg) => return usage(msg),
    };
    let report = match dispatch(&cli.command, &config) {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => return usage(msg),
        Err(CliError::Module(e)) => Report::new(
            render::json(&ErrorReport {
                error: e.name(),
                message: e.to_string(),
            }),
            EXIT_FAILURE,
        ),
    };
    match &config.output_path {
        None => Outcome {
            code: report.code,
            stdout: report.body,
            stderr: String::new(),
        },
        Some(path) => match std::fs::write(path, &report.body) {
            Ok(()) => Outcome {
                code: report.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
    }
}
