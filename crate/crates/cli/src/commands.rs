use rayon::prelude::*;
use serde::Serialize;
use tristar::entanglement::{
    partial_trace, unnormalized_entropy_magnitude, von_neumann_entropy, LogBase,
};
use tristar::fermionization::{
    bond_identities, fermionic_plaquettes, fermionized_hamiltonian, sector_table, MajoranaSet,
};
use tristar::model::{
    analytic_levels, basis_label, build_hamiltonian, double_spin_label, numeric_levels,
    numeric_spectrum, sorted_distance, Catalog,
};
use tristar::statistics::{classify, fit_statistics, phase_map, Permutation};
use tristar::{ComplexMatrix, Couplings, Error, FourSpinState};

use crate::args::{EntropyArgs, PhaseArgs, StatsArgs, SweepArgs, SweepParam};
use crate::config::{OutputFormat, RunConfig};
use crate::render::{cell, json, snap, ComplexJson};
use crate::{CliError, Report, EXIT_FAILURE, EXIT_OK};

fn lookup(name: &str) -> Result<FourSpinState, CliError> {
    Catalog::standard()
        .get(name)
        .map(|e| e.state.clone())
        .map_err(|_| {
            CliError::Usage(format!(
                "unknown state `{name}`; known: {}",
                Catalog::standard().names().join(", ")
            ))
        })
}

fn parse_perm(s: &str) -> Result<Permutation, CliError> {
    s.parse()
        .map_err(|e: Error| CliError::Usage(format!("bad permutation `{s}`: {e}")))
}

fn json_only(config: &RunConfig, command: &str) -> Result<(), CliError> {
    match config.format_or(OutputFormat::Json) {
        OutputFormat::Json => Ok(()),
        OutputFormat::Csv => Err(CliError::Usage(format!(
            "`{command}` only supports json output"
        ))),
    }
}

#[derive(Serialize)]
struct LevelRow {
    energy: f64,
    multiplicity: usize,
    label: String,
}

#[derive(Serialize)]
struct SpectrumReport {
    couplings: Couplings,
    /// Energies are divided by this (Jx, or 1 when Jx = 0).
    energy_unit: f64,
    levels: Vec<LevelRow>,
    analytic_distance: f64,
    agree: bool,
}

pub fn spectrum(config: &RunConfig) -> Result<Report, CliError> {
    let c = config.couplings;
    let tol = config.tolerances;
    let unit = c.energy_unit();
    let levels: Vec<LevelRow> = numeric_levels(&c, tol.grouping)
        .entries
        .into_iter()
        .map(|l| LevelRow {
            energy: snap(l.energy / unit),
            multiplicity: l.multiplicity,
            label: l.label,
        })
        .collect();
    let distance = sorted_distance(&analytic_levels(&c).expanded(), &numeric_spectrum(&c));
    let agree = distance < tol.eigen;
    let body = match config.format_or(OutputFormat::Json) {
        OutputFormat::Json => json(&SpectrumReport {
            couplings: c,
            energy_unit: unit,
            levels,
            analytic_distance: distance,
            agree,
        }),
        OutputFormat::Csv => {
            let mut s = String::from("energy,multiplicity,label\n");
            for l in &levels {
                s.push_str(&format!(
                    "{},{},{}\n",
                    cell(l.energy),
                    l.multiplicity,
                    l.label.replace(',', ";")
                ));
            }
            s
        }
    };
    Ok(Report::new(
        body,
        if agree { EXIT_OK } else { EXIT_FAILURE },
    ))
}

#[derive(Serialize)]
struct StatsReport {
    basis: Vec<String>,
    perm: String,
    eta: ComplexMatrix,
    class: Option<String>,
    closed: bool,
    residual: f64,
    unitarity_defect: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'static str>,
}

pub fn stats(config: &RunConfig, args: &StatsArgs) -> Result<Report, CliError> {
    json_only(config, "stats")?;
    let basis = args
        .basis
        .iter()
        .map(|n| lookup(n))
        .collect::<Result<Vec<_>, _>>()?;
    let p = parse_perm(&args.perm)?;
    let fit = fit_statistics(&basis, &p)?;
    let closed = fit.closed();
    let (class, error) = if closed {
        match classify(&fit.eta) {
            Ok(c) => (Some(c.to_string()), None),
            Err(e) => (None, Some(e.name())),
        }
    } else {
        (None, Some(Error::NotClosed(fit.max_residual()).name()))
    };
    let report = StatsReport {
        basis: args.basis.clone(),
        perm: p.to_string(),
        eta: fit.eta.clone(),
        class,
        closed,
        residual: fit.max_residual(),
        unitarity_defect: fit.unitarity_defect,
        error,
    };
    Ok(Report::new(
        json(&report),
        if error.is_none() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        },
    ))
}

#[derive(Serialize)]
struct PhaseRow {
    index: usize,
    config: String,
    spins: String,
    ratio: ComplexJson,
}

#[derive(Serialize)]
struct PhaseReport {
    state: String,
    perm: String,
    ratios: Vec<PhaseRow>,
}

pub fn phase(config: &RunConfig, args: &PhaseArgs) -> Result<Report, CliError> {
    json_only(config, "phase")?;
    let state = lookup(&args.state)?;
    let p = parse_perm(&args.perm)?;
    let map = phase_map(&state, &p)?;
    let ratios = map
        .entries
        .iter()
        .map(|(&k, &r)| PhaseRow {
            index: k,
            config: double_spin_label(k),
            spins: basis_label(k),
            ratio: r.into(),
        })
        .collect();
    let report = PhaseReport {
        state: args.state.clone(),
        perm: p.to_string(),
        ratios,
    };
    Ok(Report::new(json(&report), EXIT_OK))
}

#[derive(Serialize)]
struct SectorJson {
    sector: [i8; 3],
    homogeneous: bool,
    energies: [f64; 4],
    in_spectrum: bool,
    exact: Vec<f64>,
}

#[derive(Serialize)]
struct JwReport {
    couplings: Couplings,
    clifford_ok: bool,
    clifford_defect: f64,
    h_distance: f64,
    /// Bond relations in their commonly stated form.
    bond_ok: bool,
    /// Bond relations that hold for this model.
    bond_exact_ok: bool,
    bonds: tristar::fermionization::BondReport,
    plaquette_scalars: Vec<f64>,
    sector_table: Vec<SectorJson>,
    spectrum_covered: bool,
    exact_sectors_match: bool,
}

pub fn jw(config: &RunConfig) -> Result<Report, CliError> {
    json_only(config, "jw")?;
    let c = config.couplings;
    let tol = config.tolerances;
    let clifford = MajoranaSet::standard().clifford_defect();
    let bonds = bond_identities(&c);
    let plaquettes = fermionic_plaquettes()?;
    let table = sector_table(&c);
    let report = JwReport {
        couplings: c,
        clifford_ok: clifford < tol.identity,
        clifford_defect: clifford,
        h_distance: fermionized_hamiltonian(&c).distance(&build_hamiltonian(&c)),
        bond_ok: bonds.claimed_hold(tol.identity),
        bond_exact_ok: bonds.exact_hold(tol.identity),
        bonds,
        plaquette_scalars: plaquettes.scalars.iter().map(|z| z.re).collect(),
        sector_table: table
            .rows
            .iter()
            .map(|r| SectorJson {
                sector: r.sector,
                homogeneous: r.homogeneous,
                energies: r.energies.map(snap),
                in_spectrum: r.in_spectrum,
                exact: r.exact.iter().copied().map(snap).collect(),
            })
            .collect(),
        spectrum_covered: table.spectrum_covered,
        exact_sectors_match: table.exact_union_matches,
    };
    Ok(Report::new(json(&report), EXIT_OK))
}

#[derive(Serialize)]
struct EntropyReport {
    state: String,
    keep: Vec<usize>,
    eigenvalues: Vec<f64>,
    entropy_nats: f64,
    entropy_bits: f64,
    unnormalized_magnitude: f64,
}

pub fn entropy(config: &RunConfig, args: &EntropyArgs) -> Result<Report, CliError> {
    json_only(config, "entropy")?;
    let state = lookup(&args.state)?;
    let rho = partial_trace(&state, &args.keep).map_err(|e| match e {
        Error::BadSubsystem(_) => {
            CliError::Usage(format!("{e}: keep one to three distinct sites in 1..=4"))
        }
        other => other.into(),
    })?;
    let report = EntropyReport {
        state: args.state.clone(),
        keep: rho.subsystem().to_vec(),
        eigenvalues: rho.eigenvalues(),
        entropy_nats: von_neumann_entropy(&rho, LogBase::E),
        entropy_bits: von_neumann_entropy(&rho, LogBase::Two),
        unnormalized_magnitude: unnormalized_entropy_magnitude(&rho),
    };
    Ok(Report::new(json(&report), EXIT_OK))
}

/// Parameter values from `from` to `to` inclusive, `steps` of them.
pub fn sweep_values(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, String> {
    if !(from.is_finite() && to.is_finite()) {
        return Err("sweep bounds must be finite".into());
    }
    match steps {
        0 => Err("--steps must be at least 1".into()),
        1 if from != to => Err("a single step needs --from equal to --to".into()),
        1 => Ok(vec![from]),
        n => Ok((0..n)
            .map(|i| {
                if i + 1 == n {
                    to
                } else {
                    from + (to - from) * i as f64 / (n - 1) as f64
                }
            })
            .collect()),
    }
}

fn with_param(base: Couplings, param: SweepParam, v: f64) -> Couplings {
    let mut c = base;
    match param {
        SweepParam::Jx => c.jx = v,
        SweepParam::Jy => c.jy = v,
        SweepParam::Jz => c.jz = v,
        SweepParam::Jp => c.jp = v,
    }
    c
}

#[derive(Serialize)]
struct SweepRow {
    param: f64,
    energies: Vec<f64>,
}

#[derive(Serialize)]
struct SweepReport {
    param: String,
    base: Couplings,
    rows: Vec<SweepRow>,
}

pub fn sweep(config: &RunConfig, args: &SweepArgs) -> Result<Report, CliError> {
    let values = sweep_values(args.from, args.to, args.steps).map_err(CliError::Usage)?;
    let base = config.couplings;
    // collect() on an indexed parallel iterator preserves input order
    let rows: Vec<SweepRow> = values
        .par_iter()
        .map(|&v| SweepRow {
            param: v,
            energies: numeric_spectrum(&with_param(base, args.param, v))
                .into_iter()
                .map(snap)
                .collect(),
        })
        .collect();
    let name = format!("{:?}", args.param).to_lowercase();
    let body = match config.format_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let header: Vec<String> = (1..=16).map(|i| format!("e{i}")).collect();
            let mut s = format!("param,{}\n", header.join(","));
            for r in &rows {
                let cells: Vec<String> = r.energies.iter().map(|&e| cell(e)).collect();
                s.push_str(&format!("{},{}\n", cell(r.param), cells.join(",")));
            }
            s
        }
        OutputFormat::Json => json(&SweepReport {
            param: name,
            base,
            rows,
        }),
    };
    Ok(Report::new(body, EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_grid() {
        assert_eq!(
            sweep_values(0.0, 4.0, 5).unwrap(),
            vec![0.0, 1.0, 2.0, 3.0, 4.0]
        );
        assert_eq!(sweep_values(0.0, 0.0, 1).unwrap(), vec![0.0]);
        assert_eq!(sweep_values(1.0, -1.0, 3).unwrap(), vec![1.0, 0.0, -1.0]);
        assert_eq!(*sweep_values(0.0, 0.3, 100).unwrap().last().unwrap(), 0.3);
        assert!(sweep_values(0.0, 1.0, 0).is_err());
        assert!(sweep_values(0.0, 1.0, 1).is_err());
        assert!(sweep_values(f64::NAN, 1.0, 3).is_err());
    }

    #[test]
    fn param_substitution() {
        let c = with_param(Couplings::reference(1.0), SweepParam::Jp, 0.5);
        assert_eq!(c, Couplings::new(1.0, 2.0, 2.0, 0.5));
    }
}
