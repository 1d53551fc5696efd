use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tristar_cli::{run, Outcome};

fn tristar(args: &[&str]) -> Outcome {
    run(std::iter::once("tristar").chain(args.iter().copied()))
}

fn json_of(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn levels(v: &Value) -> Vec<(f64, u64)> {
    v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| {
            (
                l["energy"].as_f64().unwrap(),
                l["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect()
}

#[test]
fn spectrum_at_reference_couplings() {
    let out = tristar(&[
        "spectrum", "--jx", "1", "--jy", "2", "--jz", "2", "--jp", "2",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(
        levels(&json_of(&out)),
        vec![(-6.0, 4), (-4.0, 2), (0.0, 4), (2.0, 4), (12.0, 2)]
    );
}

#[test]
fn spectrum_at_zero_couplings() {
    let out = tristar(&[
        "spectrum", "--jx", "0", "--jy", "0", "--jz", "0", "--jp", "0",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(levels(&json_of(&out)), vec![(0.0, 16)]);
}

#[test]
fn spectrum_isotropic_without_plaquette_term() {
    let out = tristar(&[
        "spectrum", "--jx", "1", "--jy", "1", "--jz", "1", "--jp", "0",
    ]);
    let got = levels(&json_of(&out));
    let r = 2.0 * 3f64.sqrt();
    let want = [(-r, 2), (-2.0, 6), (2.0, 6), (r, 2)];
    assert_eq!(got.len(), 4);
    for ((e, m), (we, wm)) in got.iter().zip(want) {
        assert!((e - we).abs() < 1e-12);
        assert_eq!(*m, wm);
    }
}

#[test]
fn spectrum_csv_and_energy_units() {
    let out = tristar(&[
        "spectrum", "--jx", "2", "--jy", "4", "--jz", "4", "--jp", "4", "--format", "csv",
    ]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "energy,multiplicity,label");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("-6,4,"));
    assert!(lines[5].starts_with("12,2,"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["verify"][..],
        &["jw"],
        &["stats", "--basis", "g1,g2,g3,g4"],
        &["spectrum", "--jp", "0.3"],
    ] {
        assert_eq!(tristar(args), tristar(args));
    }
}

#[test]
fn json_keys_are_sorted() {
    let out = tristar(&["entropy", "--state", "S+B", "--keep", "2,3,4"]);
    let keys: Vec<usize> = [
        "eigenvalues",
        "entropy_bits",
        "entropy_nats",
        "keep",
        "state",
        "unnormalized_magnitude",
    ]
    .iter()
    .map(|k| out.stdout.find(&format!("\"{k}\"")).unwrap())
    .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_passes_by_default() {
    let out = tristar(&["verify"]);
    let v = json_of(&out);
    assert_eq!(out.code, 0, "{}", v["failed"]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 30);
    let claims = v["refuted_claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["holds"] == false));
}

#[test]
fn verify_at_other_couplings() {
    let out = tristar(&[
        "verify", "--jx", "-1.5", "--jy", "0.3", "--jz", "2.2", "--jp", "0.7",
    ]);
    assert_eq!(out.code, 0, "{}", json_of(&out)["failed"]);
}

#[test]
fn verify_rejects_impossible_tolerance() {
    let out = tristar(&["verify", "--tol", "1e-30"]);
    assert_eq!(out.code, 2);
    assert_eq!(json_of(&out)["passed"], false);
}

#[test]
fn verify_names_corrupted_catalog_state() {
    let out = tristar(&["verify", "--catalog", &fixture("corrupted_catalog.json")]);
    assert_eq!(out.code, 2);
    let failed = json_of(&out)["failed"].clone();
    assert!(
        failed.as_array().unwrap().iter().any(|f| f == "catalog:e9"),
        "{failed}"
    );
}

#[test]
fn verify_accepts_faithful_override() {
    let out = tristar(&["verify", "--catalog", &fixture("faithful_catalog.json")]);
    assert_eq!(out.code, 0);
}

#[test]
fn stats_ground_pairs() {
    let out = tristar(&["stats", "--basis", "g1,g3", "--perm", "pair"]);
    assert_eq!(out.code, 0);
    let v = json_of(&out);
    assert_eq!(v["eta"]["re"], serde_json::json!([[0.0, 1.0], [1.0, 0.0]]));
    assert_eq!(v["class"], "exotic");
    assert_eq!(v["closed"], true);

    let v = json_of(&tristar(&["stats", "--basis", "g2,g4"]));
    assert_eq!(v["eta"]["re"], serde_json::json!([[-1.0, 0.0], [0.0, 1.0]]));
}

#[test]
fn stats_classes() {
    let v = json_of(&tristar(&["stats", "--basis", "e9,e10"]));
    assert_eq!(v["class"], "fermion");
    let v = json_of(&tristar(&["stats", "--basis", "o1,o2,o3,o4"]));
    assert_eq!(v["class"], "boson");
}

#[test]
fn stats_reports_open_span() {
    let out = tristar(&["stats", "--basis", "e9", "--perm", "S1S2"]);
    assert_eq!(out.code, 2);
    let v = json_of(&out);
    assert_eq!(v["closed"], false);
    assert_eq!(v["error"], "NotClosed");
    assert!(v["residual"].as_f64().unwrap() > 0.1);
}

#[test]
fn stats_dependent_basis_is_a_module_error() {
    let out = tristar(&["stats", "--basis", "g1,g1"]);
    assert_eq!(out.code, 2);
    assert_eq!(json_of(&out)["error"], "LinearlyDependent");
}

#[test]
fn phase_table_for_symmetric_ground_state() {
    let out = tristar(&["phase", "--state", "S+B", "--perm", "s1s2"]);
    assert_eq!(out.code, 0);
    let v = json_of(&out);
    let ratios = v["ratios"].as_array().unwrap();
    assert!(!ratios.is_empty());
    for r in ratios {
        assert_eq!(r["ratio"]["re"], 0.0);
        assert_eq!(r["ratio"]["im"].as_f64().unwrap().abs(), 1.0);
    }
}

#[test]
fn phase_support_mismatch_exits_2() {
    let out = tristar(&["phase", "--state", "e9", "--perm", "S1S2"]);
    assert_eq!(out.code, 2);
    assert_eq!(json_of(&out)["error"], "SupportMismatch");
}

#[test]
fn jw_report() {
    let out = tristar(&["jw"]);
    assert_eq!(out.code, 0);
    let v = json_of(&out);
    assert_eq!(v["clifford_ok"], true);
    assert!(v["h_distance"].as_f64().unwrap() < 1e-12);
    assert_eq!(
        v["plaquette_scalars"],
        serde_json::json!([-1.0, 1.0, 1.0, 1.0])
    );
    let rows = v["sector_table"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["sector"], serde_json::json!([1, 1, 1]));
    assert_eq!(rows[0]["in_spectrum"], true);
    assert_eq!(v["exact_sectors_match"], true);
}

#[test]
fn entropy_of_symmetric_ground_state() {
    let out = tristar(&["entropy", "--state", "S+B", "--keep", "2,3,4"]);
    assert_eq!(out.code, 0);
    let v = json_of(&out);
    assert!((v["entropy_nats"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    assert!((v["entropy_bits"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["unnormalized_magnitude"].as_f64().unwrap() - 0.980258).abs() < 1e-5);
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 8);
}

#[test]
fn sweep_rows_and_order() {
    let out = tristar(&[
        "sweep", "--param", "jp", "--from", "0", "--to", "4", "--steps", "100",
    ]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 101);
    let header: Vec<&str> = lines[0].split(',').collect();
    assert_eq!(header.len(), 17);
    assert_eq!(header[0], "param");
    assert_eq!(header[16], "e16");
    let mut last_param = f64::NEG_INFINITY;
    for line in &lines[1..] {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cells[0] > last_param);
        last_param = cells[0];
        assert!(cells[1..].windows(2).all(|w| w[0] <= w[1]));
    }
    assert_eq!(last_param, 4.0);
}

#[test]
fn degenerate_sweep_matches_spectrum() {
    let out = tristar(&[
        "sweep", "--param", "jp", "--from", "0", "--to", "0", "--steps", "1",
    ]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    let row: Vec<f64> = lines[1].split(',').map(|c| c.parse().unwrap()).collect();
    let spec = json_of(&tristar(&["spectrum", "--jp", "0"]));
    let expanded: Vec<f64> = levels(&spec)
        .iter()
        .flat_map(|&(e, m)| std::iter::repeat_n(e, m as usize))
        .collect();
    assert_eq!(row[0], 0.0);
    for (a, b) in row[1..].iter().zip(&expanded) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn sweep_json_format() {
    let out = tristar(&[
        "sweep", "--param", "jx", "--from", "-1", "--to", "1", "--steps", "3", "--format", "json",
    ]);
    let v = json_of(&out);
    assert_eq!(v["param"], "jx");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["stats", "--basis", "nope"][..],
        &["phase", "--state", "S+B", "--perm", "S1S1"],
        &["phase", "--state", "S+B", "--perm", "sideways"],
        &["entropy", "--state", "GHZ", "--keep", "1,2,3,4"],
        &["entropy", "--state", "GHZ", "--keep", "0"],
        &[
            "sweep", "--param", "jp", "--from", "0", "--to", "1", "--steps", "0",
        ],
        &[
            "sweep", "--param", "jq", "--from", "0", "--to", "1", "--steps", "3",
        ],
        &["spectrum", "--format", "xml"],
        &["spectrum", "--tol", "-1"],
        &["spectrum", "--jx", "nan"],
        &["jw", "--format", "csv"],
        &["bogus"],
        &[],
    ] {
        let out = tristar(args);
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    let out = tristar(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("spectrum"));
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        r#"{"couplings": {"jx": 1, "jy": 1, "jz": 1, "jp": 0}, "output_format": "csv"}"#,
    )
    .unwrap();
    let out = tristar(&["spectrum", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("energy,multiplicity,label\n"));
    assert_eq!(out.stdout.lines().count(), 5);

    let out = tristar(&[
        "spectrum",
        "--config",
        cfg.to_str().unwrap(),
        "--jp",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(json_of(&out)["couplings"]["jp"], 2.0);

    std::fs::write(&cfg, r#"{"tolerances": {"eigen": -1}}"#).unwrap();
    assert_eq!(
        tristar(&["spectrum", "--config", cfg.to_str().unwrap()]).code,
        1
    );
    assert_eq!(
        tristar(&["spectrum", "--config", "/nonexistent/run.json"]).code,
        1
    );
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    let out = tristar(&[
        "spectrum",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("energy,multiplicity,label\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tristar");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["spectrum"]), Some(0));
    assert_eq!(code(&["verify", "--tol", "1e-30"]), Some(2));
    assert_eq!(
        code(&["entropy", "--state", "nope", "--keep", "1"]),
        Some(1)
    );
    assert_eq!(code(&["--version"]), Some(0));
}
