use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rrm-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rrm-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn lambda_example() {
    let o = run(&["qcd", "lambda", "--alpha", "0.1176", "--nf", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.0858 GeV\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["qcd", "lambda", "--nf", "7"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(64));
    assert_eq!(run(&[]).status.code(), Some(64));
    assert_eq!(run(&["qed", "fit", "--target", "137"]).status.code(), Some(3));
    assert_eq!(run(&["fixtures", "show", "eq99"]).status.code(), Some(2));
    assert_eq!(run(&["qcd", "lambda", "--nf", "five"]).status.code(), Some(2));
    let o = run(&["effpot", "table", "--sigma", "-1", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn fixture_lookup() {
    assert_eq!(stdout(&run(&["fixtures", "show", "eq77"])), "M_H = 138 GeV\n");
    let list = stdout(&run(&["fixtures", "list"]));
    assert_eq!(list.lines().count(), 14);
}

#[test]
fn qed_curve_csv() {
    let path = scratch("qed.csv");
    let o = run(&["qed", "run", "--qmax", "10", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q_gev,alpha,inverse_alpha"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    assert!(rows.len() > 10);
    assert!(rows.windows(2).all(|w| w[1][0] > w[0][0]));
    assert_eq!(rows.last().unwrap()[0], 10.0);
    // 12 significant digits in every cell
    let cell = text.lines().nth(1).unwrap().split(',').next().unwrap();
    assert_eq!(cell.split('e').next().unwrap().replace(['.', '-'], "").len(), 12);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["qcd", "run", "--flavor", "c", "--qmin", "2", "--format", "csv"][..],
        &["effpot", "table", "--sigma", "1", "--lambda", "0.5", "--format", "json"][..],
        &["selfenergy", "table", "--format", "csv"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn qcd_run_reports_blow_up() {
    let o = run(&["qcd", "run", "--flavor", "b", "--qmin", "0.01", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("q_gev,alpha_s\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeded 4pi"));
    let quiet = run(&["qcd", "run", "--flavor", "b", "--qmin", "0.01", "--format", "csv", "--quiet"]);
    assert!(quiet.stderr.is_empty());
}

#[test]
fn effpot_scan_header() {
    let o = run(&["effpot", "scan", "--phimax", "5", "--n", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("phi,re_v,im_v"));
    assert_eq!(text.lines().count(), 6);
    // φ = 2 is on this grid and M² vanishes there
    assert_eq!(run(&["effpot", "scan", "--phimax", "4", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn lamb_report_json_keys() {
    let o = run(&["lamb", "2s2p", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for k in ["baseline", "radiative", "vacuum_polarization", "nuclear_size", "total"] {
        assert!(v[k].is_f64(), "{k}");
    }
    let sum: f64 = ["baseline", "radiative", "vacuum_polarization", "nuclear_size"]
        .iter()
        .map(|k| v[k].as_f64().unwrap())
        .sum();
    assert_eq!(sum, v["total"].as_f64().unwrap());
    let vp0 = run(&["lamb", "2s2p", "--vp", "0", "--nuclear", "0", "--convention", "3l", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&vp0.stdout).unwrap();
    assert!((v["total"].as_f64().unwrap() * 1e-6 - 1219.0).abs() < 0.5);
}

#[test]
fn rde_prints_ten_digits() {
    let text = stdout(&run(&["lamb", "rde", "--atom", "H", "--transition", "1s2s"]));
    let mantissa = text.trim().trim_end_matches(" Hz").split('e').next().unwrap().replace('.', "");
    assert_eq!(mantissa.len(), 10);
}

#[test]
fn config_overrides_constants_and_format() {
    let cfg = scratch("run.toml");
    std::fs::write(&cfg, "format = \"json\"\n[constants]\nalpha_s_mz = 0.12\n").unwrap();
    let o = run(&["--config", cfg.to_str().unwrap(), "constants"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["alpha_s_mz"].as_f64(), Some(0.12));
    assert_eq!(v["alpha"].as_f64(), Some(1.0 / 137.035_99));
    std::fs::write(&cfg, "colour = \"red\"\n").unwrap();
    assert_eq!(run(&["--config", cfg.to_str().unwrap(), "constants"]).status.code(), Some(2));
}

#[test]
fn custom_particle_table() {
    let table = scratch("electron.toml");
    std::fs::write(&table, "[[species]]\nname = \"e\"\nmass_gev = 0.00051099895\ncharge = \"-1\"\ncolor = 1\n").unwrap();
    let o = run(&["qed", "run", "--qmax", "91.188", "--table", table.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let last = v["samples"].as_array().unwrap().last().unwrap()["inverse_alpha"].as_f64().unwrap();
    // electron loop alone: 1/α drops by about (2/3π)·ln(M_Z/m_e) ≈ 2.6
    assert!(last > 134.0 && last < 135.0, "{last}");
}
