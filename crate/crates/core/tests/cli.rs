//! Exercises the `qme` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn qme(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qme"))
        .args(args)
        .output()
        .expect("spawn qme")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn data_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

fn column(csv: &str, name: &str) -> usize {
    let header = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    header.split(',').position(|c| c == name).unwrap()
}

#[test]
fn bad_values_exit_with_config_error() {
    for args in [
        &["cycle", "--T=-1"][..],
        &["cycle", "--q-grid", "0.2:0.8"],
        &["region", "--theta-grid", "0:1:0"],
        &["fig2", "--eps", "0"],
        &["decomposition", "--N-list", "13"],
        &["scaling", "--N-list", "0"],
    ] {
        let out = qme(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("config error"));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    std::fs::write(&path, "T = 0.1\nbogus = 1\n").unwrap();
    let out = qme(&["cycle", "--config", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn missing_config_file_is_a_config_error() {
    let out = qme(&["cycle", "--config", "/nonexistent/qme.cfg"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn residual_over_tolerance_exits_three() {
    let out = qme(&["decomposition", "--N-list", "1,2,3", "--tol", "1e-30"]);
    assert_eq!(code(&out), 3);
    let ok = qme(&["decomposition", "--N-list", "1,2,3"]);
    assert_eq!(code(&ok), 0);
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# engine at a warm bath\nT = 0.5\nq_grid = 0.3\n").unwrap();
    let from_file = String::from_utf8(qme(&["cycle", "--config", cfg.to_str().unwrap()]).stdout).unwrap();
    assert!(from_file.contains("# T = 0.5\n"));

    let out_path = dir.path().join("cycle.csv");
    let out = qme(&[
        "cycle",
        "--config",
        cfg.to_str().unwrap(),
        "--T",
        "0.2",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    assert!(csv.contains("# T = 0.2\n"));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 1);
    assert!((rows[0][column(&csv, "q")] - 0.3).abs() < 1e-15);
    let (s, w_er) = (rows[0][column(&csv, "S_f")], rows[0][column(&csv, "W_er")]);
    assert!((w_er - 0.2 * s).abs() < 1e-14);
}

fn assert_well_formed(csv: &str, path: &Path) {
    assert!(!csv.contains('\r'), "{}", path.display());
    assert!(csv.ends_with('\n'));
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# qme "));
    let body: Vec<&str> = lines.skip_while(|l| l.starts_with('#')).collect();
    let width = body[0].split(',').count();
    for row in &body[1..] {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), width);
        for cell in cells {
            if cell == "nan" || cell.chars().all(|c| c.is_ascii_alphabetic() || c == '-') {
                continue;
            }
            if cell.contains('e') {
                let mantissa = cell.trim_start_matches('-').split('e').next().unwrap();
                assert_eq!(mantissa.replace('.', "").len(), 15, "{cell}");
            } else {
                cell.parse::<u64>().unwrap();
            }
        }
    }
}

#[test]
fn every_command_writes_well_formed_csv() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 6] = [
        &["cycle"],
        &["region", "--q-grid", "0.1:0.9:5", "--theta-grid", "0:1.5:4"],
        &["fig2", "--de-grid", "0.05:0.5:4"],
        &["scaling", "--N-list", "10,100"],
        &["ghz-scaling", "--N-list", "2,20"],
        &["decomposition", "--N-list", "1,2,3"],
    ];
    for args in runs {
        let path = dir.path().join(format!("{}.csv", args[0]));
        let mut full = args.to_vec();
        full.extend(["--out", path.to_str().unwrap()]);
        let out = qme(&full);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_well_formed(&std::fs::read_to_string(&path).unwrap(), &path);
    }
}

#[test]
fn region_reports_engines_only_where_work_is_positive() {
    let csv = String::from_utf8(qme(&["region", "--q-grid", "0.05:0.95:7", "--theta-grid", "0:1.5:7"]).stdout).unwrap();
    let w = column(&csv, "W_1");
    assert!(data_rows(&csv).iter().any(|r| r[w] > 0.0));
    let hot = String::from_utf8(qme(&["region", "--T", "100", "--q-grid", "0.05:0.95:3"]).stdout).unwrap();
    assert!(hot.contains("engine region: empty"));
}
