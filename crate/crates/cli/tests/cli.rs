use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fermiwire"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// Same header, same row count, identical text fields, numbers within 1e-12.
fn assert_csv_matches(actual: &str, expected: &str) {
    assert!(!actual.contains('\r'));
    let (a, e): (Vec<&str>, Vec<&str>) = (actual.lines().collect(), expected.lines().collect());
    assert_eq!(a.first(), e.first(), "header");
    assert_eq!(a.len(), e.len(), "row count");
    for (ra, re) in a.iter().zip(&e).skip(1) {
        let (fa, fe): (Vec<&str>, Vec<&str>) = (ra.split(',').collect(), re.split(',').collect());
        assert_eq!(fa.len(), fe.len());
        for (x, y) in fa.iter().zip(&fe) {
            match (x.parse::<f64>(), y.parse::<f64>()) {
                (Ok(u), Ok(v)) if u.is_finite() && v.is_finite() => {
                    assert!((u - v).abs() <= 1e-12 * v.abs().max(1e-300), "{x} vs {y}");
                }
                _ => assert_eq!(x, y),
            }
        }
    }
}

fn temp_path(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

#[test]
fn verify_passes() {
    let out = run(&["verify"]);
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("eps_m_equals_eps_F:") && l.contains(" PASS ")));
    let ratio = text
        .lines()
        .find(|l| l.starts_with("closure_ratio_vs_3_5:"))
        .unwrap();
    assert!(ratio.contains(" INFO ") && ratio.contains("0.78985"));
    assert!(!text.contains(" FAIL "));
}

#[test]
fn verify_rejects_corrupt_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = temp_path(&dir, "bad.json");
    std::fs::write(&cfg, "{\"thresholds\": {\"z_degenerate\": ").unwrap();
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn scan_reference_point_golden() {
    let args = ["scan", "--degeneracy", "1", "--z", "1", "--sigma", "1e-6"];
    let csv = stdout(&run(&args));
    assert_csv_matches(&csv, &golden("scan_reference.csv"));
    assert!(csv.lines().nth(1).unwrap().contains(",Bosonized,"));

    let json = stdout(&run(&[&args[..], &["--format", "json"]].concat()));
    let (a, e): (serde_json::Value, serde_json::Value) = (
        serde_json::from_str(&json).unwrap(),
        serde_json::from_str(&golden("scan_reference.json")).unwrap(),
    );
    assert_eq!(a["columns"], e["columns"]);
    assert_eq!(a["rows"][0]["regime"], "Bosonized");
    assert_eq!(a["rows"][0].as_object().unwrap().len(), 12);
}

#[test]
fn scan_records_failures_in_row() {
    let args = [
        "scan",
        "--degeneracy",
        "1e-3:3:3:log",
        "--nu",
        "1",
        "--sigma",
        "1e-3",
        "--stat",
        "be",
    ];
    let csv = stdout(&run(&args));
    assert_csv_matches(&csv, &golden("scan_be.csv"));
    let last = csv.lines().last().unwrap();
    assert!(last.contains(",ERROR,Bose condensation"));
}

#[test]
fn scan_fails_when_every_point_fails() {
    let out = run(&["scan", "--degeneracy", "3:4:2", "--stat", "be"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 3);
}

#[test]
fn scan_rejects_empty_axis() {
    for axis in ["1:2:0", "2:1:3", "0:1:3:log"] {
        let out = run(&["scan", "--T", axis]);
        assert_eq!(out.status.code(), Some(2), "{axis}");
    }
    let out = run(&["scan", "--T", "1", "--degeneracy", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = temp_path(&dir, "scan.json");
    std::fs::write(
        &cfg,
        r#"{"temperature": {"min": 0.05, "max": 500, "points": 7, "spacing": "log"},
            "specific_volume": "0.1:10:3:log",
            "sigma_tilde": {"min": 1e-6, "max": 1, "points": 4, "spacing": "log"},
            "statistics": "fd"}"#,
    )
    .unwrap();
    let mut outputs = Vec::new();
    for (i, threads) in ["1", "2", "1"].iter().enumerate() {
        let path = temp_path(&dir, &format!("out{i}.csv"));
        let status = bin()
            .env("FERMIWIRE_THREADS", threads)
            .args([
                "scan",
                "--config",
                cfg.to_str().unwrap(),
                "--out",
                path.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
    let text = String::from_utf8(outputs[0].clone()).unwrap();
    assert_eq!(text.lines().count(), 1 + 7 * 3 * 4);
    // Lexicographic order: temperature slowest, σ̃ fastest.
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(3).map(|v| v.parse().unwrap()).collect())
        .collect();
    assert!(rows.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = temp_path(&dir, "scan.json");
    let from_config = temp_path(&dir, "config.csv");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"degeneracy": 1, "fugacity": 1, "sigma_tilde": 1e-6, "output": {{"path": {:?}, "format": "csv"}}}}"#,
            from_config.to_str().unwrap()
        ),
    )
    .unwrap();
    assert!(run(&["scan", "--config", cfg.to_str().unwrap()])
        .status
        .success());
    assert_csv_matches(
        &std::fs::read_to_string(&from_config).unwrap(),
        &golden("scan_reference.csv"),
    );

    let flagged = temp_path(&dir, "flags.json");
    let out = run(&[
        "scan",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        flagged.to_str().unwrap(),
        "--format",
        "json",
        "--sigma",
        "1e-2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&flagged).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["sigma_tilde"], 1e-2);
    assert_eq!(v["rows"][0]["degeneracy"], 1.0);
}

#[test]
fn corrupt_config_leaves_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = temp_path(&dir, "never.csv");
    for body in [
        "not json",
        r#"{"temprature": 1}"#,
        r#"{"temperature": {"min": 1, "max": 2, "points": 0}}"#,
    ] {
        let cfg = temp_path(&dir, "bad.json");
        std::fs::write(&cfg, body).unwrap();
        let out = run(&[
            "scan",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(2), "{body}");
        assert!(!out_path.exists());
    }
    let out = bin()
        .env("FERMIWIRE_THREADS", "0")
        .args(["scan"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tabulate_golden_tables() {
    assert_csv_matches(
        &stdout(&run(&[
            "tabulate",
            "--kind",
            "phonon",
            "--nu",
            "0.1:10:3:log",
        ])),
        &golden("phonon.csv"),
    );
    assert_csv_matches(
        &stdout(&run(&[
            "tabulate",
            "--kind",
            "occupation",
            "--z",
            "1",
            "--beta-eps",
            "0:2:5",
        ])),
        &golden("occupation.csv"),
    );
    assert_csv_matches(
        &stdout(&run(&["tabulate", "--kind", "oracle", "--long", "1:2:2"])),
        &golden("oracle.csv"),
    );
}

#[test]
fn occupation_default_grid() {
    let csv = stdout(&run(&["tabulate", "--kind", "occupation", "--z", "1"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 102);
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first[1].parse::<f64>().unwrap(), 0.5);
}

#[test]
fn phonon_reference_row() {
    let csv = stdout(&run(&["tabulate", "--kind", "phonon"]));
    let row: Vec<f64> = csv
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((row[7] - 7.596_333_120_575_995).abs() < 1e-12);
    assert_eq!(row[7], row[8]);
}

fn column(csv: &str, name: &str) -> f64 {
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    row[header.iter().position(|h| *h == name).unwrap()]
        .parse()
        .unwrap()
}

#[test]
fn oracle_small_box() {
    let csv = stdout(&run(&[
        "oracle",
        "--long",
        "3",
        "--transverse",
        "3",
        "--z",
        "0.05",
    ]));
    assert!(column(&csv, "rel_err_3d") < 1e-2);

    let dir = tempfile::tempdir().unwrap();
    let levels = temp_path(&dir, "levels.csv");
    let csv = stdout(&run(&[
        "oracle",
        "--long",
        "1",
        "--transverse",
        "1",
        "--levels",
        levels.to_str().unwrap(),
    ]));
    let text = std::fs::read_to_string(&levels).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("nx,ny,nz,energy"));
    assert!(lines.next().unwrap().starts_with("0,0,0,0.0"));
    assert_eq!((text.lines().count() - 1) as f64, column(&csv, "states"));

    let out = run(&[
        "oracle",
        "--long",
        "10",
        "--transverse",
        "10",
        "--cutoff",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
