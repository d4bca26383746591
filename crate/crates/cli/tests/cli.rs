use std::process::{Command, Output};

fn uswqed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uswqed"))
        .args(args)
        .env_remove("USWQED_TOL")
        .output()
        .expect("binary runs")
}

fn table(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# uswqed v"));
    let header = lines.next().unwrap().split(',').map(str::to_owned).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    (header, rows)
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn renorm_marks_regime_onsets() {
    let (header, rows) = table(&uswqed(&["renorm"]));
    let marker = header.iter().position(|c| c == "marker").unwrap();
    let onset = |name: &str| num(&rows.iter().find(|r| r[marker] == name).unwrap()[0]);
    assert!((onset("ultrastrong_onset") - 0.076).abs() < 1e-3);
    assert!((onset("deepstrong_onset") - 0.183).abs() < 1e-3);
    let first: Vec<f64> = rows[0][..4].iter().map(|s| num(s)).collect();
    assert_eq!(first, vec![0.0, 1.0, 1.0, 1.0]);
}

#[test]
fn overcritical_coupling_exits_4() {
    let out = uswqed(&["field", "--kappa", "0.2", "--kd", "0.6"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(uswqed(&["roots", "--grid", "1:0:5"]).status.code(), Some(2));
    assert_eq!(uswqed(&["field", "--kappa", "0.1"]).status.code(), Some(2));
    assert_eq!(uswqed(&["fluct", "--kappa", "0.1"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_uswqed"))
        .args(["roots"])
        .env("USWQED_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_reproducible() {
    let args = ["ellipse", "--grid", "0.2:1.8:17"];
    assert_eq!(uswqed(&args).stdout, uswqed(&args).stdout);
}

#[test]
fn trajectory_aspect_equals_drive_frequency() {
    let (header, rows) = table(&uswqed(&["trajectory", "--kappa", "0.15", "--kd", "0.476", "--grid", "0:10:5"]));
    let col = header.iter().position(|c| c == "short_over_long").unwrap();
    assert!((num(&rows[0][col]) - 0.476).abs() < 1e-12);
    let t0 = header.iter().position(|c| c == "re_b").unwrap();
    assert!(num(&rows[0][t0]).abs() < 1e-8);
}

#[test]
fn reflection_phases_meet_at_bare_frequency() {
    let (_, rows) = table(&uswqed(&["reflection", "--grid", "0.5:1.5:1001"]));
    let at_one = rows.iter().find(|r| (num(&r[0]) - 1.0).abs() < 1e-12).unwrap();
    let phases: Vec<f64> = at_one[1..].iter().map(|s| num(s)).collect();
    let expected = -2.0 * (1.0f64 / 5.0).atan();
    for p in &phases {
        let gap = (p - expected).rem_euclid(std::f64::consts::TAU);
        assert!(gap.min(std::f64::consts::TAU - gap) < 1e-9, "{phases:?}");
    }
}

#[test]
fn failed_run_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = uswqed(&["field", "--kappa", "0.2", "--kd", "0.6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);

    let ok = uswqed(&["roots", "--grid", "0:0.1:3", "--out", path.to_str().unwrap()]);
    assert!(ok.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().contains("re_lambda1"));
}

#[test]
fn json_output_parses() {
    let out = uswqed(&["fluct", "--grid", "0:0.15:4", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
    assert_eq!(doc["config"]["command"], "fluct");
    let dx_dy = doc["rows"][0][5].as_f64().unwrap();
    assert!((dx_dy - 0.25).abs() < 1e-12);
}
