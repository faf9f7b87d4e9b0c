use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use frac_tricomi::cli::{emit_config, parse_config};
use serde_json::Value;

fn binary() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_frac-tricomi"));
    c.env("FRAC_TRICOMI_THREADS", "2");
    c
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

const INVERSE: &str = "[problem]\nmode = \"bounded\"\nk0 = 1\nt0 = 15.0\nalpha0 = 0.5\ntau_coeff = 1.0\n";

#[test]
fn ml_eval_prints_value_and_method() {
    let out = run(&["ml", "eval", "--rho", "1", "--mu", "1", "--z", "-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - (-1f64).exp()).abs() < 1e-15);
    let out = run(&["ml", "eval", "--rho", "0", "--mu", "1", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "validation");
}

#[test]
fn direct_solve_bounded_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.toml",
        "output_path = \"field.csv\"\n[problem]\npsi = \"parabola\"\nalpha = 0.5\npoints = 5\n",
    );
    let out = run(&["direct", "solve", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = json(&out);
    assert_eq!(summary["rows"], 20);
    let csv = fs::read_to_string(dir.path().join("field.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,t,u,region"));
    let regions: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(regions.len(), 20);
    assert!(regions.contains(&"hyperbolic") && regions.contains(&"parabolic"));
}

#[test]
fn zero_data_give_a_zero_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.toml",
        "command = \"direct-solve\"\n[problem]\npsi = \"zero\"\nalpha = 0.7\npoints = 4\ntimes = [-0.2, 0.0, 0.3]\n",
    );
    let out = run(&["direct", "solve", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let u: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(u, 0.0, "{line}");
    }
}

#[test]
fn direct_solve_line_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.toml",
        "output_format = \"json\"\n[problem]\ntau = \"gaussian\"\nalpha = 1.0\nwindow_l = 12.0\nxi_max = 12.0\npoints = 3\ntimes = [0.5]\n",
    );
    let out = run(&["direct", "solve", "--config", &cfg, "--domain", "line"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let field = v["field"].as_array().unwrap();
    assert_eq!(field.len(), 3);
    let mid = &field[1];
    assert_eq!(mid["x"].as_f64(), Some(0.0));
    assert!((mid["u"].as_f64().unwrap() - 1.0 / 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn invalid_configs_exit_with_status_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_alpha = write(dir.path(), "a.toml", "[problem]\npsi = \"parabola\"\nalpha = 1.5\n");
    let out = run(&["direct", "solve", "--config", &bad_alpha]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["message"].as_str().unwrap().contains("alpha"));
    let unknown = write(dir.path(), "b.toml", "[problem]\npsi = \"parabola\"\nalpha = 0.5\nbeta = 1\n");
    assert_eq!(run(&["direct", "solve", "--config", &unknown]).status.code(), Some(2));
    let missing = dir.path().join("nope.toml");
    let out = run(&["verify", "--config", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let no_d0 = write(dir.path(), "c.toml", INVERSE);
    assert_eq!(run(&["inverse", "recover", "--config", &no_d0]).status.code(), Some(2));
}

#[test]
fn out_of_range_target_exits_with_status_three() {
    let dir = tempfile::tempdir().unwrap();
    let scan_cfg = write(dir.path(), "s.toml", &format!("{INVERSE}d0 = 0.0\n"));
    let scan = run(&["inverse", "scan", "--config", &scan_cfg, "--grid", "33"]);
    assert_eq!(scan.status.code(), Some(0));
    let scan = json(&scan);
    let values: Vec<f64> = scan["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let cfg = write(dir.path(), "r.toml", &format!("{INVERSE}d0 = {:e}\n", max + 1.0));
    let out = run(&["inverse", "recover", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(3));
    let err = json(&out);
    assert_eq!(err["error"], "out-of-range");
    let (lo, hi) = (err["range"][0].as_f64().unwrap(), err["range"][1].as_f64().unwrap());
    assert!(values.iter().all(|&v| lo <= v && v <= hi));
}

#[test]
fn recover_round_trip_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let scan_cfg = write(dir.path(), "s.toml", &format!("{INVERSE}d0 = 0.0\n"));
    let scan = json(&run(&["inverse", "scan", "--config", &scan_cfg, "--grid", "17"]));
    assert_eq!(scan["strictly_monotone"], true);
    let target = scan["values"][8].as_f64().unwrap();
    let alpha = scan["alpha"][8].as_f64().unwrap();
    let cfg = write(dir.path(), "r.toml", &format!("{INVERSE}d0 = {target:.17e}\n"));
    let out = run(&["inverse", "recover", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    assert!((json(&out)["alpha"].as_f64().unwrap() - alpha).abs() < 1e-10);
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "v.toml",
        "seed = 11\n[problem]\npsi = \"single-mode\"\nalpha = 1.0\nmodes = 16\n",
    );
    let a = run(&["verify", "--config", &cfg]);
    let b = binary()
        .env("FRAC_TRICOMI_THREADS", "1")
        .args(["verify", "--config", &cfg])
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 11);
    assert!(v["max_residual"].as_f64().unwrap() <= 1e-6);
}

#[test]
fn emitted_config_parses_back() {
    let text = "command = \"direct-solve\"\nseed = 4\n[problem]\npsi = \"sine\"\npsi_mode = 2\nalpha = 0.4\ntimes = [0.5]\n";
    let config = parse_config(text).unwrap();
    let emitted = emit_config(&config).unwrap();
    assert_eq!(parse_config(&emitted).unwrap(), config);
}
