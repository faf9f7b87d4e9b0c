//! Acceptance run: one PASS/FAIL line per criterion with the measured
//! quantity, the tolerance and the wall time. Exits non-zero on any FAIL.

use std::fs;
use std::process::Command;
use std::time::Instant;

use frac_tricomi::bounded::{
    eval_hyperbolic, verify_solution, ProblemSpec, ReportGrid, SpectralSolution, TraceFunctions,
};
use frac_tricomi::inverse::{
    monotonicity_scan, observable_e, recover_alpha, t0_threshold, InverseObservation,
    ObservationMode,
};
use frac_tricomi::profile::{Profile, Source};
use frac_tricomi::quadrature::Adaptive;
use frac_tricomi::special::{e_lambda_2, mittag_leffler, MLParams};

mod common;

const SERIES_TABLE: &str = include_str!("data/ml_series_oracle.csv");

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn ml(rho: f64, mu: f64, z: f64) -> f64 {
    mittag_leffler(MLParams::new(rho, mu).unwrap(), z).unwrap()
}

fn special_function_oracles() -> Outcome {
    let mut exp_err: f64 = 0.0;
    for i in 0..=3500 {
        let z = -30.0 + 0.01 * i as f64;
        exp_err = exp_err.max((ml(1.0, 1.0, z) - z.exp()).abs() / z.exp().max(1.0));
    }
    let mut erfc_err: f64 = 0.0;
    for i in 0..=1000 {
        let z = -5.0 + 0.005 * i as f64;
        erfc_err = erfc_err.max((ml(0.5, 1.0, z) - (z * z).exp() * libm::erfc(-z)).abs());
    }
    let mut series_err: f64 = 0.0;
    let mut rows = 0;
    for line in SERIES_TABLE.lines().skip(1).filter(|l| !l.is_empty()) {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        series_err = series_err.max((ml(v[0], v[1], v[2]) - v[3]).abs());
        rows += 1;
    }
    check(
        exp_err <= 1e-12 && erfc_err <= 1e-10 && series_err <= 1e-10 && rows == 100,
        format!(
            "exp {exp_err:.1e} (tol 1e-12), erfc {erfc_err:.1e} (tol 1e-10), series {series_err:.1e} over {rows} points (tol 1e-10)"
        ),
    )
}

fn identity_matrix() -> Outcome {
    let quad = Adaptive::new(1e-13, 1e-12);
    let (mut int_err, mut diff_err): (f64, f64) = (0.0, 0.0);
    for a in [0.3, 0.6, 0.9] {
        for k in [1.0f64, 2.0, 5.0] {
            let lam = k * k;
            for t in [0.5, 1.0, 2.0] {
                let lhs = quad
                    .integrate_weighted_left(|eta| ml(a, a, -lam * eta.powf(a)), 0.0, t, a - 1.0)
                    .unwrap();
                int_err = int_err.max((lhs - e_lambda_2(a, t, lam).unwrap()).abs());
                let g = |s: f64| e_lambda_2(a, s, lam).unwrap();
                let h = 1e-4 * t;
                let d = (8.0 * (g(t + h) - g(t - h)) - (g(t + 2.0 * h) - g(t - 2.0 * h))) / (12.0 * h);
                diff_err = diff_err.max((d - t.powf(a - 1.0) * ml(a, a, -lam * t.powf(a))).abs());
            }
        }
    }
    check(
        int_err <= 1e-8 && diff_err <= 1e-6,
        format!("integration {int_err:.1e} (tol 1e-8), differentiation {diff_err:.1e} (tol 1e-6) over 27 points"),
    )
}

fn parabola(alpha: f64) -> SpectralSolution {
    SpectralSolution::new(ProblemSpec::new(Profile::Parabola, Source::Zero, alpha).unwrap()).unwrap()
}

fn direct_residuals() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for alpha in [0.3, 0.5, 0.8] {
        let r = verify_solution(&parabola(alpha), &ReportGrid::default()).unwrap();
        pass &= r.gluing_value <= 1e-3
            && r.gluing_derivative <= 1e-3
            && r.boundary <= 1e-9
            && r.characteristic <= 1e-4
            && r.wave <= 1e-4
            && r.subdiffusion <= 1e-3;
        parts.push(format!(
            "a={alpha}: gl1 {:.1e} gl2 {:.1e} bc {:.1e} char {:.1e} wave {:.1e} rl {:.1e}",
            r.gluing_value, r.gluing_derivative, r.boundary, r.characteristic, r.wave, r.subdiffusion
        ));
    }
    check(pass, format!("{} (tol 1e-3/1e-3/1e-9/1e-4/1e-4/1e-3)", parts.join("; ")))
}

fn functional_relations() -> Outcome {
    let (mut first, mut second): (f64, f64) = (0.0, 0.0);
    for alpha in [0.3, 0.5, 0.8] {
        let d = parabola(alpha).traces.diagnostics;
        first = first.max(d.first_relation);
        second = second.max(d.second_relation);
    }
    check(
        first <= 1e-4 && second <= 1e-5,
        format!("nu - tau''/G(1+a) {first:.1e} (tol 1e-4), tau' - nu - 2psi' + F' {second:.1e} (tol 1e-5)"),
    )
}

fn classical_reduction() -> Outcome {
    let sol = parabola(1.0);
    let n = 1000;
    let u = common::crank_nicolson(|x| sol.traces.tau_at(x), 0.1, n, 2000);
    let heat = (1..n)
        .map(|i| (sol.eval_parabolic(i as f64 / n as f64, 0.1).unwrap() - u[i - 1]).abs())
        .fold(0.0, f64::max);
    let traces = TraceFunctions::from_functions(1.0, 65, |_| 0.0, |_| 0.0).unwrap();
    let source = Source::custom(|_, _| 1.0, true);
    let mut wave: f64 = 0.0;
    for i in 1..20 {
        let x = i as f64 / 20.0;
        let tmax = x.min(1.0 - x);
        for j in 1..=4 {
            let t = -tmax * j as f64 / 4.0;
            let v = eval_hyperbolic(&traces, &source, x, t).unwrap();
            wave = wave.max((v - 0.5 * t * t).abs());
        }
    }
    check(
        heat <= 1e-4 && wave <= 1e-10,
        format!("heat vs Crank-Nicolson {heat:.1e} (tol 1e-4), t^2/2 {wave:.1e} (tol 1e-10)"),
    )
}

const CONFIGS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0)];

fn observation(k0: u32, alpha0: f64, tau: f64, f: f64) -> InverseObservation {
    let t0 = t0_threshold(alpha0).max(10.0);
    InverseObservation::new(ObservationMode::Bounded { k0 }, t0, 0.0, alpha0, tau, f).unwrap()
}

/// Returns the monotonicity outcome and, separately, the e_{λ,2} sign
/// finding: its α-derivative is positive, not negative.
fn monotonicity() -> (Outcome, Outcome) {
    let (mut monotone, mut e1_neg, mut e2_neg, mut e2_pos) = (0, 0, 0, 0);
    let mut total = 0;
    for (tau, f) in CONFIGS {
        for k0 in [1, 2] {
            for alpha0 in [0.25, 0.5] {
                let s = monotonicity_scan(&observation(k0, alpha0, tau, f), 33).unwrap();
                total += 1;
                monotone += s.strictly_monotone as usize;
                e1_neg += (s.e1_sign == -1) as usize;
                e2_neg += (s.e2_sign == -1) as usize;
                e2_pos += (s.e2_sign == 1) as usize;
            }
        }
    }
    let main = check(
        monotone == total && e1_neg == total,
        format!("strictly monotone {monotone}/{total}, d e1/da < 0 {e1_neg}/{total}"),
    );
    let e2 = check(
        e2_neg == total,
        format!(
            "d e2/da < 0 {e2_neg}/{total}; observed d e2/da > 0 on {e2_pos}/{total} scans. \
             The stated negative sign does not hold: e2 = t^a E_(a,a+1)(-l t^a) increases in a \
             for t0 beyond the threshold, and the observable stays strictly monotone regardless"
        ),
    );
    (main, e2)
}

fn round_trip() -> Outcome {
    let mut worst: f64 = 0.0;
    for alpha0 in [0.25, 0.5] {
        for (tau, f) in CONFIGS {
            let obs = observation(1, alpha0, tau, f);
            for i in 0..9 {
                let star = alpha0 + 0.01 + (1.0 - alpha0 - 0.01) * i as f64 / 8.0;
                let d0 = observable_e(&obs, star).unwrap();
                let r = recover_alpha(&obs.with_target(d0)).unwrap();
                worst = worst.max((r.alpha - star).abs());
            }
        }
    }
    let mut line: f64 = 0.0;
    let t0 = t0_threshold(0.5).max(10.0);
    let obs = InverseObservation::new(
        ObservationMode::Line { xi0: 1.0 },
        t0,
        0.0,
        0.5,
        (-0.5f64).exp(),
        0.0,
    )
    .unwrap();
    for i in 0..9 {
        let star = 0.51 + 0.49 * i as f64 / 8.0;
        let r = recover_alpha(&obs.with_target(observable_e(&obs, star).unwrap())).unwrap();
        line = line.max((r.alpha - star).abs());
    }
    check(
        worst <= 1e-8 && line <= 1e-8,
        format!("bounded 9x4 matrix at a0 in {{0.25, 0.5}} {worst:.1e}, line {line:.1e} (tol 1e-8)"),
    )
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_frac-tricomi"))
}

fn admissibility_gate(dir: &std::path::Path) -> Outcome {
    let base = "[problem]\nmode = \"bounded\"\nk0 = 1\nt0 = 83.5\nalpha0 = 0.5\ntau_coeff = 1.0\nf_coeff = 1.0\n";
    let obs = InverseObservation::new(ObservationMode::Bounded { k0: 1 }, 83.5, 0.0, 0.5, 1.0, 1.0)
        .unwrap();
    let scan = monotonicity_scan(&obs, 33).unwrap();
    let mut pass = true;
    let mut brackets = true;
    for target in [scan.max + 1.0, scan.min - 1.0, scan.max * 1.5] {
        let path = dir.join("gate.toml");
        fs::write(&path, format!("{base}d0 = {target:.17e}\n")).unwrap();
        let out = binary().args(["inverse", "recover", "--config"]).arg(&path).output().unwrap();
        pass &= out.status.code() == Some(3);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let lo = v["range"][0].as_f64().unwrap_or(f64::NAN);
        let hi = v["range"][1].as_f64().unwrap_or(f64::NAN);
        brackets &= scan.values.iter().all(|&e| lo <= e && e <= hi);
    }
    check(
        pass && brackets,
        format!("exit status 3 on 3/3 targets: {pass}, range brackets all 33 scanned values: {brackets}"),
    )
}

fn determinism(dir: &std::path::Path) -> Outcome {
    let path = dir.join("verify.toml");
    fs::write(&path, "seed = 2024\n[problem]\npsi = \"parabola\"\nalpha = 0.5\n").unwrap();
    let run = |threads: &str| {
        binary()
            .env("FRAC_TRICOMI_THREADS", threads)
            .args(["verify", "--config"])
            .arg(&path)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    let ok = a.status.success() && b.status.success();
    check(
        ok && a.stdout == b.stdout,
        format!("two verify runs exit 0: {ok}, byte-identical: {}", a.stdout == b.stdout),
    )
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let mut failures = 0;
    let mut report = |name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failures += !o.pass as usize;
        println!("{name} {status} [{:.2} s] {}", start.elapsed().as_secs_f64(), o.detail);
    };
    report("criterion 1 special-function oracles:", &mut special_function_oracles);
    report("criterion 2 Mittag-Leffler identities:", &mut identity_matrix);
    report("criterion 3 direct-problem residuals:", &mut direct_residuals);
    report("criterion 4 functional relations:", &mut functional_relations);
    report("criterion 5 classical reduction:", &mut classical_reduction);
    let mut e2 = None;
    report("criterion 6 monotonicity:", &mut || {
        let (main, sign) = monotonicity();
        e2 = Some(sign);
        main
    });
    // the negative e2 sign is analytically false; reported, not counted
    let e2 = e2.unwrap();
    println!(
        "criterion 6 e2 derivative sign: {} {}",
        if e2.pass { "PASS" } else { "FAIL (known deviation, not counted)" },
        e2.detail
    );
    report("criterion 7 inverse round trip:", &mut round_trip);
    report("criterion 8 admissibility gate:", &mut || admissibility_gate(dir.path()));
    report("criterion 9 CLI determinism:", &mut || determinism(dir.path()));
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all counted criteria passed");
}
