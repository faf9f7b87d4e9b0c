//! Dispatch of a validated configuration to the numerical modules.

use std::path::Path;

use serde::Serialize;
use serde_json::json;

use crate::bounded::{verify_solution, ReportGrid, SpectralSolution};
use crate::inverse::{monotonicity_scan, range_from_scan, recover_alpha};
use crate::line::LineSolution;
use crate::quadrature::linspace;
use crate::special::{evaluate, MLParams};

use super::config::{BoundedConfig, Command, LineConfig, OutputFormat, Problem, RunConfig};
use super::output::{field_csv, table_csv, to_json, FieldRow};
use super::CliError;

/// Default output times of the bounded problem.
pub const BOUNDED_TIMES: [f64; 4] = [-0.25, 0.1, 0.5, 1.0];
/// Default output times of the line problem.
pub const LINE_TIMES: [f64; 3] = [-0.5, 0.5, 1.0];
/// Default number of abscissae per output time.
pub const DEFAULT_POINTS: usize = 101;

/// Text produced by a run: the main artifact and an optional summary
/// shown on stdout when the artifact goes to a file.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifacts {
    pub primary: String,
    pub summary: Option<String>,
}

/// Runs `config`; sidecar paths resolve against `base`. `scan_grid` is the
/// α-grid size of `inverse-scan`.
pub fn run(config: &RunConfig, base: &Path, scan_grid: Option<usize>) -> Result<Artifacts, CliError> {
    match (&config.command, &config.problem) {
        (Command::MlEval, Problem::Ml(p)) => {
            let params = MLParams::new(p.rho, p.mu)?;
            let e = evaluate(params, p.z)?;
            let doc = json!({
                "rho": p.rho,
                "mu": p.mu,
                "z": p.z,
                "value": e.value,
                "method": e.method.as_str(),
            });
            single(to_json(&doc)?)
        }
        (Command::DirectSolve, Problem::Bounded(p)) => direct_bounded(config, p, base),
        (Command::DirectSolve, Problem::Line(p)) => direct_line(config, p, base),
        (Command::Verify, Problem::Bounded(p)) => {
            if config.output_format == Some(OutputFormat::Csv) {
                return Err(CliError::Validation("verify writes json only".into()));
            }
            let sol = SpectralSolution::new(p.spec(base)?)?;
            let report = verify_solution(&sol, &ReportGrid::with_seed(config.seed))?;
            let doc = json!({
                "seed": config.seed,
                "alpha": p.alpha,
                "modes": p.modes,
                "grid": p.grid,
                "residuals": report,
                "max_residual": report.max_residual(),
            });
            single(to_json(&doc)?)
        }
        (Command::InverseRecover, Problem::Inverse(p)) => {
            if config.output_format == Some(OutputFormat::Csv) {
                return Err(CliError::Validation("inverse recover writes json only".into()));
            }
            let r = recover_alpha(&p.observation()?)?;
            single(to_json(&r)?)
        }
        (Command::InverseScan, Problem::Inverse(p)) => {
            let m = scan_grid.ok_or_else(|| CliError::Validation("scan needs --grid".into()))?;
            let obs = p.observation()?;
            let scan = monotonicity_scan(&obs, m)?;
            let verdict = range_from_scan(&obs, &scan)?;
            if config.output_format == Some(OutputFormat::Csv) {
                let signs = scan.derivative_signs.iter().map(|&s| f64::from(s)).collect();
                return single(table_csv(
                    &["alpha", "e", "de_sign", "de1", "de2"],
                    &[
                        scan.alpha.clone(),
                        scan.values.clone(),
                        signs,
                        scan.e1_derivative.clone(),
                        scan.e2_derivative.clone(),
                    ],
                )?);
            }
            #[derive(Serialize)]
            struct ScanDoc<'a> {
                grid_m: usize,
                target: f64,
                admissible: bool,
                margin: f64,
                range: [f64; 2],
                #[serde(flatten)]
                scan: &'a crate::inverse::ScanReport,
            }
            single(to_json(&ScanDoc {
                grid_m: m,
                target: obs.target,
                admissible: verdict.admissible,
                margin: verdict.margin,
                range: [verdict.min, verdict.max],
                scan: &scan,
            })?)
        }
        _ => Err(CliError::Validation(format!(
            "payload does not match command {}",
            config.command.as_str()
        ))),
    }
}

fn single(primary: String) -> Result<Artifacts, CliError> {
    Ok(Artifacts {
        primary,
        summary: None,
    })
}

fn fields(config: &RunConfig, rows: &[FieldRow], summary: serde_json::Value) -> Result<Artifacts, CliError> {
    match config.output_format {
        Some(OutputFormat::Json) => {
            let field: Vec<_> = rows
                .iter()
                .map(|r| json!({"x": r.x, "t": r.t, "u": r.u, "region": r.region}))
                .collect();
            single(to_json(&json!({"summary": summary, "field": field}))?)
        }
        _ => Ok(Artifacts {
            primary: field_csv(rows)?,
            summary: Some(to_json(&summary)?),
        }),
    }
}

fn direct_bounded(config: &RunConfig, p: &BoundedConfig, base: &Path) -> Result<Artifacts, CliError> {
    let sol = SpectralSolution::new(p.spec(base)?)?;
    let times = p.times.clone().unwrap_or_else(|| BOUNDED_TIMES.to_vec());
    let points = p.points.unwrap_or(DEFAULT_POINTS);
    let mut rows = Vec::new();
    let mut tail: f64 = 0.0;
    for &t in &times {
        if t > 0.0 {
            let xs = linspace(0.0, 1.0, points);
            let u = sol.parabolic_field(&xs, t)?;
            tail = tail.max(sol.eval_parabolic_with_tail(0.5, t)?.tail);
            rows.extend(xs.iter().zip(u).map(|(&x, u)| FieldRow {
                x,
                t,
                u,
                region: "parabolic",
            }));
        } else if t == 0.0 {
            let xs = linspace(0.0, 1.0, points);
            rows.extend(xs.iter().map(|&x| FieldRow {
                x,
                t,
                u: sol.traces.tau_at(x),
                region: "type-change",
            }));
        } else if -t < 0.5 {
            for x in linspace(-t, 1.0 + t, points) {
                rows.push(FieldRow {
                    x,
                    t,
                    u: sol.eval_hyperbolic(x, t)?,
                    region: "hyperbolic",
                });
            }
        } else if -t == 0.5 {
            rows.push(FieldRow {
                x: 0.5,
                t,
                u: sol.eval_hyperbolic(0.5, t)?,
                region: "hyperbolic",
            });
        }
    }
    let d = &sol.traces.diagnostics;
    let summary = json!({
        "domain": "bounded",
        "alpha": p.alpha,
        "modes": p.modes,
        "grid": p.grid,
        "rows": rows.len(),
        "reconstruction_error": sol.reconstruction_error(),
        "first_relation": d.first_relation,
        "second_relation": d.second_relation,
        "tau_boundary": d.tau_boundary,
        "nu_boundary": d.nu_boundary,
        "max_tail": tail,
    });
    fields(config, &rows, summary)
}

fn direct_line(config: &RunConfig, p: &LineConfig, base: &Path) -> Result<Artifacts, CliError> {
    let sol = LineSolution::new(p.spec(base)?)?;
    let l = p.window_l;
    let times = p.times.clone().unwrap_or_else(|| LINE_TIMES.to_vec());
    let points = p.points.unwrap_or(DEFAULT_POINTS);
    let mut rows = Vec::new();
    let (mut imag, mut edge, mut truncated): (f64, f64, bool) = (0.0, 0.0, false);
    for &t in &times {
        if t > 0.0 {
            let xs = linspace(-l, l, points);
            for (x, v) in xs.iter().zip(sol.parabolic_field(&xs, t)?) {
                imag = imag.max(v.imaginary.abs());
                edge = edge.max(v.edge);
                truncated |= v.truncated;
                rows.push(FieldRow {
                    x: *x,
                    t,
                    u: v.value,
                    region: "parabolic",
                });
            }
        } else if t == 0.0 {
            rows.extend(linspace(-l, l, points).into_iter().map(|x| FieldRow {
                x,
                t,
                u: sol.spec.tau.value(x),
                region: "type-change",
            }));
        } else if -t < l {
            for x in linspace(-l - t, l + t, points) {
                rows.push(FieldRow {
                    x,
                    t,
                    u: sol.eval_hyperbolic(x, t)?,
                    region: "hyperbolic",
                });
            }
        }
    }
    if truncated {
        eprintln!("warning: frequency truncation, integrand {edge:e} at |xi| = xi_max");
    }
    let summary = json!({
        "domain": "line",
        "alpha": p.alpha,
        "window_l": l,
        "xi_max": p.xi_max,
        "nodes": sol.nodes(),
        "rows": rows.len(),
        "max_imaginary": imag,
        "max_edge": edge,
        "truncated": truncated,
    });
    fields(config, &rows, summary)
}
