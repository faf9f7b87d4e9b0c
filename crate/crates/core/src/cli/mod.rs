//! Configuration, dispatch and output of the `frac-tricomi` binary.

pub mod config;
pub mod output;
pub mod run;

use std::fs;
use std::path::Path;

use serde_json::json;
use thiserror::Error;

pub use config::{
    emit_config, parse_config, parse_config_for, BoundedConfig, Command, Domain, InverseConfig,
    LineConfig, MlConfig, OutputFormat, Problem, RunConfig,
};
pub use output::{fmt_float, to_json};
pub use run::{run, Artifacts};

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "FRAC_TRICOMI_THREADS";

/// Exit status on success.
pub const EXIT_OK: i32 = 0;
/// Exit status on invalid input.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status on a numerical failure of valid input.
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error("output error: {0}")]
    Output(String),
    #[error(transparent)]
    Numerical(#[from] crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(e) if !e.is_validation() => EXIT_NUMERICAL,
            _ => EXIT_VALIDATION,
        }
    }

    /// JSON error document written in place of the result.
    pub fn to_json(&self) -> String {
        let doc = match self {
            CliError::Numerical(e) => {
                let mut doc = json!({"error": e.tag(), "message": e.to_string()});
                match e {
                    crate::Error::OutOfRange { target, min, max } => {
                        doc["range"] = json!([min, max]);
                        doc["target"] = json!(target);
                    }
                    crate::Error::NotMonotone { suggested_t0, .. } => {
                        doc["suggested_t0"] = json!(suggested_t0);
                    }
                    _ => {}
                }
                doc
            }
            CliError::Parse(m) => json!({"error": "parse", "message": m}),
            CliError::Validation(m) => json!({"error": "validation", "message": m}),
            CliError::Output(m) => json!({"error": "output", "message": m}),
        };
        to_json(&doc).unwrap_or_else(|_| "{\"error\": \"output\"}\n".into())
    }
}

/// Caps the global rayon pool from [`THREADS_ENV`] when it holds a positive
/// integer.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // fails only if the pool already exists, which keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs a validated configuration and writes its artifacts: the primary
/// one to `output_path` (stdout when absent), the summary to stdout when
/// the primary went to a file. Errors go to stdout as JSON and to stderr
/// as text. Returns the exit status.
pub fn execute(config: &RunConfig, base: &Path, scan_grid: Option<usize>) -> i32 {
    match run(config, base, scan_grid).and_then(|a| write_artifacts(config, base, a)) {
        Ok(()) => EXIT_OK,
        Err(e) => report(&e),
    }
}

/// Reads, parses and executes a configuration file.
pub fn execute_file(
    path: &Path,
    command: Command,
    domain: Option<Domain>,
    scan_grid: Option<usize>,
) -> i32 {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return report(&CliError::Validation(format!(
                "cannot read {}: {e}",
                path.display()
            )))
        }
    };
    let base = path.parent().unwrap_or(Path::new("."));
    match parse_config_for(&text, Some(command), domain) {
        Ok(config) => execute(&config, base, scan_grid),
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> i32 {
    eprintln!("error: {e}");
    print!("{}", e.to_json());
    e.exit_code()
}

fn write_artifacts(config: &RunConfig, base: &Path, a: Artifacts) -> Result<(), CliError> {
    match &config.output_path {
        Some(p) => {
            let path = base.join(p);
            fs::write(&path, a.primary)
                .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))?;
            if let Some(s) = a.summary {
                print!("{s}");
            }
        }
        None => print!("{}", a.primary),
    }
    Ok(())
}
