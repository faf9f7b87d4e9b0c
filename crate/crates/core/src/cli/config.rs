//! Run configuration: a TOML document with top-level run settings and one
//! `[problem]` table whose schema depends on the command.

use std::path::Path;

use serde::de::{DeserializeOwned, IgnoredAny};
use serde::{Deserialize, Serialize};

use crate::bounded::{ProblemSpec, DEFAULT_GRID, DEFAULT_MODES};
use crate::inverse::{InverseObservation, ObservationMode};
use crate::line::{LineFunction, LineSpec};
use crate::profile::{Profile, Source, TimeFactor};
use crate::special::MLParams;
use crate::spline::CubicSpline;

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    MlEval,
    DirectSolve,
    InverseRecover,
    InverseScan,
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::MlEval => "ml-eval",
            Command::DirectSolve => "direct-solve",
            Command::InverseRecover => "inverse-recover",
            Command::InverseScan => "inverse-scan",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    #[default]
    Bounded,
    Line,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Shape of a profile on [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Zero,
    Parabola,
    Sine,
    Bump,
    Polynomial,
    Sampled,
    SingleMode,
}

/// Shape of a function on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineKind {
    Zero,
    Gaussian,
    Bump,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TimeKind {
    #[default]
    Constant,
    Linear,
    Exponential,
}

fn default_modes() -> usize {
    DEFAULT_MODES
}

fn default_grid() -> usize {
    DEFAULT_GRID
}

fn zero_profile() -> ProfileKind {
    ProfileKind::Zero
}

fn zero_line() -> LineKind {
    LineKind::Zero
}

fn is_default<T: Default + PartialEq>(v: &T) -> bool {
    *v == T::default()
}

/// `ml-eval` payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MlConfig {
    pub rho: f64,
    pub mu: f64,
    pub z: f64,
}

/// mode, amplitude, coefficients and file of one profile
type ProfileFields<'a> = (Option<u32>, Option<f64>, Option<&'a Vec<f64>>, Option<&'a String>);

/// Bounded problem payload of `direct-solve` and `verify`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundedConfig {
    pub psi: ProfileKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_mode: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_amplitude: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_coefficients: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_file: Option<String>,
    #[serde(default = "zero_profile")]
    pub f: ProfileKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_mode: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_amplitude: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_coefficients: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_file: Option<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub f_time: TimeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_rate: Option<f64>,
    pub alpha: f64,
    #[serde(default = "default_modes")]
    pub modes: usize,
    #[serde(default = "default_grid")]
    pub grid: usize,
    /// output times; negative times lie in the hyperbolic region
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
    /// output abscissae per time
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
}

/// Line problem payload of `direct-solve --domain line`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineConfig {
    pub tau: LineKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_amplitude: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_sigma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_file: Option<String>,
    #[serde(default = "zero_line")]
    pub f: LineKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_amplitude: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_sigma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_file: Option<String>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub f_time: TimeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_rate: Option<f64>,
    pub alpha: f64,
    pub window_l: f64,
    pub xi_max: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseMode {
    Bounded,
    Line,
}

/// Observation payload of `inverse-recover` and `inverse-scan`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InverseConfig {
    pub mode: InverseMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k0: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi0: Option<f64>,
    pub t0: f64,
    pub d0: f64,
    pub alpha0: f64,
    #[serde(default)]
    pub tau_coeff: f64,
    #[serde(default)]
    pub f_coeff: f64,
}

/// The payload matching the command.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Ml(MlConfig),
    Bounded(BoundedConfig),
    Line(LineConfig),
    Inverse(InverseConfig),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub domain: Domain,
    pub output_path: Option<String>,
    pub output_format: Option<OutputFormat>,
    pub seed: u64,
    pub problem: Problem,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document<P> {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    command: Option<Command>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    domain: Option<Domain>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output_format: Option<OutputFormat>,
    #[serde(default)]
    seed: u64,
    problem: P,
}

fn typed<P: DeserializeOwned>(text: &str) -> Result<Document<P>, CliError> {
    toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

/// Parses and validates a configuration; `command` must be present.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    parse_config_for(text, None, None)
}

/// Parses a configuration for the given subcommand. A command or domain
/// written in the document must agree with the ones supplied.
pub fn parse_config_for(
    text: &str,
    command: Option<Command>,
    domain: Option<Domain>,
) -> Result<RunConfig, CliError> {
    let head: Document<IgnoredAny> = typed(text)?;
    let command = match (head.command, command) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Validation(format!(
                "config is for command {} but {} was requested",
                a.as_str(),
                b.as_str()
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(CliError::Validation("missing key command".into())),
    };
    let domain = match (head.domain, domain) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Validation(format!(
                "config domain {a:?} conflicts with requested {b:?}"
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => Domain::Bounded,
    };
    let problem = match (command, domain) {
        (Command::MlEval, _) => Problem::Ml(typed::<MlConfig>(text)?.problem),
        (Command::DirectSolve, Domain::Line) => Problem::Line(typed::<LineConfig>(text)?.problem),
        (Command::DirectSolve | Command::Verify, _) => {
            Problem::Bounded(typed::<BoundedConfig>(text)?.problem)
        }
        (Command::InverseRecover | Command::InverseScan, _) => {
            Problem::Inverse(typed::<InverseConfig>(text)?.problem)
        }
    };
    if command == Command::Verify && domain == Domain::Line {
        return Err(CliError::Validation(
            "verify is available for the bounded domain only".into(),
        ));
    }
    let config = RunConfig {
        command,
        domain,
        output_path: head.output_path,
        output_format: head.output_format,
        seed: head.seed,
        problem,
    };
    config.validate()?;
    Ok(config)
}

/// Serialises a configuration back to TOML; `parse_config` inverts it.
pub fn emit_config(config: &RunConfig) -> Result<String, CliError> {
    fn doc<P: Serialize>(c: &RunConfig, p: &P) -> Result<String, CliError> {
        let d = Document {
            command: Some(c.command),
            domain: Some(c.domain),
            output_path: c.output_path.clone(),
            output_format: c.output_format,
            seed: c.seed,
            problem: p,
        };
        toml::to_string(&d).map_err(|e| CliError::Parse(e.to_string()))
    }
    match &config.problem {
        Problem::Ml(p) => doc(config, p),
        Problem::Bounded(p) => doc(config, p),
        Problem::Line(p) => doc(config, p),
        Problem::Inverse(p) => doc(config, p),
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

fn check_alpha(alpha: f64) -> Result<(), CliError> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("alpha out of (0,1]: {alpha}")))
    }
}

fn check_times(times: &Option<Vec<f64>>, points: Option<usize>) -> Result<(), CliError> {
    if let Some(t) = times {
        if t.is_empty() || t.iter().any(|v| !v.is_finite()) {
            return Err(invalid("times must be a non-empty list of finite values"));
        }
    }
    if let Some(p) = points {
        if p < 2 {
            return Err(invalid(format!("points must be at least 2, got {p}")));
        }
    }
    Ok(())
}

impl RunConfig {
    /// Range checks that need no file access.
    pub fn validate(&self) -> Result<(), CliError> {
        match &self.problem {
            Problem::Ml(p) => {
                MLParams::new(p.rho, p.mu).map_err(|e| invalid(e.to_string()))?;
                if !p.z.is_finite() {
                    return Err(invalid(format!("z must be finite, got {}", p.z)));
                }
            }
            Problem::Bounded(p) => {
                check_alpha(p.alpha)?;
                check_times(&p.times, p.points)?;
                p.profile_fields("psi", p.psi)?;
                p.profile_fields("f", p.f)?;
                if p.f == ProfileKind::SingleMode {
                    return Err(invalid("f cannot be single-mode"));
                }
                if p.f_time != TimeKind::Constant && p.f_rate.is_none() {
                    return Err(invalid("f_time other than constant needs f_rate"));
                }
                // grid and mode counts are checked by the spec itself
                if p.psi != ProfileKind::Sampled && p.f != ProfileKind::Sampled {
                    p.spec(Path::new("."))?;
                }
            }
            Problem::Line(p) => {
                check_alpha(p.alpha)?;
                check_times(&p.times, p.points)?;
                if !(p.window_l > 0.0) {
                    return Err(invalid(format!("window_l must be positive, got {}", p.window_l)));
                }
                if !(p.xi_max > 0.0) {
                    return Err(invalid(format!("xi_max must be positive, got {}", p.xi_max)));
                }
                if p.refinement == Some(0) {
                    return Err(invalid("refinement must be at least 1"));
                }
                for (name, sigma) in [("tau_sigma", p.tau_sigma), ("f_sigma", p.f_sigma)] {
                    if let Some(s) = sigma {
                        if !(s > 0.0) {
                            return Err(invalid(format!("{name} must be positive, got {s}")));
                        }
                    }
                }
                for (name, kind, file) in [("tau", p.tau, &p.tau_file), ("f", p.f, &p.f_file)] {
                    if kind == LineKind::Sampled && file.is_none() {
                        return Err(invalid(format!("{name} = sampled needs {name}_file")));
                    }
                }
                if p.f_time != TimeKind::Constant && p.f_rate.is_none() {
                    return Err(invalid("f_time other than constant needs f_rate"));
                }
            }
            Problem::Inverse(p) => {
                p.observation().map_err(|e| invalid(e.to_string()))?;
            }
        }
        Ok(())
    }
}

/// Two-column sidecar CSV (x, value); a header row is optional.
pub fn read_samples(path: &Path) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let mut x = Vec::new();
    let mut y = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        if record.len() != 2 {
            return Err(invalid(format!(
                "{} line {}: expected two columns",
                path.display(),
                i + 1
            )));
        }
        let parsed = (record[0].parse::<f64>(), record[1].parse::<f64>());
        match parsed {
            (Ok(a), Ok(b)) => {
                x.push(a);
                y.push(b);
            }
            _ if i == 0 => continue,
            _ => {
                return Err(invalid(format!(
                    "{} line {}: not a number",
                    path.display(),
                    i + 1
                )))
            }
        }
    }
    Ok((x, y))
}

fn spline_from(base: &Path, file: &str) -> Result<CubicSpline, CliError> {
    let (x, y) = read_samples(&base.join(file))?;
    CubicSpline::new(x, y).map_err(|e| invalid(format!("{file}: {e}")))
}

fn time_factor(kind: TimeKind, rate: Option<f64>) -> TimeFactor {
    let r = rate.unwrap_or(0.0);
    match kind {
        TimeKind::Constant => TimeFactor::Constant,
        TimeKind::Linear => TimeFactor::Linear { slope: r },
        TimeKind::Exponential => TimeFactor::Exponential { rate: r },
    }
}

impl BoundedConfig {
    /// Minimal config: given ψ, no source, default discretisation.
    pub fn new(psi: ProfileKind, alpha: f64) -> Self {
        Self {
            psi,
            psi_mode: None,
            psi_amplitude: None,
            psi_coefficients: None,
            psi_file: None,
            f: ProfileKind::Zero,
            f_mode: None,
            f_amplitude: None,
            f_coefficients: None,
            f_file: None,
            f_time: TimeKind::Constant,
            f_rate: None,
            alpha,
            modes: DEFAULT_MODES,
            grid: DEFAULT_GRID,
            times: None,
            points: None,
        }
    }

    fn fields(&self, name: &str) -> ProfileFields<'_> {
        if name == "psi" {
            (
                self.psi_mode,
                self.psi_amplitude,
                self.psi_coefficients.as_ref(),
                self.psi_file.as_ref(),
            )
        } else {
            (
                self.f_mode,
                self.f_amplitude,
                self.f_coefficients.as_ref(),
                self.f_file.as_ref(),
            )
        }
    }

    fn profile_fields(&self, name: &str, kind: ProfileKind) -> Result<(), CliError> {
        let (mode, _, coeffs, file) = self.fields(name);
        match kind {
            ProfileKind::Polynomial if coeffs.is_none() => Err(invalid(format!(
                "{name} = polynomial needs {name}_coefficients"
            ))),
            ProfileKind::Sampled if file.is_none() => {
                Err(invalid(format!("{name} = sampled needs {name}_file")))
            }
            ProfileKind::Sine | ProfileKind::SingleMode if mode == Some(0) => {
                Err(invalid(format!("{name}_mode must be positive")))
            }
            _ => Ok(()),
        }
    }

    fn profile(&self, name: &str, kind: ProfileKind, base: &Path) -> Result<Profile, CliError> {
        let (mode, amplitude, coeffs, file) = self.fields(name);
        let amplitude = amplitude.unwrap_or(1.0);
        let scaled = |p: Profile| {
            if amplitude == 1.0 {
                p
            } else {
                Profile::custom(move |x| amplitude * p.value(x))
            }
        };
        Ok(match kind {
            ProfileKind::Zero => Profile::Zero,
            ProfileKind::Parabola if amplitude == 1.0 => Profile::Parabola,
            ProfileKind::Parabola => Profile::Polynomial(vec![0.0, amplitude, -amplitude]),
            ProfileKind::Bump => scaled(Profile::Bump),
            ProfileKind::Sine => Profile::Sine {
                mode: mode.unwrap_or(1),
                amplitude,
            },
            ProfileKind::Polynomial => Profile::Polynomial(
                coeffs
                    .map(|c| c.iter().map(|v| v * amplitude).collect())
                    .unwrap_or_default(),
            ),
            ProfileKind::Sampled => {
                let file = file.ok_or_else(|| invalid(format!("{name}_file missing")))?;
                scaled(Profile::Sampled(spline_from(base, file)?))
            }
            ProfileKind::SingleMode => scaled(
                Profile::single_mode(mode.unwrap_or(1), self.alpha)
                    .map_err(|e| invalid(e.to_string()))?,
            ),
        })
    }

    /// The validated problem; sidecar paths are relative to `base`.
    pub fn spec(&self, base: &Path) -> Result<ProblemSpec, CliError> {
        let psi = self.profile("psi", self.psi, base)?;
        let source = match self.f {
            ProfileKind::Zero => Source::Zero,
            kind => Source::Separable {
                space: self.profile("f", kind, base)?,
                time: time_factor(self.f_time, self.f_rate),
            },
        };
        ProblemSpec::with_discretisation(psi, source, self.alpha, self.grid, self.modes)
            .map_err(|e| invalid(e.to_string()))
    }
}

impl LineConfig {
    fn function(
        kind: LineKind,
        amplitude: Option<f64>,
        sigma: Option<f64>,
        file: &Option<String>,
        base: &Path,
    ) -> Result<LineFunction, CliError> {
        let amplitude = amplitude.unwrap_or(1.0);
        Ok(match kind {
            LineKind::Zero => LineFunction::Zero,
            LineKind::Gaussian => LineFunction::Gaussian {
                amplitude,
                sigma: sigma.unwrap_or(1.0),
            },
            LineKind::Bump => LineFunction::Bump { amplitude },
            LineKind::Sampled => {
                let file = file.as_ref().ok_or_else(|| invalid("sampled function needs a file"))?;
                let s = spline_from(base, file)?;
                if amplitude == 1.0 {
                    LineFunction::Sampled(s)
                } else {
                    let h = LineFunction::Sampled(s);
                    LineFunction::custom(move |x| amplitude * h.value(x))
                }
            }
        })
    }

    pub fn spec(&self, base: &Path) -> Result<LineSpec, CliError> {
        let tau = Self::function(self.tau, self.tau_amplitude, self.tau_sigma, &self.tau_file, base)?;
        let f = Self::function(self.f, self.f_amplitude, self.f_sigma, &self.f_file, base)?;
        let mut spec = LineSpec {
            tau,
            source: f,
            source_time: time_factor(self.f_time, self.f_rate),
            alpha: self.alpha,
            window_l: self.window_l,
            xi_max: self.xi_max,
            refinement: self.refinement.unwrap_or(1),
        };
        spec.validate().map_err(|e| invalid(e.to_string()))?;
        spec.refinement = spec.refinement.max(1);
        Ok(spec)
    }
}

impl InverseConfig {
    pub fn observation(&self) -> crate::Result<InverseObservation> {
        let mode = match self.mode {
            InverseMode::Bounded => ObservationMode::Bounded {
                k0: self.k0.ok_or_else(|| {
                    crate::Error::InvalidSpec("mode = bounded needs k0".into())
                })?,
            },
            InverseMode::Line => ObservationMode::Line {
                xi0: self.xi0.ok_or_else(|| {
                    crate::Error::InvalidSpec("mode = line needs xi0".into())
                })?,
            },
        };
        InverseObservation::new(
            mode,
            self.t0,
            self.d0,
            self.alpha0,
            self.tau_coeff,
            self.f_coeff,
        )
    }
}
