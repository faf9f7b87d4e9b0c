use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("argument {value} outside the domain of {function}")]
    Domain { function: &'static str, value: f64 },

    #[error("Mittag-Leffler E[{rho}, {mu}]({z}) could not be certified (error estimate {estimate:e})")]
    AccuracyLoss { rho: f64, mu: f64, z: f64, estimate: f64 },

    #[error("Mittag-Leffler E[{rho}, {mu}]({z}) overflows f64")]
    Overflow { rho: f64, mu: f64, z: f64 },

    #[error("quadrature did not converge: error estimate {estimate:e} > tolerance {tolerance:e}")]
    Quadrature { estimate: f64, tolerance: f64 },

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("trace self-check failed: {relation} residual {residual:e} exceeds {tolerance:e}")]
    ResidualViolation {
        relation: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("{modes} sine modes cannot be resolved on a {grid}-point grid")]
    Aliasing { modes: usize, grid: usize },

    #[error("point (x = {x}, t = {t}) lies outside the characteristic triangle")]
    OutOfRegion { x: f64, t: f64 },

    #[error("function is not negligible at the window edge (|h| = {value:e})")]
    WindowViolation { value: f64 },

    #[error("observable is not strictly monotone on [{alpha0}, 1]; increase t0 towards {suggested_t0:.6e}")]
    NotMonotone { alpha0: f64, suggested_t0: f64 },

    #[error("target {target:e} outside the attainable range [{min:e}, {max:e}]")]
    OutOfRange { target: f64, min: f64, max: f64 },

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
}

impl Error {
    /// Invalid input, as opposed to a numerical failure on valid input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Pole(_)
                | Error::Domain { .. }
                | Error::InvalidSpec(_)
                | Error::Aliasing { .. }
                | Error::OutOfRegion { .. }
                | Error::WindowViolation { .. }
        )
    }

    /// Short machine-readable tag used in JSON error reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Pole(_) => "pole",
            Error::Domain { .. } => "domain",
            Error::AccuracyLoss { .. } => "accuracy-loss",
            Error::Overflow { .. } => "overflow",
            Error::Quadrature { .. } => "quadrature",
            Error::InvalidSpec(_) => "invalid-spec",
            Error::ResidualViolation { .. } => "residual-violation",
            Error::Aliasing { .. } => "aliasing",
            Error::OutOfRegion { .. } => "out-of-region",
            Error::WindowViolation { .. } => "window-violation",
            Error::NotMonotone { .. } => "not-monotone",
            Error::OutOfRange { .. } => "out-of-range",
            Error::NonConvergence { .. } => "non-convergence",
        }
    }
}
