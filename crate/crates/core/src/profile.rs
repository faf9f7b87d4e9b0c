//! Data functions on [0, 1]: the characteristic profile ψ(x) and the source
//! f(x, t).

use std::fmt;
use std::sync::Arc;

use crate::spline::CubicSpline;

type Fn1 = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type Fn2 = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// A real function of x ∈ [0, 1].
#[derive(Clone)]
pub enum Profile {
    Zero,
    /// x (1 - x)
    Parabola,
    /// amplitude · sin(mode π x)
    Sine { mode: u32, amplitude: f64 },
    /// 64 x³ (1 - x)³, a polynomial bump peaking at 1 in the middle
    Bump,
    /// Σ c_i x^i
    Polynomial(Vec<f64>),
    /// C² interpolant of samples.
    Sampled(CubicSpline),
    /// ½ (sin kπx + (kπ/γ)(1 - cos kπx)), γ = Γ(1+α): the profile whose
    /// trace τ is sin kπx when f ≡ 0.
    SingleMode { mode: u32, gamma: f64 },
    /// Arbitrary closure; derivatives by finite differences.
    Custom(Fn1),
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Zero => write!(f, "Zero"),
            Profile::Parabola => write!(f, "Parabola"),
            Profile::Sine { mode, amplitude } => {
                write!(f, "Sine {{ mode: {mode}, amplitude: {amplitude} }}")
            }
            Profile::Bump => write!(f, "Bump"),
            Profile::Polynomial(c) => write!(f, "Polynomial({c:?})"),
            Profile::Sampled(s) => write!(f, "Sampled({} points)", s.knots().len()),
            Profile::SingleMode { mode, gamma } => {
                write!(f, "SingleMode {{ mode: {mode}, gamma: {gamma} }}")
            }
            Profile::Custom(_) => write!(f, "Custom"),
        }
    }
}

const FD_STEP: f64 = 1e-3;

fn fd_derivative<F: Fn(f64) -> f64>(f: F, x: f64) -> f64 {
    let h = FD_STEP;
    (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h)
}

impl Profile {
    /// The single-mode profile for order α.
    pub fn single_mode(mode: u32, alpha: f64) -> crate::Result<Self> {
        Ok(Profile::SingleMode {
            mode,
            gamma: crate::special::gamma(1.0 + alpha)?,
        })
    }

    pub fn custom<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        Profile::Custom(Arc::new(f))
    }

    pub fn value(&self, x: f64) -> f64 {
        match self {
            Profile::Zero => 0.0,
            Profile::Parabola => x * (1.0 - x),
            Profile::Sine { mode, amplitude } => {
                amplitude * (f64::from(*mode) * std::f64::consts::PI * x).sin()
            }
            Profile::Bump => 64.0 * (x * (1.0 - x)).powi(3),
            Profile::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci),
            Profile::Sampled(s) => s.value(x),
            Profile::SingleMode { mode, gamma } => {
                let k = f64::from(*mode) * std::f64::consts::PI;
                0.5 * ((k * x).sin() - k / gamma * (k * x).cos() + k / gamma)
            }
            Profile::Custom(f) => f(x),
        }
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match self {
            Profile::Zero => 0.0,
            Profile::Parabola => 1.0 - 2.0 * x,
            Profile::Sine { mode, amplitude } => {
                let k = f64::from(*mode) * std::f64::consts::PI;
                amplitude * k * (k * x).cos()
            }
            Profile::Bump => {
                let p = x * (1.0 - x);
                192.0 * p * p * (1.0 - 2.0 * x)
            }
            Profile::Polynomial(c) => c
                .iter()
                .enumerate()
                .skip(1)
                .rev()
                .fold(0.0, |acc, (i, &ci)| acc * x + i as f64 * ci),
            Profile::Sampled(s) => s.derivative(x),
            Profile::SingleMode { mode, gamma } => {
                let k = f64::from(*mode) * std::f64::consts::PI;
                0.5 * k * ((k * x).cos() + k / gamma * (k * x).sin())
            }
            Profile::Custom(f) => fd_derivative(|t| f(t), x),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Profile::Zero => true,
            Profile::Sine { amplitude, .. } => *amplitude == 0.0,
            Profile::Polynomial(c) => c.iter().all(|&v| v == 0.0),
            _ => false,
        }
    }
}

/// Time dependence q(t) of a separable source p(x) q(t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeFactor {
    /// q ≡ 1
    Constant,
    /// q(t) = 1 + slope · t
    Linear { slope: f64 },
    /// q(t) = exp(rate · t)
    Exponential { rate: f64 },
}

impl TimeFactor {
    pub fn value(&self, t: f64) -> f64 {
        match *self {
            TimeFactor::Constant => 1.0,
            TimeFactor::Linear { slope } => 1.0 + slope * t,
            TimeFactor::Exponential { rate } => (rate * t).exp(),
        }
    }
}

/// Right-hand side f(x, t) on both sides of t = 0.
#[derive(Clone)]
pub enum Source {
    Zero,
    Constant(f64),
    Separable { space: Profile, time: TimeFactor },
    Custom { f: Fn2, time_independent: bool },
}

impl fmt::Debug for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Zero => write!(f, "Zero"),
            Source::Constant(c) => write!(f, "Constant({c})"),
            Source::Separable { space, time } => {
                write!(f, "Separable {{ space: {space:?}, time: {time:?} }}")
            }
            Source::Custom {
                time_independent, ..
            } => write!(f, "Custom {{ time_independent: {time_independent} }}"),
        }
    }
}

impl Source {
    pub fn custom<F: Fn(f64, f64) -> f64 + Send + Sync + 'static>(
        f: F,
        time_independent: bool,
    ) -> Self {
        Source::Custom {
            f: Arc::new(f),
            time_independent,
        }
    }

    /// Time-independent source p(x).
    pub fn stationary(space: Profile) -> Self {
        Source::Separable {
            space,
            time: TimeFactor::Constant,
        }
    }

    pub fn value(&self, x: f64, t: f64) -> f64 {
        match self {
            Source::Zero => 0.0,
            Source::Constant(c) => *c,
            Source::Separable { space, time } => space.value(x) * time.value(t),
            Source::Custom { f, .. } => f(x, t),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Source::Zero => true,
            Source::Constant(c) => *c == 0.0,
            Source::Separable { space, .. } => space.is_zero(),
            Source::Custom { .. } => false,
        }
    }

    pub fn is_time_independent(&self) -> bool {
        match self {
            Source::Zero | Source::Constant(_) => true,
            Source::Separable { time, .. } => matches!(time, TimeFactor::Constant),
            Source::Custom {
                time_independent, ..
            } => *time_independent,
        }
    }
}
