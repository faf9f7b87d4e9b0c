//! The mixed problem on the whole line, for compactly supported data.
//!
//! For t > 0 the solution is the inverse unitary Fourier transform of
//!   û(ξ,t) = Γ(α) t^{α-1} E_{α,α}(-ξ²t^α) τ̂(ξ)
//!          + ∫_0^t η^{α-1} E_{α,α}(-ξ²η^α) f̂(ξ, t-η) dη,
//! truncated to |ξ| ≤ ξ_max. For t < 0 the d'Alembert formula is applied
//! to the traces τ and ν = τ''/Γ(1+α) (plus f(x,0) when α = 1).

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounded::hyperbolic::eval_hyperbolic;
use crate::bounded::spectral::{duhamel_nodes, duhamel_product};
use crate::bounded::TraceFunctions;
use crate::error::{Error, Result};
use crate::profile::{Source, TimeFactor};
use crate::quadrature::{linspace, GaussLegendre};
use crate::special::{gamma, mittag_leffler, MLParams};
use crate::spline::CubicSpline;

/// Largest |h(±L)| accepted for data on the window [-L, L].
pub const WINDOW_TOLERANCE: f64 = 1e-8;
/// Largest |τ̂|, |f̂| accepted at |ξ| = ξ_max.
pub const DECAY_TOLERANCE: f64 = 1e-6;
/// Integrand size at |ξ| = ξ_max above which a value is flagged truncated.
pub const TRUNCATION_TOLERANCE: f64 = 1e-8;
/// Grid of the hyperbolic traces over the window.
pub const TRACE_GRID: usize = 2049;

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

type Fn1 = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A real function on the line, negligible outside a finite window.
#[derive(Clone)]
pub enum LineFunction {
    Zero,
    /// amplitude · exp(-x²/(2σ²))
    Gaussian { amplitude: f64, sigma: f64 },
    /// amplitude · (1 - x²)² on [-1, 1], zero outside
    Bump { amplitude: f64 },
    /// C² interpolant of samples, zero outside the sampled interval
    Sampled(CubicSpline),
    /// Arbitrary closure; second derivative by finite differences
    Custom(Fn1),
}

impl fmt::Debug for LineFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineFunction::Zero => write!(f, "Zero"),
            LineFunction::Gaussian { amplitude, sigma } => {
                write!(f, "Gaussian {{ amplitude: {amplitude}, sigma: {sigma} }}")
            }
            LineFunction::Bump { amplitude } => write!(f, "Bump {{ amplitude: {amplitude} }}"),
            LineFunction::Sampled(s) => write!(f, "Sampled({} points)", s.knots().len()),
            LineFunction::Custom(_) => write!(f, "Custom"),
        }
    }
}

impl LineFunction {
    pub fn custom<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        LineFunction::Custom(Arc::new(f))
    }

    /// exp(-x²/2)
    pub fn standard_gaussian() -> Self {
        LineFunction::Gaussian {
            amplitude: 1.0,
            sigma: 1.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            LineFunction::Zero => true,
            LineFunction::Gaussian { amplitude, .. } | LineFunction::Bump { amplitude } => {
                *amplitude == 0.0
            }
            _ => false,
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        match self {
            LineFunction::Zero => 0.0,
            LineFunction::Gaussian { amplitude, sigma } => {
                amplitude * (-0.5 * (x / sigma).powi(2)).exp()
            }
            LineFunction::Bump { amplitude } => {
                if x.abs() < 1.0 {
                    amplitude * (1.0 - x * x).powi(2)
                } else {
                    0.0
                }
            }
            LineFunction::Sampled(s) => {
                let k = s.knots();
                if x < k[0] || x > k[k.len() - 1] {
                    0.0
                } else {
                    s.value(x)
                }
            }
            LineFunction::Custom(f) => f(x),
        }
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        match self {
            LineFunction::Zero => 0.0,
            LineFunction::Gaussian { amplitude, sigma } => {
                let s2 = sigma * sigma;
                amplitude * (x * x / (s2 * s2) - 1.0 / s2) * (-0.5 * x * x / s2).exp()
            }
            LineFunction::Bump { amplitude } => {
                if x.abs() < 1.0 {
                    amplitude * (12.0 * x * x - 4.0)
                } else {
                    0.0
                }
            }
            LineFunction::Sampled(s) => {
                let k = s.knots();
                if x < k[0] || x > k[k.len() - 1] {
                    0.0
                } else {
                    s.second_derivative(x)
                }
            }
            LineFunction::Custom(f) => {
                let h = 1e-3;
                (-(f(x + 2.0 * h) + f(x - 2.0 * h)) + 16.0 * (f(x + h) + f(x - h))
                    - 30.0 * f(x))
                    / (12.0 * h * h)
            }
        }
    }

    /// Points where the function is not smooth.
    fn breakpoints(&self) -> Vec<f64> {
        match self {
            LineFunction::Bump { .. } => vec![-1.0, 1.0],
            LineFunction::Sampled(s) => s.knots().to_vec(),
            _ => Vec::new(),
        }
    }

    /// Closed-form unitary transform, when one is known.
    pub fn closed_form_transform(&self, xi: f64) -> Option<Complex64> {
        match self {
            LineFunction::Zero => Some(Complex64::new(0.0, 0.0)),
            LineFunction::Gaussian { amplitude, sigma } => Some(Complex64::new(
                amplitude * sigma.abs() * (-0.5 * (sigma * xi).powi(2)).exp(),
                0.0,
            )),
            LineFunction::Bump { amplitude } => {
                Some(Complex64::new(amplitude * INV_SQRT_2PI * bump_cosine(xi), 0.0))
            }
            _ => None,
        }
    }

    /// Unitary transform: closed form when known, quadrature otherwise.
    pub fn transform(&self, window_l: f64, xi: f64) -> Result<Complex64> {
        match self.closed_form_transform(xi) {
            Some(v) => Ok(v),
            None => fourier_transform(self, window_l, xi),
        }
    }
}

/// ∫_{-1}^{1} (1 - x²)² cos(xξ) dx
fn bump_cosine(xi: f64) -> f64 {
    let x = xi.abs();
    if x < 2.0 {
        // Σ_m (-1)^m ξ^{2m}/(2m)! · 16/((2m+1)(2m+3)(2m+5))
        let x2 = x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for m in 0..30 {
            let mf = m as f64;
            let c = 16.0 / ((2.0 * mf + 1.0) * (2.0 * mf + 3.0) * (2.0 * mf + 5.0));
            sum += term * c;
            term *= -x2 / ((2.0 * mf + 1.0) * (2.0 * mf + 2.0));
            if term.abs() < 1e-18 {
                break;
            }
        }
        sum
    } else {
        let (s, c) = x.sin_cos();
        16.0 * ((3.0 - x * x) * s - 3.0 * x * c) / x.powi(5)
    }
}

/// ĥ(ξ) = (2π)^{-1/2} ∫_{-L}^{L} h(x) e^{-ixξ} dx by composite 16-point
/// Gauss-Legendre, with panels no wider than min(1/2, π/|ξ|) and
/// breakpoints at the kinks of h.
pub fn fourier_transform(h: &LineFunction, window_l: f64, xi: f64) -> Result<Complex64> {
    if !(window_l > 0.0) || !xi.is_finite() {
        return Err(Error::InvalidSpec(format!(
            "transform needs L > 0 and finite xi, got L = {window_l}, xi = {xi}"
        )));
    }
    check_window(h, window_l)?;
    if h.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut breaks = vec![-window_l];
    breaks.extend(
        h.breakpoints()
            .into_iter()
            .filter(|&b| b > -window_l && b < window_l),
    );
    breaks.push(window_l);
    let width = if xi == 0.0 { 0.5 } else { (PI / xi.abs()).min(0.5) };
    let rule = GaussLegendre::n16();
    let mut re = 0.0;
    let mut im = 0.0;
    for w in breaks.windows(2) {
        let panels = ((w[1] - w[0]) / width).ceil().max(1.0) as usize;
        for p in linspace(w[0], w[1], panels + 1).windows(2) {
            re += rule.integrate(|x| h.value(x) * (x * xi).cos(), p[0], p[1]);
            im -= rule.integrate(|x| h.value(x) * (x * xi).sin(), p[0], p[1]);
        }
    }
    Ok(Complex64::new(re, im) * INV_SQRT_2PI)
}

fn check_window(h: &LineFunction, window_l: f64) -> Result<()> {
    let edge = h.value(-window_l).abs().max(h.value(window_l).abs());
    if !(edge <= WINDOW_TOLERANCE) {
        return Err(Error::WindowViolation { value: edge });
    }
    Ok(())
}

/// Data of the line problem. The source is f(x, t) = p(x) q(t).
#[derive(Debug, Clone)]
pub struct LineSpec {
    pub tau: LineFunction,
    pub source: LineFunction,
    pub source_time: TimeFactor,
    pub alpha: f64,
    /// half-width L of the spatial window
    pub window_l: f64,
    /// frequency cut-off
    pub xi_max: f64,
    /// subdivisions of each frequency panel of width π/L
    pub refinement: usize,
}

impl LineSpec {
    pub fn new(tau: LineFunction, alpha: f64, window_l: f64, xi_max: f64) -> Result<Self> {
        let spec = Self {
            tau,
            source: LineFunction::Zero,
            source_time: TimeFactor::Constant,
            alpha,
            window_l,
            xi_max,
            refinement: 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_source(mut self, source: LineFunction, time: TimeFactor) -> Result<Self> {
        self.source = source;
        self.source_time = time;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::InvalidSpec(format!(
                "alpha out of (0,1]: {}",
                self.alpha
            )));
        }
        if !(self.window_l > 0.0 && self.window_l.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "window_l must be positive, got {}",
                self.window_l
            )));
        }
        if !(self.xi_max > 0.0 && self.xi_max.is_finite()) {
            return Err(Error::InvalidSpec(format!(
                "xi_max must be positive, got {}",
                self.xi_max
            )));
        }
        if self.refinement == 0 {
            return Err(Error::InvalidSpec("refinement must be at least 1".into()));
        }
        for (name, h) in [("tau", &self.tau), ("source", &self.source)] {
            check_window(h, self.window_l)?;
            for xi in [-self.xi_max, self.xi_max] {
                let v = h.transform(self.window_l, xi)?.norm();
                if v > DECAY_TOLERANCE {
                    return Err(Error::InvalidSpec(format!(
                        "transform of {name} is {v:e} at |xi| = xi_max; raise xi_max"
                    )));
                }
            }
        }
        Ok(())
    }

    fn f_value(&self, x: f64, t: f64) -> f64 {
        self.source.value(x) * self.source_time.value(t)
    }
}

/// Real part of the truncated inverse transform with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineValue {
    pub value: f64,
    /// imaginary part of the quadrature, zero for real data up to rounding
    pub imaginary: f64,
    /// |integrand| at ξ = ±ξ_max
    pub edge: f64,
    /// edge exceeds the truncation tolerance
    pub truncated: bool,
}

/// Transforms of the data at the frequency nodes and the traces for t < 0.
#[derive(Debug, Clone)]
pub struct LineSolution {
    pub spec: LineSpec,
    pub traces: TraceFunctions,
    xi: Vec<f64>,
    weights: Vec<f64>,
    tau_hat: Vec<Complex64>,
    f_hat: Vec<Complex64>,
    gamma_alpha: f64,
}

impl LineSolution {
    pub fn new(spec: LineSpec) -> Result<Self> {
        spec.validate()?;
        let (xi, weights) = frequency_nodes(&spec);
        let tau_hat = transforms(&spec.tau, spec.window_l, &xi)?;
        let f_hat = transforms(&spec.source, spec.window_l, &xi)?;
        let traces = line_traces(&spec)?;
        Ok(Self {
            gamma_alpha: gamma(spec.alpha)?,
            spec,
            traces,
            xi,
            weights,
            tau_hat,
            f_hat,
        })
    }

    /// Number of frequency nodes.
    pub fn nodes(&self) -> usize {
        self.xi.len()
    }

    /// û(ξ_j, t) at every frequency node.
    pub fn transform_at(&self, t: f64) -> Result<Vec<Complex64>> {
        if !(t > 0.0) {
            return Err(Error::OutOfRegion { x: f64::NAN, t });
        }
        let alpha = self.spec.alpha;
        let ta = t.powf(alpha);
        let stationary = matches!(self.spec.source_time, TimeFactor::Constant);
        let eta = if stationary || self.spec.source.is_zero() {
            Vec::new()
        } else {
            duhamel_nodes(t)
        };
        let q: Vec<f64> = eta
            .iter()
            .map(|&e| self.spec.source_time.value(t - e))
            .collect();
        (0..self.xi.len())
            .into_par_iter()
            .map(|j| {
                let lambda = self.xi[j] * self.xi[j];
                let z = -lambda * ta;
                let mut u = Complex64::new(0.0, 0.0);
                if self.tau_hat[j] != Complex64::new(0.0, 0.0) {
                    let e = mittag_leffler(MLParams { rho: alpha, mu: alpha }, z)?;
                    u += self.tau_hat[j] * (self.gamma_alpha * ta / t * e);
                }
                if self.f_hat[j] != Complex64::new(0.0, 0.0) {
                    let d = if stationary {
                        ta * mittag_leffler(
                            MLParams {
                                rho: alpha,
                                mu: alpha + 1.0,
                            },
                            z,
                        )?
                    } else {
                        duhamel_product(alpha, lambda, &eta, |i| q[i])?
                    };
                    u += self.f_hat[j] * d;
                }
                Ok(u)
            })
            .collect()
    }

    /// u(x, t) for t > 0 from the truncated inverse transform.
    pub fn eval_parabolic(&self, x: f64, t: f64) -> Result<LineValue> {
        let uh = self.transform_at(t)?;
        Ok(self.inverse(&uh, x, t))
    }

    /// u(x_i, t) for several points sharing one time.
    pub fn parabolic_field(&self, xs: &[f64], t: f64) -> Result<Vec<LineValue>> {
        let uh = self.transform_at(t)?;
        Ok(xs.iter().map(|&x| self.inverse(&uh, x, t)).collect())
    }

    fn inverse(&self, uh: &[Complex64], x: f64, t: f64) -> LineValue {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((&xi, &w), &u) in self.xi.iter().zip(&self.weights).zip(uh) {
            acc += u * Complex64::from_polar(w, x * xi);
        }
        acc *= INV_SQRT_2PI;
        let edge = self.edge_integrand(t);
        LineValue {
            value: acc.re,
            imaginary: acc.im,
            edge,
            truncated: edge > TRUNCATION_TOLERANCE,
        }
    }

    /// Magnitude of the integrand at |ξ| = ξ_max.
    fn edge_integrand(&self, t: f64) -> f64 {
        let alpha = self.spec.alpha;
        let ta = t.powf(alpha);
        let xm = self.spec.xi_max;
        let z = -xm * xm * ta;
        let homogeneous = mittag_leffler(MLParams { rho: alpha, mu: alpha }, z).unwrap_or(1.0);
        let forced = mittag_leffler(
            MLParams {
                rho: alpha,
                mu: alpha + 1.0,
            },
            z,
        )
        .unwrap_or(1.0);
        let q = self
            .spec
            .source_time
            .value(0.0)
            .abs()
            .max(self.spec.source_time.value(t).abs());
        [-xm, xm]
            .iter()
            .map(|&xi| {
                let th = self.spec.tau.transform(self.spec.window_l, xi).unwrap_or_default();
                let fh = self.spec.source.transform(self.spec.window_l, xi).unwrap_or_default();
                INV_SQRT_2PI
                    * (self.gamma_alpha * ta / t * homogeneous.abs() * th.norm()
                        + ta * q * forced.abs() * fh.norm())
            })
            .fold(0.0, f64::max)
    }

    /// u(x, t) for t < 0 by d'Alembert over the window.
    pub fn eval_hyperbolic(&self, x: f64, t: f64) -> Result<f64> {
        let spec = self.spec.clone();
        let source = if spec.source.is_zero() {
            Source::Zero
        } else {
            Source::custom(move |x, t| spec.f_value(x, t), false)
        };
        eval_hyperbolic(&self.traces, &source, x, t)
    }

    /// u at any point of the window: transform for t > 0, d'Alembert for
    /// t < 0, τ on t = 0.
    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        let l = self.spec.window_l;
        if !(x.abs() <= l) {
            return Err(Error::OutOfRegion { x, t });
        }
        if t > 0.0 {
            Ok(self.eval_parabolic(x, t)?.value)
        } else if t < 0.0 {
            self.eval_hyperbolic(x, t)
        } else {
            Ok(self.spec.tau.value(x))
        }
    }
}

/// Convenience wrapper: builds the solution and evaluates one point.
pub fn eval_line_solution(spec: &LineSpec, x: f64, t: f64) -> Result<LineValue> {
    if !(x.abs() <= spec.window_l) {
        return Err(Error::OutOfRegion { x, t });
    }
    LineSolution::new(spec.clone())?.eval_parabolic(x, t)
}

/// Composite 16-point Gauss-Legendre nodes on [-ξ_max, ξ_max] with panels
/// no wider than π/(L · refinement).
fn frequency_nodes(spec: &LineSpec) -> (Vec<f64>, Vec<f64>) {
    let width = PI / spec.window_l / spec.refinement as f64;
    let panels = (2.0 * spec.xi_max / width).ceil().max(1.0) as usize;
    let rule = GaussLegendre::n16();
    let breaks = linspace(-spec.xi_max, spec.xi_max, panels + 1);
    let mut xi = Vec::with_capacity(16 * panels);
    let mut w = Vec::with_capacity(16 * panels);
    for p in breaks.windows(2) {
        let half = 0.5 * (p[1] - p[0]);
        let mid = 0.5 * (p[0] + p[1]);
        for (x, wx) in rule.nodes.iter().zip(&rule.weights) {
            xi.push(mid + half * x);
            w.push(half * wx);
        }
    }
    (xi, w)
}

fn transforms(h: &LineFunction, window_l: f64, xi: &[f64]) -> Result<Vec<Complex64>> {
    if h.is_zero() {
        return Ok(vec![Complex64::new(0.0, 0.0); xi.len()]);
    }
    xi.par_iter().map(|&x| h.transform(window_l, x)).collect()
}

fn line_traces(spec: &LineSpec) -> Result<TraceFunctions> {
    let l = spec.window_l;
    let x = linspace(-l, l, TRACE_GRID);
    let tau: Vec<f64> = x.iter().map(|&s| spec.tau.value(s)).collect();
    let g1 = gamma(1.0 + spec.alpha)?;
    let nu: Vec<f64> = x
        .iter()
        .map(|&s| {
            let d2 = spec.tau.second_derivative(s);
            if spec.alpha == 1.0 {
                d2 + spec.f_value(s, 0.0)
            } else {
                d2 / g1
            }
        })
        .collect();
    TraceFunctions::from_samples(spec.alpha, x, tau, nu)
}

/// exp(-x²/(2(1+2t)))/√(1+2t): heat evolution of exp(-x²/2).
pub fn gaussian_heat(x: f64, t: f64) -> f64 {
    let s = 1.0 + 2.0 * t;
    (-0.5 * x * x / s).exp() / s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_self_transform() {
        let g = LineFunction::custom(|x| (-0.5 * x * x).exp());
        for i in 0..=20 {
            let xi = -5.0 + 0.5 * i as f64;
            let v = fourier_transform(&g, 12.0, xi).unwrap();
            assert!((v.re - (-0.5 * xi * xi).exp()).abs() < 1e-8, "{xi}");
            assert!(v.im.abs() < 1e-12);
            let m = fourier_transform(&g, 12.0, -xi).unwrap();
            assert!((m - v.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_and_window_violation() {
        let v = fourier_transform(&LineFunction::Zero, 3.0, 1.0).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
        let g = LineFunction::standard_gaussian();
        assert!(matches!(
            fourier_transform(&g, 3.0, 1.0),
            Err(Error::WindowViolation { .. })
        ));
    }

    #[test]
    fn bump_closed_form_matches_quadrature() {
        let b = LineFunction::Bump { amplitude: 1.0 };
        let c = LineFunction::custom(|x| if x.abs() < 1.0 { (1.0 - x * x).powi(2) } else { 0.0 });
        for xi in [0.0, 0.3, 1.9, 2.0, 2.1, 7.5, 40.0] {
            let a = b.closed_form_transform(xi).unwrap().re;
            let q = fourier_transform(&b, 2.0, xi).unwrap().re;
            assert!((a - q).abs() < 1e-13, "{xi}: {a} vs {q}");
            // without the kink breakpoints the quadrature still agrees loosely
            let q2 = fourier_transform(&c, 2.0, xi).unwrap().re;
            assert!((a - q2).abs() < 1e-5, "{xi}");
        }
        assert!((b.closed_form_transform(0.0).unwrap().re - 16.0 / 15.0 * INV_SQRT_2PI).abs() < 1e-15);
    }

    #[test]
    fn heat_reduction_for_gaussian() {
        let spec = LineSpec::new(LineFunction::standard_gaussian(), 1.0, 12.0, 12.0).unwrap();
        let sol = LineSolution::new(spec).unwrap();
        for x in [0.0, 0.7, -2.0, 4.0] {
            let v = sol.eval_parabolic(x, 0.5).unwrap();
            assert!((v.value - gaussian_heat(x, 0.5)).abs() < 1e-10, "{x}");
            assert!(v.imaginary.abs() < 1e-12);
            assert!(!v.truncated);
        }
    }

    #[test]
    fn zero_data_is_zero() {
        let spec = LineSpec::new(LineFunction::Zero, 0.5, 2.0, 5.0).unwrap();
        let sol = LineSolution::new(spec).unwrap();
        assert_eq!(sol.eval_parabolic(0.3, 1.0).unwrap().value, 0.0);
        assert_eq!(sol.eval(0.3, -0.5).unwrap(), 0.0);
    }

    #[test]
    fn stationary_source_matches_duhamel() {
        let base = LineSpec::new(LineFunction::Zero, 0.6, 12.0, 10.0).unwrap();
        let a = base
            .clone()
            .with_source(LineFunction::standard_gaussian(), TimeFactor::Constant)
            .unwrap();
        let b = base
            .with_source(LineFunction::standard_gaussian(), TimeFactor::Linear { slope: 0.0 })
            .unwrap();
        let va = LineSolution::new(a).unwrap().eval_parabolic(0.4, 0.7).unwrap();
        let vb = LineSolution::new(b).unwrap().eval_parabolic(0.4, 0.7).unwrap();
        assert!((va.value - vb.value).abs() < 1e-9, "{} vs {}", va.value, vb.value);
    }

    #[test]
    fn hyperbolic_side_is_dalembert() {
        let spec = LineSpec::new(LineFunction::standard_gaussian(), 1.0, 12.0, 12.0).unwrap();
        let sol = LineSolution::new(spec).unwrap();
        // τ = e^{-x²/2}, ν = τ''
        let (x, t): (f64, f64) = (0.3, -0.8);
        let dp = |s: f64| -s * (-0.5 * s * s).exp();
        let want = 0.5 * ((-0.5 * (x + t) * (x + t)).exp() + (-0.5 * (x - t) * (x - t)).exp())
            - 0.5 * (dp(x - t) - dp(x + t));
        assert!((sol.eval(x, t).unwrap() - want).abs() < 1e-9);
    }

    #[test]
    fn rejects_slowly_decaying_data() {
        let b = LineFunction::Bump { amplitude: 1.0 };
        assert!(matches!(
            LineSpec::new(b, 0.5, 2.0, 5.0),
            Err(Error::InvalidSpec(_))
        ));
    }
}
