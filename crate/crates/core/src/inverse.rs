//! Recovery of the order α from one spectral observation at time t0.
//!
//! Bounded case: E(α) = ∫_0^1 u(x,t0) sin(k0πx) dx
//!                    = ½ (e_{λ,1}(α) τ_{k0} + e_{λ,2}(α) f_{k0}), λ = (k0π)².
//! Line case:    E(α) = (2π)^{-1/2} (e_{λ,1}(α) τ̂(ξ0) + e_{λ,2}(α) f̂(ξ0)), λ = ξ0².

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{e_lambda_1, e_lambda_2, EULER_GAMMA};

/// Consecutive differences must exceed this to count as strictly monotone.
pub const MONOTONE_THRESHOLD: f64 = 1e-14;
/// Step of the α-derivatives.
pub const DERIVATIVE_STEP: f64 = 1e-5;
/// Smallest admissible scan grid.
pub const MIN_SCAN_GRID: usize = 17;
/// Scan grid used as the gate of [`recover_alpha`].
pub const DEFAULT_SCAN_GRID: usize = 33;
/// Iteration cap of the root finder.
pub const MAX_ITERATIONS: usize = 200;
/// Bracket width below which bisection hands over to regula falsi.
pub const SECANT_BRACKET: f64 = 1e-3;

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Which spectral quantity is observed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObservationMode {
    /// sine mode k0 of the bounded problem
    Bounded { k0: u32 },
    /// frequency ξ0 of the line problem
    Line { xi0: f64 },
}

/// A single observation E(α*) = target and the data coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InverseObservation {
    pub mode: ObservationMode,
    pub t0: f64,
    pub target: f64,
    pub alpha0: f64,
    /// τ_{k0} or τ̂(ξ0)
    pub tau_coeff: f64,
    /// f_{k0} or f̂(ξ0)
    pub f_coeff: f64,
}

impl InverseObservation {
    pub fn new(
        mode: ObservationMode,
        t0: f64,
        target: f64,
        alpha0: f64,
        tau_coeff: f64,
        f_coeff: f64,
    ) -> Result<Self> {
        let obs = Self {
            mode,
            t0,
            target,
            alpha0,
            tau_coeff,
            f_coeff,
        };
        obs.validate()?;
        Ok(obs)
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            ObservationMode::Bounded { k0: 0 } => {
                return Err(Error::InvalidSpec("k0 must be a positive integer".into()))
            }
            ObservationMode::Line { xi0 } if !xi0.is_finite() => {
                return Err(Error::InvalidSpec(format!("xi0 must be finite, got {xi0}")))
            }
            _ => {}
        }
        if !(self.t0 > 0.0 && self.t0.is_finite()) {
            return Err(Error::InvalidSpec(format!("t0 must be positive, got {}", self.t0)));
        }
        if !(self.alpha0 > 0.0 && self.alpha0 < 1.0) {
            return Err(Error::InvalidSpec(format!(
                "alpha0 out of (0,1): {}",
                self.alpha0
            )));
        }
        if !self.target.is_finite() {
            return Err(Error::InvalidSpec(format!("d0 must be finite, got {}", self.target)));
        }
        if !(self.tau_coeff.is_finite() && self.f_coeff.is_finite()) {
            return Err(Error::InvalidSpec("coefficients must be finite".into()));
        }
        if self.tau_coeff == 0.0 && self.f_coeff == 0.0 {
            return Err(Error::InvalidSpec(
                "tau_coeff and f_coeff must not both vanish".into(),
            ));
        }
        Ok(())
    }

    /// λ = (k0π)² or ξ0².
    pub fn lambda(&self) -> f64 {
        match self.mode {
            ObservationMode::Bounded { k0 } => (k0 as f64 * PI).powi(2),
            ObservationMode::Line { xi0 } => xi0 * xi0,
        }
    }

    fn scale(&self) -> f64 {
        match self.mode {
            ObservationMode::Bounded { .. } => 0.5,
            ObservationMode::Line { .. } => INV_SQRT_2PI,
        }
    }

    /// Same data with another target.
    pub fn with_target(mut self, target: f64) -> Self {
        self.target = target;
        self
    }
}

/// The observable E(α).
pub fn observable_e(obs: &InverseObservation, alpha: f64) -> Result<f64> {
    let lambda = obs.lambda();
    let mut sum = 0.0;
    if obs.tau_coeff != 0.0 {
        sum += e_lambda_1(alpha, obs.t0, lambda)? * obs.tau_coeff;
    }
    if obs.f_coeff != 0.0 {
        sum += e_lambda_2(alpha, obs.t0, lambda)? * obs.f_coeff;
    }
    Ok(obs.scale() * sum)
}

/// T0 = e^{1-γ} e^{2/α0}, γ the Euler-Mascheroni constant.
pub fn t0_threshold(alpha0: f64) -> f64 {
    (1.0 - EULER_GAMMA + 2.0 / alpha0).exp()
}

/// dg/dα at α by central differences with one Richardson level, one-sided
/// (second order backward) at α = 1.
pub fn alpha_derivative<G: Fn(f64) -> Result<f64>>(g: G, alpha: f64) -> Result<f64> {
    let h = DERIVATIVE_STEP;
    let diff = |h: f64| -> Result<f64> {
        if alpha + h <= 1.0 {
            Ok((g(alpha + h)? - g(alpha - h)?) / (2.0 * h))
        } else {
            Ok((3.0 * g(alpha)? - 4.0 * g(alpha - h)? + g(alpha - 2.0 * h)?) / (2.0 * h))
        }
    };
    let coarse = diff(h)?;
    let fine = diff(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Result of a monotonicity scan on a uniform α-grid over [α0, 1].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub alpha: Vec<f64>,
    pub values: Vec<f64>,
    /// all consecutive differences share a sign and exceed the threshold
    pub strictly_monotone: bool,
    /// +1 increasing, -1 decreasing, 0 otherwise
    pub direction: i8,
    pub min: f64,
    pub max: f64,
    /// sign of dE/dα at each grid point
    pub derivative_signs: Vec<i8>,
    /// de_{λ,1}/dα and de_{λ,2}/dα at each grid point
    pub e1_derivative: Vec<f64>,
    pub e2_derivative: Vec<f64>,
    /// common sign of each component derivative over the grid, 0 if mixed
    pub e1_sign: i8,
    pub e2_sign: i8,
    pub t0_threshold: f64,
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

fn common_sign(v: &[f64]) -> i8 {
    if v.iter().all(|&d| d > 0.0) {
        1
    } else if v.iter().all(|&d| d < 0.0) {
        -1
    } else {
        0
    }
}

/// Uniform α-grid of m points on [α0, 1].
pub fn alpha_grid(alpha0: f64, m: usize) -> Vec<f64> {
    crate::quadrature::linspace(alpha0, 1.0, m)
}

/// Evaluates E and the component derivatives on an m-point grid.
pub fn monotonicity_scan(obs: &InverseObservation, grid_m: usize) -> Result<ScanReport> {
    if grid_m < MIN_SCAN_GRID {
        return Err(Error::InvalidSpec(format!(
            "scan grid must have at least {MIN_SCAN_GRID} points, got {grid_m}"
        )));
    }
    obs.validate()?;
    let alpha = alpha_grid(obs.alpha0, grid_m);
    let lambda = obs.lambda();
    let t0 = obs.t0;
    let rows: Vec<(f64, f64, f64, f64)> = alpha
        .par_iter()
        .map(|&a| {
            let e = observable_e(obs, a)?;
            let de = alpha_derivative(|b| observable_e(obs, b), a)?;
            let d1 = alpha_derivative(|b| e_lambda_1(b, t0, lambda), a)?;
            let d2 = alpha_derivative(|b| e_lambda_2(b, t0, lambda), a)?;
            Ok((e, de, d1, d2))
        })
        .collect::<Result<_>>()?;
    let values: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let increasing = diffs.iter().all(|&d| d > MONOTONE_THRESHOLD);
    let decreasing = diffs.iter().all(|&d| d < -MONOTONE_THRESHOLD);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let e1_derivative: Vec<f64> = rows.iter().map(|r| r.2).collect();
    let e2_derivative: Vec<f64> = rows.iter().map(|r| r.3).collect();
    Ok(ScanReport {
        strictly_monotone: increasing || decreasing,
        direction: if increasing {
            1
        } else if decreasing {
            -1
        } else {
            0
        },
        min,
        max,
        derivative_signs: rows.iter().map(|r| sign(r.1)).collect(),
        e1_sign: common_sign(&e1_derivative),
        e2_sign: common_sign(&e2_derivative),
        e1_derivative,
        e2_derivative,
        t0_threshold: t0_threshold(obs.alpha0),
        alpha,
        values,
    })
}

/// Whether the target lies in the attainable range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RangeVerdict {
    pub admissible: bool,
    pub min: f64,
    pub max: f64,
    /// distance from the target to the nearer end; negative outside
    pub margin: f64,
}

/// Range of E over [α0, 1] from the scan, refined by golden-section search
/// in the cells around interior extrema.
pub fn check_range(obs: &InverseObservation, grid_m: usize) -> Result<RangeVerdict> {
    let scan = monotonicity_scan(obs, grid_m)?;
    range_from_scan(obs, &scan)
}

/// Range verdict from an existing scan.
pub fn range_from_scan(obs: &InverseObservation, scan: &ScanReport) -> Result<RangeVerdict> {
    let (mut min, mut max) = (scan.min, scan.max);
    let n = scan.values.len();
    let argmin = (0..n)
        .min_by(|&i, &j| scan.values[i].total_cmp(&scan.values[j]))
        .unwrap_or(0);
    let argmax = (0..n)
        .max_by(|&i, &j| scan.values[i].total_cmp(&scan.values[j]))
        .unwrap_or(0);
    let e = |a: f64| observable_e(obs, a);
    if argmin > 0 && argmin + 1 < n {
        let v = golden_section(&e, scan.alpha[argmin - 1], scan.alpha[argmin + 1], 1.0)?;
        min = min.min(v);
    }
    if argmax > 0 && argmax + 1 < n {
        let v = golden_section(&e, scan.alpha[argmax - 1], scan.alpha[argmax + 1], -1.0)?;
        max = max.max(v);
    }
    let margin = (obs.target - min).min(max - obs.target);
    Ok(RangeVerdict {
        admissible: margin >= 0.0,
        min,
        max,
        margin,
    })
}

/// Extreme value of g on [a, b]: minimum for s = 1, maximum for s = -1.
fn golden_section<G: Fn(f64) -> Result<f64>>(g: &G, mut a: f64, mut b: f64, s: f64) -> Result<f64> {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut gc = s * g(c)?;
    let mut gd = s * g(d)?;
    for _ in 0..60 {
        if gc < gd {
            b = d;
            d = c;
            gd = gc;
            c = b - r * (b - a);
            gc = s * g(c)?;
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + r * (b - a);
            gd = s * g(d)?;
        }
        if b - a < 1e-12 {
            break;
        }
    }
    Ok(s * gc.min(gd))
}

/// Recovered order with the diagnostics of the search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Recovery {
    pub alpha: f64,
    pub iterations: usize,
    /// E(α) - target
    pub residual: f64,
    pub monotone: bool,
    pub range: [f64; 2],
}

/// α* ∈ [α0, 1] with E(α*) = target, after gating on strict monotonicity
/// and admissibility of the target.
pub fn recover_alpha(obs: &InverseObservation) -> Result<Recovery> {
    let scan = monotonicity_scan(obs, DEFAULT_SCAN_GRID)?;
    if !scan.strictly_monotone {
        return Err(Error::NotMonotone {
            alpha0: obs.alpha0,
            suggested_t0: t0_threshold(obs.alpha0),
        });
    }
    let verdict = range_from_scan(obs, &scan)?;
    if !verdict.admissible {
        return Err(Error::OutOfRange {
            target: obs.target,
            min: verdict.min,
            max: verdict.max,
        });
    }
    let tol = 1e-12 * obs.target.abs().max(1.0);
    let f = |a: f64| observable_e(obs, a).map(|e| e - obs.target);
    let done = |alpha: f64, residual: f64, iterations: usize| Recovery {
        alpha,
        iterations,
        residual,
        monotone: true,
        range: [verdict.min, verdict.max],
    };

    let (mut a, mut b) = (obs.alpha0, 1.0);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok(done(a, fa, 0));
    }
    if fb == 0.0 {
        return Ok(done(b, fb, 0));
    }
    // true values at the bracket ends; fa, fb carry the Illinois weights
    let (mut ta, mut tb) = (fa, fb);
    let mut last_side = 0i8;
    for it in 1..=MAX_ITERATIONS {
        let width = b - a;
        let mut x = if width > SECANT_BRACKET {
            0.5 * (a + b)
        } else {
            b - fb * (b - a) / (fb - fa)
        };
        if !(x > a && x < b) {
            x = 0.5 * (a + b);
        }
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(done(x, fx, it));
        }
        if (fx > 0.0) == (ta > 0.0) {
            a = x;
            fa = fx;
            ta = fx;
            if last_side == -1 {
                fb *= 0.5;
            }
            last_side = -1;
        } else {
            b = x;
            fb = fx;
            tb = fx;
            if last_side == 1 {
                fa *= 0.5;
            }
            last_side = 1;
        }
        let (best, fbest) = if ta.abs() <= tb.abs() { (a, ta) } else { (b, tb) };
        let collapsed = b - a <= 4.0 * f64::EPSILON * b.abs();
        if collapsed || (fbest.abs() <= tol && b - a <= 1e-13) {
            if fbest.abs() > tol {
                return Err(Error::NonConvergence { iterations: it });
            }
            return Ok(done(best, fbest, it));
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounded(t0: f64, tau: f64, f: f64, alpha0: f64) -> InverseObservation {
        InverseObservation::new(ObservationMode::Bounded { k0: 1 }, t0, 0.0, alpha0, tau, f)
            .unwrap()
    }

    #[test]
    fn threshold_values() {
        for (a0, want) in [
            (1.0, 11.277_215_188_056_553),
            (0.5, 83.327_975_664_262_64),
            (0.25, 4_549.553_317_275_6),
        ] {
            assert!((t0_threshold(a0) / want - 1.0).abs() < 1e-14, "{a0}");
        }
    }

    #[test]
    fn exponential_case() {
        let obs = bounded(1.0, 1.0, 0.0, 0.5);
        let e = observable_e(&obs, 1.0).unwrap();
        assert!((e - 0.5 * (-PI * PI).exp()).abs() < 1e-18);
    }

    #[test]
    fn validation() {
        let m = ObservationMode::Bounded { k0: 1 };
        assert!(InverseObservation::new(m, 1.0, 0.0, 0.5, 0.0, 0.0).is_err());
        assert!(InverseObservation::new(m, -1.0, 0.0, 0.5, 1.0, 0.0).is_err());
        assert!(InverseObservation::new(m, 1.0, 0.0, 1.0, 1.0, 0.0).is_err());
        assert!(InverseObservation::new(ObservationMode::Bounded { k0: 0 }, 1.0, 0.0, 0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn round_trip_and_endpoint() {
        let obs = bounded(15.0, 1.0, 0.0, 0.5);
        for star in [0.7, 1.0, 0.5] {
            let d0 = observable_e(&obs, star).unwrap();
            let r = recover_alpha(&obs.with_target(d0)).unwrap();
            assert!((r.alpha - star).abs() < 1e-10, "{star}: {r:?}");
        }
    }

    #[test]
    fn out_of_range_reports_range() {
        let obs = bounded(15.0, 1.0, 0.0, 0.5);
        let scan = monotonicity_scan(&obs, 33).unwrap();
        match recover_alpha(&obs.with_target(scan.max + 1.0)) {
            Err(Error::OutOfRange { min, max, .. }) => {
                assert!(scan.values.iter().all(|&v| v >= min && v <= max));
            }
            other => panic!("{other:?}"),
        }
        let v = check_range(&obs.with_target(scan.values[0]), 33).unwrap();
        assert!(v.admissible && v.margin == 0.0);
    }

    #[test]
    fn golden_section_finds_interior_extremum() {
        let v = golden_section(&|a: f64| Ok((a - 0.3).powi(2) + 1.0), 0.0, 1.0, 1.0).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        let v = golden_section(&|a: f64| Ok(-(a - 0.3).powi(2)), 0.0, 1.0, -1.0).unwrap();
        assert!(v.abs() < 1e-15);
    }
}
