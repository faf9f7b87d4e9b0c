//! Residual checks of a computed solution: gluing across t = 0, boundary
//! and characteristic data, and both field equations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::quadrature::{extrapolate_to_zero, GaussLegendre};
use crate::special::gamma;

use super::spectral::{eigenvalue, sine_sum, SpectralSolution};

/// Step of the finite-difference wave residual.
pub const WAVE_STEP: f64 = 1e-3;

/// Sampling of the residual checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportGrid {
    /// grid nodes used for the gluing and characteristic checks
    pub trace_points: usize,
    /// times at which the boundary conditions are checked
    pub boundary_times: usize,
    /// random interior points of the hyperbolic region
    pub wave_points: usize,
    /// random times and abscissae of the parabolic check
    pub subdiffusion_times: usize,
    pub subdiffusion_x: usize,
    pub seed: u64,
}

impl Default for ReportGrid {
    fn default() -> Self {
        Self {
            trace_points: 33,
            boundary_times: 8,
            wave_points: 50,
            subdiffusion_times: 4,
            subdiffusion_x: 5,
            seed: 0,
        }
    }
}

impl ReportGrid {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// Max-norm residuals; all entries are data, none is enforced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    /// |lim_{t→0⁺} t^{1-α} u - lim_{t→0⁻} u|
    pub gluing_value: f64,
    /// |lim_{t→0⁻} u_t - τ''/Γ(1+α)| (with + f(x,0) when α = 1)
    pub gluing_derivative: f64,
    /// |u(0,t)|, |u(1,t)| for t > 0
    pub boundary: f64,
    /// |u(x/2, -x/2) - ψ(x)|
    pub characteristic: f64,
    /// |u_tt - u_xx - f| at random points with t < 0
    pub wave: f64,
    /// |∂_t^α u - u_xx - f| at random points with t > 0
    pub subdiffusion: f64,
    /// ‖ν - τ''/Γ(1+α)‖ on the grid
    pub first_relation: f64,
    /// ‖τ' - ν - 2ψ' + F'‖ on the grid
    pub second_relation: f64,
    /// ‖Σ τ_k sin(kπx) - τ‖ on the grid
    pub reconstruction: f64,
    /// ν(0) and ν(1)
    pub nu_boundary: [f64; 2],
}

impl ResidualReport {
    /// The six residuals checked against the solution itself.
    pub fn max_residual(&self) -> f64 {
        [
            self.gluing_value,
            self.gluing_derivative,
            self.boundary,
            self.characteristic,
            self.wave,
            self.subdiffusion,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Evaluates all residuals of `sol` on the sampling `grid`.
pub fn verify_solution(sol: &SpectralSolution, grid: &ReportGrid) -> Result<ResidualReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let (gluing_value, gluing_derivative) = gluing(sol, grid)?;
    Ok(ResidualReport {
        gluing_value,
        gluing_derivative,
        boundary: boundary(sol, grid)?,
        characteristic: characteristic(sol, grid)?,
        wave: wave(sol, grid, &mut rng)?,
        subdiffusion: subdiffusion(sol, grid, &mut rng)?,
        first_relation: sol.traces.diagnostics.first_relation,
        second_relation: sol.traces.diagnostics.second_relation,
        reconstruction: sol.reconstruction_error(),
        nu_boundary: sol.traces.diagnostics.nu_boundary,
    })
}

/// Grid indices used by the trace-based checks, endpoints included.
fn trace_indices(sol: &SpectralSolution, points: usize) -> Vec<usize> {
    let n = sol.traces.x.len();
    let points = points.clamp(2, n);
    let mut idx: Vec<usize> = (0..points)
        .map(|i| ((i as f64) * (n - 1) as f64 / (points - 1) as f64).round() as usize)
        .collect();
    idx.dedup();
    idx
}

fn gluing(sol: &SpectralSolution, grid: &ReportGrid) -> Result<(f64, f64)> {
    let alpha = sol.alpha();
    let idx = trace_indices(sol, grid.trace_points);
    let xs: Vec<f64> = idx.iter().map(|&i| sol.traces.x[i]).collect();
    let eps = [1e-3, 1e-4, 1e-5];

    // Parabolic side: t^{1-α} u is a series in t^α whose scale is set by the
    // highest mode, so the limit is sampled at λ_N t^α = ε.
    let lambda_n = eigenvalue(sol.modes());
    let weighted: Vec<Vec<f64>> = eps
        .iter()
        .map(|&s| {
            let t = (s / lambda_n).powf(1.0 / alpha);
            let amps = sol.weighted_mode_amplitudes(t)?;
            Ok(xs.iter().map(|&x| sine_sum(&amps, x)).collect())
        })
        .collect::<Result<_>>()?;

    let mut value: f64 = 0.0;
    let mut derivative: f64 = 0.0;
    let gamma1 = gamma(1.0 + alpha)?;
    let tau = &sol.traces.tau;
    let n = tau.len();
    let h = sol.traces.x[1] - sol.traces.x[0];
    for (j, (&i, &x)) in idx.iter().zip(&xs).enumerate() {
        let plus = extrapolate_to_zero(&eps, &[weighted[0][j], weighted[1][j], weighted[2][j]]);
        let interior = x > 0.0 && x < 1.0;
        let minus = if interior {
            let u: Vec<f64> = eps
                .iter()
                .map(|&e| {
                    let e = e.min(x).min(1.0 - x);
                    sol.eval_hyperbolic(x, -e)
                })
                .collect::<Result<_>>()?;
            extrapolate_to_zero(&eps, &u)
        } else {
            sol.traces.tau_at(x)
        };
        value = value.max((plus - minus).abs());

        // ν from the hyperbolic solution against the parabolic prediction.
        if i >= 2 && i + 2 < n {
            let ut: Vec<f64> = eps
                .iter()
                .map(|&e| {
                    let a = sol.eval_hyperbolic(x, -0.5 * e)?;
                    let b = sol.eval_hyperbolic(x, -1.5 * e)?;
                    Ok((a - b) / e)
                })
                .collect::<Result<_>>()?;
            let nu_minus = extrapolate_to_zero(&eps, &ut);
            let d2 = (-(tau[i + 2] + tau[i - 2]) + 16.0 * (tau[i + 1] + tau[i - 1])
                - 30.0 * tau[i])
                / (12.0 * h * h);
            let predicted = if alpha == 1.0 {
                d2 + sol.spec.source.value(x, 0.0)
            } else {
                d2 / gamma1
            };
            derivative = derivative.max((nu_minus - predicted).abs());
        }
    }
    Ok((value, derivative))
}

fn boundary(sol: &SpectralSolution, grid: &ReportGrid) -> Result<f64> {
    let m = grid.boundary_times.max(1);
    let mut worst: f64 = 0.0;
    for i in 0..m {
        // log-spaced on [1e-3, 1]
        let t = if m == 1 {
            1.0
        } else {
            10f64.powf(-3.0 + 3.0 * i as f64 / (m - 1) as f64)
        };
        let amps = sol.mode_amplitudes(t)?;
        worst = worst
            .max(sine_sum(&amps, 0.0).abs())
            .max(sine_sum(&amps, 1.0).abs());
    }
    Ok(worst)
}

fn characteristic(sol: &SpectralSolution, grid: &ReportGrid) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for i in trace_indices(sol, grid.trace_points) {
        let x = sol.traces.x[i];
        let u = if x > 0.0 {
            sol.eval_hyperbolic(0.5 * x, -0.5 * x)?
        } else {
            sol.traces.tau_at(0.0)
        };
        worst = worst.max((u - sol.spec.psi.value(x)).abs());
    }
    Ok(worst)
}

fn wave(sol: &SpectralSolution, grid: &ReportGrid, rng: &mut ChaCha8Rng) -> Result<f64> {
    let h = WAVE_STEP;
    let margin = 3.0 * h;
    let mut worst: f64 = 0.0;
    let mut accepted = 0;
    while accepted < grid.wave_points {
        let x: f64 = rng.gen_range(margin..1.0 - margin);
        let t: f64 = -rng.gen_range(margin..0.5);
        if x + t < margin || x - t > 1.0 - margin {
            continue;
        }
        accepted += 1;
        let u = |a: f64, b: f64| sol.eval_hyperbolic(a, b);
        let c = u(x, t)?;
        let utt = (u(x, t + h)? - 2.0 * c + u(x, t - h)?) / (h * h);
        let uxx = (u(x + h, t)? - 2.0 * c + u(x - h, t)?) / (h * h);
        worst = worst.max((utt - uxx - sol.spec.source.value(x, t)).abs());
    }
    Ok(worst)
}

fn subdiffusion(sol: &SpectralSolution, grid: &ReportGrid, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..grid.subdiffusion_times {
        // log-uniform on [1e-2, 1]
        let t = 10f64.powf(rng.gen_range(-2.0..0.0));
        let residual_modes = mode_residuals(sol, t)?;
        let forcing = sol.source_coefficients(t)?;
        for _ in 0..grid.subdiffusion_x {
            let x: f64 = rng.gen_range(0.05..0.95);
            // Σ r_k sin(kπx) plus the part of f the N modes do not carry.
            let r = sine_sum(&residual_modes, x) + sine_sum(&forcing, x)
                - sol.spec.source.value(x, t);
            worst = worst.max(r.abs());
        }
    }
    Ok(worst)
}

/// ∂_t^α u_k + λ_k u_k - f_k for every mode at time t.
pub fn mode_residuals(sol: &SpectralSolution, t: f64) -> Result<Vec<f64>> {
    let alpha = sol.alpha();
    let delta = 1e-2 * t;
    let derivative: Vec<f64> = if alpha == 1.0 {
        central_richardson(|s| sol.mode_amplitudes(s), t, delta)?
    } else {
        central_richardson(|s| rl_integral(sol, s), t, delta)?
    };
    let u = sol.mode_amplitudes(t)?;
    let f = sol.source_coefficients(t)?;
    Ok((0..u.len())
        .map(|i| derivative[i] + eigenvalue(i + 1) * u[i] - f[i])
        .collect())
}

fn central_richardson<F>(g: F, t: f64, delta: f64) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<Vec<f64>>,
{
    let diff = |d: f64| -> Result<Vec<f64>> {
        let a = g(t + d)?;
        let b = g(t - d)?;
        Ok(a.iter().zip(&b).map(|(p, m)| (p - m) / (2.0 * d)).collect())
    };
    let coarse = diff(delta)?;
    let fine = diff(0.5 * delta)?;
    Ok(fine
        .iter()
        .zip(&coarse)
        .map(|(f, c)| (4.0 * f - c) / 3.0)
        .collect())
}

/// I^{1-α} u_k(t) = (1/Γ(1-α)) ∫_0^t (t-s)^{-α} u_k(s) ds for all modes.
///
/// With w = s^{1-α} u_k (smooth in s^α) and s = t v^{1/α},
///   I^{1-α} u_k(t) = 1/(α Γ(1-α)) ∫_0^1 w(t v^{1/α}) (1 - v^{1/α})^{-α} dv.
/// [0, 1/2] is split geometrically towards v = 0, where the fastest mode
/// varies on the scale 1/(λ_N t^α); on [1/2, 1] the substitution
/// 1 - v = y^p, p = 2/(1-α), turns the endpoint singularity into p·y.
pub fn rl_integral(sol: &SpectralSolution, t: f64) -> Result<Vec<f64>> {
    let alpha = sol.alpha();
    let rule = GaussLegendre::n16();
    let mut nodes: Vec<(f64, f64)> = Vec::new();

    let scale = eigenvalue(sol.modes()) * t.powf(alpha);
    let v_min = (1e-3 / scale).min(1e-3);
    let mut b = 0.5;
    while b > v_min {
        let a = 0.5 * b;
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = mid + half * x;
            let kernel = (-(v.ln() / alpha).exp_m1()).powf(-alpha);
            nodes.push((v, w * half * kernel));
        }
        b = a;
    }
    // [0, b]: the integrand is bounded there and the interval negligible
    // in width, so a single panel suffices.
    {
        let half = 0.5 * b;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let v = half + half * x;
            let kernel = (-(v.ln() / alpha).exp_m1()).powf(-alpha);
            nodes.push((v, w * half * kernel));
        }
    }
    let p = 2.0 / (1.0 - alpha);
    let y_max = 0.5f64.powf(1.0 / p);
    let panels = 4;
    for j in 0..panels {
        let a = y_max * j as f64 / panels as f64;
        let c = y_max * (j + 1) as f64 / panels as f64;
        let half = 0.5 * (c - a);
        let mid = 0.5 * (a + c);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let y = mid + half * x;
            let one_minus_v = y.powf(p);
            let v = 1.0 - one_minus_v;
            // R = (1 - v^{1/α}) / (1 - v)
            let r = -((-one_minus_v).ln_1p() / alpha).exp_m1() / one_minus_v;
            nodes.push((v, w * half * p * y * r.powf(-alpha)));
        }
    }

    let norm = 1.0 / (alpha * gamma(1.0 - alpha)?);
    let mut acc = vec![0.0; sol.modes()];
    for (v, w) in nodes {
        let s = t * v.powf(1.0 / alpha);
        let amps = sol.weighted_mode_amplitudes(s)?;
        for (a, wk) in acc.iter_mut().zip(amps) {
            *a += w * wk;
        }
    }
    Ok(acc.into_iter().map(|v| v * norm).collect())
}
