//! Sine-series solution in the parabolic region t > 0:
//!
//!   u(x,t) = Σ_k [Γ(α) t^{α-1} E_{α,α}(-λ_k t^α) τ_k
//!                 + ∫_0^t η^{α-1} E_{α,α}(-λ_k η^α) f_k(t-η) dη] sin(kπx),
//!
//! with λ_k = (kπ)².

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::profile::{Source, TimeFactor};
use crate::special::{gamma, mittag_leffler, MLParams, DECAY_CONSTANT};

use super::hyperbolic::eval_hyperbolic;
use super::problem::ProblemSpec;
use super::traces::TraceFunctions;

/// Boundary tolerance accepted by [`sine_coefficients`].
pub const SINE_BOUNDARY_TOLERANCE: f64 = 1e-6;

/// Panels of the product-integration rule for time-dependent sources.
const DUHAMEL_PANELS: usize = 128;

/// b_k = 2 ∫_0^1 h(x) sin(kπx) dx, k = 1..N, for samples of h on a uniform
/// grid over [0, 1], by the trapezoid rule (a type-I discrete sine
/// transform), so that h(x) ≈ Σ b_k sin(kπx).
pub fn sine_coefficients(h: &[f64], modes: usize) -> Result<Vec<f64>> {
    let len = h.len();
    if len < 3 {
        return Err(Error::InvalidSpec(format!(
            "sine coefficients need at least 3 samples, got {len}"
        )));
    }
    if modes > len / 2 {
        return Err(Error::Aliasing { modes, grid: len });
    }
    let (h0, h1) = (h[0], h[len - 1]);
    if h0.abs() > SINE_BOUNDARY_TOLERANCE || h1.abs() > SINE_BOUNDARY_TOLERANCE {
        return Err(Error::InvalidSpec(format!(
            "function must vanish at both ends for a sine expansion (got {h0:e}, {h1:e})"
        )));
    }
    let m = len - 1;
    // sin(π j / m) for j = 0..2m, indexed by (k i) mod 2m.
    let table: Vec<f64> = (0..2 * m)
        .map(|j| {
            // Fold into [0, m/2] for accuracy.
            let (jj, sign) = if j > m { (j - m, -1.0) } else { (j, 1.0) };
            let jj = jj.min(m - jj);
            sign * (PI * jj as f64 / m as f64).sin()
        })
        .collect();
    let scale = 2.0 / m as f64;
    Ok((1..=modes)
        .map(|k| {
            let mut acc = 0.0;
            for (i, &hi) in h.iter().enumerate().take(m).skip(1) {
                acc += hi * table[(k * i) % (2 * m)];
            }
            scale * acc
        })
        .collect())
}

/// λ_k = (kπ)²
pub fn eigenvalue(k: usize) -> f64 {
    let w = k as f64 * PI;
    w * w
}

/// How the source enters the mode equations.
#[derive(Debug, Clone)]
enum Forcing {
    None,
    /// f(x) with coefficients f_k
    Stationary(Vec<f64>),
    /// p(x) q(t) with coefficients p_k
    Separable(Vec<f64>, TimeFactor),
    /// general f(x, t), coefficients recomputed on demand
    General,
}

/// A parabolic value with its truncation error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolicValue {
    pub value: f64,
    pub tail: f64,
}

/// Sine coefficients and traces of a built problem; evaluates u on both
/// sides of the type-change line.
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    pub spec: ProblemSpec,
    pub traces: TraceFunctions,
    /// τ_k, k = 1..N
    pub tau_k: Vec<f64>,
    /// f_k (stationary source) or p_k (separable source), k = 1..N; zeros
    /// otherwise
    pub f_k: Vec<f64>,
    forcing: Forcing,
    /// coefficients N+1..grid/2, for the tail estimate
    tau_tail: Vec<f64>,
    f_tail: Vec<f64>,
    gamma_alpha: f64,
}

impl SpectralSolution {
    /// Traces and coefficients of `spec`.
    pub fn new(spec: ProblemSpec) -> Result<Self> {
        let traces = TraceFunctions::build(&spec)?;
        Self::from_traces(spec, traces)
    }

    pub fn from_traces(spec: ProblemSpec, traces: TraceFunctions) -> Result<Self> {
        spec.validate()?;
        let n = spec.modes;
        let kmax = spec.grid_n / 2;
        let all_tau = sine_coefficients(&traces.tau, kmax)?;
        let x = spec.grid();
        let (forcing, all_f) = match &spec.source {
            s if s.is_zero() => (Forcing::None, vec![0.0; kmax]),
            Source::Separable { space, time } => {
                let samples: Vec<f64> = x.iter().map(|&v| space.value(v)).collect();
                let c = sine_coefficients(&samples, kmax)?;
                if matches!(time, TimeFactor::Constant) {
                    (Forcing::Stationary(c[..n].to_vec()), c)
                } else {
                    (Forcing::Separable(c[..n].to_vec(), *time), c)
                }
            }
            s if s.is_time_independent() => {
                let samples: Vec<f64> = x.iter().map(|&v| s.value(v, 0.0)).collect();
                let c = sine_coefficients(&samples, kmax)?;
                (Forcing::Stationary(c[..n].to_vec()), c)
            }
            s => {
                let samples: Vec<f64> = x.iter().map(|&v| s.value(v, 0.0)).collect();
                (Forcing::General, sine_coefficients(&samples, kmax)?)
            }
        };
        Ok(Self {
            gamma_alpha: gamma(spec.alpha)?,
            tau_k: all_tau[..n].to_vec(),
            f_k: all_f[..n].to_vec(),
            tau_tail: all_tau[n..].to_vec(),
            f_tail: all_f[n..].to_vec(),
            forcing,
            spec,
            traces,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.spec.alpha
    }

    pub fn modes(&self) -> usize {
        self.tau_k.len()
    }

    /// Max-norm error of Σ τ_k sin(kπx) against τ on the grid.
    pub fn reconstruction_error(&self) -> f64 {
        let x = &self.traces.x;
        x.iter()
            .zip(&self.traces.tau)
            .map(|(&xi, &ti)| (sine_sum(&self.tau_k, xi) - ti).abs())
            .fold(0.0, f64::max)
    }

    /// f_k(s) for every mode.
    pub fn source_coefficients(&self, s: f64) -> Result<Vec<f64>> {
        let n = self.modes();
        match &self.forcing {
            Forcing::None => Ok(vec![0.0; n]),
            Forcing::Stationary(c) => Ok(c.clone()),
            Forcing::Separable(c, q) => {
                let qs = q.value(s);
                Ok(c.iter().map(|v| v * qs).collect())
            }
            Forcing::General => {
                let samples: Vec<f64> = self
                    .traces
                    .x
                    .iter()
                    .map(|&v| self.spec.source.value(v, s))
                    .collect();
                sine_coefficients(&samples, n)
            }
        }
    }

    /// t^{1-α} u_k(t) for every mode.
    pub fn weighted_mode_amplitudes(&self, t: f64) -> Result<Vec<f64>> {
        if !(t > 0.0) {
            return Err(Error::OutOfRegion { x: f64::NAN, t });
        }
        let alpha = self.alpha();
        let ta = t.powf(alpha);
        let homogeneous: Vec<f64> = (1..=self.modes())
            .into_par_iter()
            .map(|k| {
                let z = -eigenvalue(k) * ta;
                let e = mittag_leffler(MLParams { rho: alpha, mu: alpha }, z)?;
                Ok(self.gamma_alpha * e * self.tau_k[k - 1])
            })
            .collect::<Result<_>>()?;
        let forced = match &self.forcing {
            Forcing::None => vec![0.0; self.modes()],
            Forcing::Stationary(c) => (1..=self.modes())
                .into_par_iter()
                .map(|k| {
                    let z = -eigenvalue(k) * ta;
                    let e = mittag_leffler(
                        MLParams {
                            rho: alpha,
                            mu: alpha + 1.0,
                        },
                        z,
                    )?;
                    Ok(t * e * c[k - 1])
                })
                .collect::<Result<_>>()?,
            _ => {
                let d = self.duhamel(t)?;
                let w = t.powf(1.0 - alpha);
                d.into_iter().map(|v| v * w).collect()
            }
        };
        Ok(homogeneous.iter().zip(&forced).map(|(a, b)| a + b).collect())
    }

    /// u_k(t) for every mode.
    pub fn mode_amplitudes(&self, t: f64) -> Result<Vec<f64>> {
        let w = t.powf(self.alpha() - 1.0);
        Ok(self
            .weighted_mode_amplitudes(t)?
            .into_iter()
            .map(|v| v * w)
            .collect())
    }

    /// ∫_0^t η^{α-1} E_{α,α}(-λ_k η^α) f_k(t-η) dη for every mode.
    fn duhamel(&self, t: f64) -> Result<Vec<f64>> {
        let eta = duhamel_nodes(t);
        let phi: Vec<Vec<f64>> = eta
            .iter()
            .map(|&e| self.source_coefficients(t - e))
            .collect::<Result<_>>()?;
        (1..=self.modes())
            .into_par_iter()
            .map(|k| duhamel_product(self.alpha(), eigenvalue(k), &eta, |j| phi[j][k - 1]))
            .collect()
    }

    /// Truncation error bar for the modes beyond N, from |E| ≤ C/(1+|z|)
    /// and the coefficients the grid still resolves.
    fn tail(&self, t: f64) -> f64 {
        let alpha = self.alpha();
        let ta = t.powf(alpha);
        let n = self.modes();
        let q = match &self.forcing {
            Forcing::Separable(_, q) => q.value(0.0).abs().max(q.value(t).abs()),
            _ => 1.0,
        };
        self.tau_tail
            .iter()
            .zip(&self.f_tail)
            .enumerate()
            .map(|(i, (&tk, &fk))| {
                let decay = DECAY_CONSTANT / (1.0 + eigenvalue(n + 1 + i) * ta);
                decay * (self.gamma_alpha * ta / t * tk.abs() + ta * q * fk.abs())
            })
            .sum()
    }

    /// u(x, t) for t > 0 with its tail estimate.
    pub fn eval_parabolic_with_tail(&self, x: f64, t: f64) -> Result<ParabolicValue> {
        check_x(x, t)?;
        let amps = self.mode_amplitudes(t)?;
        Ok(ParabolicValue {
            value: sine_sum(&amps, x),
            tail: self.tail(t),
        })
    }

    /// u(x, t) for t > 0.
    pub fn eval_parabolic(&self, x: f64, t: f64) -> Result<f64> {
        check_x(x, t)?;
        Ok(sine_sum(&self.mode_amplitudes(t)?, x))
    }

    /// t^{1-α} u(x, t) for t > 0; finite as t → 0⁺.
    pub fn eval_weighted(&self, x: f64, t: f64) -> Result<f64> {
        check_x(x, t)?;
        Ok(sine_sum(&self.weighted_mode_amplitudes(t)?, x))
    }

    /// u(x, t) on a set of abscissae at one positive time.
    pub fn parabolic_field(&self, xs: &[f64], t: f64) -> Result<Vec<f64>> {
        for &x in xs {
            check_x(x, t)?;
        }
        let amps = self.mode_amplitudes(t)?;
        Ok(xs.par_iter().map(|&x| sine_sum(&amps, x)).collect())
    }

    /// u(x, t) in the hyperbolic region t < 0.
    pub fn eval_hyperbolic(&self, x: f64, t: f64) -> Result<f64> {
        eval_hyperbolic(&self.traces, &self.spec.source, x, t)
    }

    /// u(x, t) on either side; t = 0 returns τ(x).
    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        if t > 0.0 {
            self.eval_parabolic(x, t)
        } else if t < 0.0 {
            self.eval_hyperbolic(x, t)
        } else {
            check_x(x, t)?;
            Ok(self.traces.tau_at(x))
        }
    }
}

fn check_x(x: f64, t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfRegion { x, t })
    }
}

/// Σ_k c_k sin(kπx), summed in mode order.
pub fn sine_sum(c: &[f64], x: f64) -> f64 {
    // sin(kπx) by the Chebyshev recurrence would drift for high k; use the
    // angle-addition form with a periodic reset.
    let (s1, c1) = (PI * x).sin_cos();
    let mut s = 0.0;
    let mut co = 1.0;
    let mut acc = 0.0;
    for (i, &ck) in c.iter().enumerate() {
        let k = i + 1;
        if k % 32 == 1 {
            let (sk, ck_) = (k as f64 * PI * x).sin_cos();
            s = sk;
            co = ck_;
        } else {
            let ns = s * c1 + co * s1;
            co = co * c1 - s * s1;
            s = ns;
        }
        acc += ck * s;
    }
    acc
}

/// Uniform nodes of the product-integration rule on [0, t].
pub(crate) fn duhamel_nodes(t: f64) -> Vec<f64> {
    let p = DUHAMEL_PANELS;
    (0..=p).map(|j| t * j as f64 / p as f64).collect()
}

/// ∫_0^t η^{α-1} E_{α,α}(-λη^α) φ(η) dη by product integration on the
/// uniform nodes `eta` (from [`duhamel_nodes`]), with φ(eta[j]) = phi(j):
/// φ is linear on each panel and the weight is integrated exactly through
/// the moments
///   M₀(η) = η^α E_{α,α+1}(-λη^α),
///   M₁(η) = η M₀(η) - η^{α+1} E_{α,α+2}(-λη^α).
/// One Richardson step between P and P/2 panels removes the h² term.
pub(crate) fn duhamel_product<F: Fn(usize) -> f64>(
    alpha: f64,
    lambda: f64,
    eta: &[f64],
    phi: F,
) -> Result<f64> {
    let p = eta.len() - 1;
    let mut m0 = vec![0.0; p + 1];
    let mut m1 = vec![0.0; p + 1];
    for j in 1..=p {
        let e = eta[j];
        let ea = e.powf(alpha);
        let z = -lambda * ea;
        let a = mittag_leffler(
            MLParams {
                rho: alpha,
                mu: alpha + 1.0,
            },
            z,
        )?;
        let b = mittag_leffler(
            MLParams {
                rho: alpha,
                mu: alpha + 2.0,
            },
            z,
        )?;
        m0[j] = ea * a;
        m1[j] = e * m0[j] - e * ea * b;
    }
    let rule = |stride: usize| {
        let mut acc = 0.0;
        let mut j = 0;
        while j < p {
            let (l, r) = (j, j + stride);
            let h = eta[r] - eta[l];
            let d0 = m0[r] - m0[l];
            let d1 = m1[r] - m1[l];
            let (fl, fr) = (phi(l), phi(r));
            acc += fl * d0 + (fr - fl) / h * (d1 - eta[l] * d0);
            j += stride;
        }
        acc
    };
    Ok((4.0 * rule(1) - rule(2)) / 3.0)
}
