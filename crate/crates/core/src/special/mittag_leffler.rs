//! Two-parameter Mittag-Leffler function E_{ρ,μ}(z) on the real line.
//!
//! Routes, chosen per argument:
//! * closed forms for ρ = 1 with integer μ ≤ 2;
//! * the power series where it converges without heavy cancellation
//!   (all z ≥ 0, and z < 0 with |z|^{1/ρ} small);
//! * the algebraic asymptotic expansion for large negative z, accepted only
//!   when its smallest term certifies the tolerance;
//! * otherwise, for ρ < 1, a real integral representation on (0, ∞) with an
//!   adaptive error estimate, and for ρ = 1 an elementary integral or
//!   recurrence.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::gamma::{gamma, ln_rgamma_abs, rgamma, sin_pi};
use crate::error::{Error, Result};
use crate::quadrature::Adaptive;

/// Absolute accuracy target of [`mittag_leffler`] (relative once |E| > 1).
pub const ML_TOLERANCE: f64 = 1e-10;

/// Empirical constant in |E_{ρ,μ}(-t)| ≤ C (1 + t)^{-1}.
pub const DECAY_CONSTANT: f64 = 10.0;

const SERIES_MAX_TERMS: usize = 400_000;
const SERIES_NEGATIVE_LIMIT: f64 = 3.0;
const INTEGRAL_CERTIFY: f64 = 1e-12;

/// Parameters (ρ, μ) of E_{ρ,μ}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    pub rho: f64,
    pub mu: f64,
}

impl MLParams {
    /// Validated parameters; ρ must lie in (0, 1] and μ must be finite.
    pub fn new(rho: f64, mu: f64) -> Result<Self> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::Domain {
                function: "mittag_leffler (rho)",
                value: rho,
            });
        }
        if !mu.is_finite() {
            return Err(Error::Domain {
                function: "mittag_leffler (mu)",
                value: mu,
            });
        }
        Ok(Self { rho, mu })
    }
}

/// Evaluation route taken for one value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Series,
    Asymptotic,
    Integral,
    Recurrence,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::Integral => "integral",
            Method::Recurrence => "recurrence",
        }
    }
}

/// A value together with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub method: Method,
}

/// E_{ρ,μ}(z).
pub fn mittag_leffler(p: MLParams, z: f64) -> Result<f64> {
    evaluate(p, z).map(|e| e.value)
}

/// E_{ρ,μ}(z) with the route used.
pub fn evaluate(p: MLParams, z: f64) -> Result<Evaluation> {
    let MLParams { rho, mu } = MLParams::new(p.rho, p.mu)?;
    if !z.is_finite() {
        return Err(Error::Domain {
            function: "mittag_leffler (z)",
            value: z,
        });
    }
    if z == 0.0 {
        return Ok(Evaluation {
            value: rgamma(mu),
            method: Method::ClosedForm,
        });
    }
    if rho == 1.0 {
        if let Some(v) = closed_form_rho_one(mu, z) {
            return Ok(Evaluation {
                value: v,
                method: Method::ClosedForm,
            });
        }
    }
    if z > 0.0 {
        return positive_series(rho, mu, z);
    }
    let x = -z;
    if x <= 1.0 || x.powf(1.0 / rho) <= SERIES_NEGATIVE_LIMIT {
        return Ok(Evaluation {
            value: series(rho, mu, z)?,
            method: Method::Series,
        });
    }
    if let Some(v) = asymptotic(rho, mu, x) {
        return Ok(Evaluation {
            value: v,
            method: Method::Asymptotic,
        });
    }
    if rho < 1.0 {
        integral_route(rho, mu, x).map(|value| Evaluation {
            value,
            method: Method::Integral,
        })
    } else {
        rho_one_route(mu, x)
    }
}

fn closed_form_rho_one(mu: f64, z: f64) -> Option<f64> {
    if mu == mu.floor() && mu <= 1.0 {
        // E_{1,μ}(z) = z^{1-μ} e^z for integer μ ≤ 1
        return Some(z.powi((1.0 - mu) as i32) * z.exp());
    }
    if mu == 2.0 {
        return Some(z.exp_m1() / z);
    }
    None
}

fn term(rho: f64, mu: f64, z: f64, n: usize) -> f64 {
    let arg = rho * n as f64 + mu;
    let ln_pow = n as f64 * z.abs().ln();
    if arg < 160.0 && ln_pow < 600.0 {
        z.powi(n as i32) * rgamma(arg)
    } else {
        let (lr, sign) = ln_rgamma_abs(arg);
        let sign = if z < 0.0 && n % 2 == 1 { -sign } else { sign };
        sign * (ln_pow + lr).exp()
    }
}

/// Power series summed until the tail is below double precision.
fn series(rho: f64, mu: f64, z: f64) -> Result<f64> {
    let mut sum = 0.0;
    let mut small_run = 0;
    // Terms decrease once Γ(ρn+μ) grows faster than |z|^n.
    let warmup = ((2.0 - mu).max(0.0) / rho).ceil() as usize + 2;
    for n in 0..SERIES_MAX_TERMS {
        let t = term(rho, mu, z, n);
        sum += t;
        if n >= warmup && t.abs() <= 1e-17 * sum.abs().max(1.0) {
            small_run += 1;
            if small_run >= 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::AccuracyLoss {
        rho,
        mu,
        z,
        estimate: f64::NAN,
    })
}

fn positive_series(rho: f64, mu: f64, z: f64) -> Result<Evaluation> {
    // Leading growth (1/ρ) z^{(1-μ)/ρ} exp(z^{1/ρ}).
    let w = z.powf(1.0 / rho);
    let log_size = w + (1.0 - mu) / rho * z.ln() - rho.ln();
    if log_size > 700.0 {
        return Err(Error::Overflow { rho, mu, z });
    }
    let value = series(rho, mu, z)?;
    if !value.is_finite() {
        return Err(Error::Overflow { rho, mu, z });
    }
    Ok(Evaluation {
        value,
        method: Method::Series,
    })
}

/// -Σ_{n≥1} (-x)^{-n} / Γ(μ - ρn), optimally truncated; `None` when the
/// smallest term does not certify double precision.
fn asymptotic(rho: f64, mu: f64, x: f64) -> Option<f64> {
    let r0 = x.powf(1.0 / rho);
    // Contribution from near r^ρ = x in the integral form, exponentially small.
    let neglected = (-r0).exp() * r0.powf(1.0 - mu).max(1.0) / rho * 10.0;
    let mut sum: f64 = 0.0;
    let mut prev = f64::INFINITY;
    let mut rising = 0;
    for n in 1..400 {
        let a = mu - rho * n as f64;
        let (lr, sign) = ln_rgamma_abs(a);
        let t = if sign == 0.0 {
            0.0
        } else {
            let s = if n % 2 == 1 { 1.0 } else { -1.0 };
            s * sign * (lr - n as f64 * x.ln()).exp()
        };
        // Zero-free envelope of |1/Γ(a)|: Γ(1-a)/π below 1, 1/Γ(a) above,
        // so accidental near-zeros of 1/Γ cannot fake convergence.
        let ln_env = if a >= 1.0 {
            lr
        } else {
            -ln_rgamma_abs(1.0 - a).0 - PI.ln()
        };
        let env = (ln_env - n as f64 * x.ln()).exp();
        let scale = sum.abs().max(1e-300);
        if env <= 1e-16 * scale || env <= 1e-18 {
            return if neglected <= 1e-16 * scale.max(1e-2) {
                Some(sum + t)
            } else {
                None
            };
        }
        if env > prev {
            rising += 1;
            if rising >= 2 {
                return None;
            }
        } else {
            rising = 0;
        }
        prev = env;
        sum += t;
    }
    None
}

fn certified_integral<F: FnMut(f64) -> f64>(
    f: F,
    points: &[f64],
    rho: f64,
    mu: f64,
    z: f64,
) -> Result<f64> {
    let quad = Adaptive {
        abs_tol: 1e-14,
        rel_tol: 1e-13,
        max_segments: 800,
    };
    let (est, _) = quad.estimate(f, points);
    let limit = INTEGRAL_CERTIFY * est.value.abs().max(1.0);
    if est.error > limit || !est.value.is_finite() {
        return Err(Error::AccuracyLoss {
            rho,
            mu,
            z,
            estimate: est.error,
        });
    }
    Ok(est.value)
}

/// E_{ρ,μ}(-x) for 0 < ρ < 1 from
/// (1/π) ∫_0^∞ e^{-r} r^{ρ-μ} [r^ρ sin πμ + x sin π(μ-ρ)] /
///     (r^{2ρ} + 2 x r^ρ cos πρ + x²) dr,   μ < 1 + ρ,
/// with E_{ρ,μ} = (E_{ρ,μ-ρ} - 1/Γ(μ-ρ)) / z lowering μ into (1-ρ, 1].
fn integral_route(rho: f64, mu: f64, x: f64) -> Result<f64> {
    if mu > 1.0 {
        let lower = integral_route(rho, mu - rho, x)?;
        return Ok((lower - rgamma(mu - rho)) / -x);
    }
    let z = -x;
    let s_mu = sin_pi(mu);
    let s_mr = sin_pi(mu - rho);
    let c_r = (PI * rho).cos();
    let kernel = |r: f64| -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let rr = r.powf(rho);
        let num = rr * s_mu + x * s_mr;
        let den = rr * rr + 2.0 * x * rr * c_r + x * x;
        (-r).exp() * num / den / PI
    };
    let r_max = 745.0;
    let r0 = x.powf(1.0 / rho);
    let width = (x * sin_pi(rho) / (rho * r0.powf(rho - 1.0))).abs();
    let mut breaks = vec![0.0, r_max];
    if r0 < r_max {
        breaks.push(r0);
        for k in [0.25, 1.0, 4.0, 16.0, 64.0] {
            for s in [-1.0, 1.0] {
                let b = r0 + s * k * width;
                if b > 0.0 && b < r_max {
                    breaks.push(b);
                }
            }
        }
    }
    for b in [1e-6, 1e-3, 0.1, 1.0, 10.0, 40.0] {
        breaks.push(b);
    }
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    if rho - mu < 0.0 {
        // r = v^q with q = 1/(ρ-μ+1) absorbs r^{ρ-μ} dr into q dv.
        let q = 1.0 / (rho - mu + 1.0);
        let vb: Vec<f64> = breaks.iter().map(|b| b.powf(1.0 / q)).collect();
        let f = |v: f64| {
            if v <= 0.0 {
                return 0.0;
            }
            let r = v.powf(q);
            q * kernel(r)
        };
        certified_integral(f, &vb, rho, mu, z)
    } else {
        let f = |r: f64| if r <= 0.0 { 0.0 } else { r.powf(rho - mu) * kernel(r) };
        certified_integral(f, &breaks, rho, mu, z)
    }
}

/// E_{1,μ}(-x) for non-integer μ or μ > 2.
fn rho_one_route(mu: f64, x: f64) -> Result<Evaluation> {
    let z = -x;
    if mu > 1.0 {
        // (1/Γ(μ)) ∫_0^1 exp(z (1 - w^{1/(μ-1)})) dw
        let p = 1.0 / (mu - 1.0);
        let f = |w: f64| (z * (1.0 - w.powf(p))).exp();
        let mut breaks = vec![0.0, 1.0];
        for k in [1.0, 4.0, 16.0, 64.0] {
            let b = 1.0 - k / (x * p.max(1.0));
            if b > 0.0 && b < 1.0 {
                breaks.push(b);
            }
        }
        breaks.sort_by(f64::total_cmp);
        let v = certified_integral(f, &breaks, 1.0, mu, z)?;
        return Ok(Evaluation {
            value: v * rgamma(mu),
            method: Method::Integral,
        });
    }
    // E_{1,μ} = 1/Γ(μ) + z E_{1,μ+1}
    let up = rho_one_route(mu + 1.0, x)?;
    Ok(Evaluation {
        value: rgamma(mu) + z * up.value,
        method: Method::Recurrence,
    })
}

/// e_{λ,1}(α) = Γ(α) t0^{α-1} E_{α,α}(-λ t0^α).
pub fn e_lambda_1(alpha: f64, t0: f64, lambda: f64) -> Result<f64> {
    check_e_lambda(alpha, t0, lambda)?;
    let z = -lambda * t0.powf(alpha);
    let e = mittag_leffler(MLParams { rho: alpha, mu: alpha }, z)?;
    Ok(gamma(alpha)? * t0.powf(alpha - 1.0) * e)
}

/// e_{λ,2}(α) = t0^α E_{α,α+1}(-λ t0^α).
pub fn e_lambda_2(alpha: f64, t0: f64, lambda: f64) -> Result<f64> {
    check_e_lambda(alpha, t0, lambda)?;
    let ta = t0.powf(alpha);
    let e = mittag_leffler(
        MLParams {
            rho: alpha,
            mu: alpha + 1.0,
        },
        -lambda * ta,
    )?;
    Ok(ta * e)
}

fn check_e_lambda(alpha: f64, t0: f64, lambda: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain {
            function: "e_lambda (alpha)",
            value: alpha,
        });
    }
    if !(t0 > 0.0 && t0.is_finite()) {
        return Err(Error::Domain {
            function: "e_lambda (t0)",
            value: t0,
        });
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::Domain {
            function: "e_lambda (lambda)",
            value: lambda,
        });
    }
    Ok(())
}
