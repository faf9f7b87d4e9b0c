//! d'Alembert solution in the characteristic triangle t < 0.

use crate::error::{Error, Result};
use crate::profile::Source;
use crate::quadrature::Adaptive;

use super::traces::TraceFunctions;

const REGION_SLACK: f64 = 1e-12;

const SOURCE_QUADRATURE: Adaptive = Adaptive {
    abs_tol: 1e-13,
    rel_tol: 1e-11,
    max_segments: 400,
};

/// Whether (x, t) lies in the closed triangle t ≤ 0, x + t ≥ a, x - t ≤ b
/// over the trace interval [a, b].
pub fn in_characteristic_triangle(traces: &TraceFunctions, x: f64, t: f64) -> bool {
    let (a, b) = traces.span();
    t <= 0.0 && x + t >= a - REGION_SLACK && x - t <= b + REGION_SLACK
}

/// u(x, t) = (τ(x-t) + τ(x+t))/2 + ½ ∫_{x-t}^{x+t} ν
///         + ½ ∫_0^{-t} ∫_{x-(-t-σ)}^{x+(-t-σ)} f(ξ, -σ) dξ dσ
/// for u_tt - u_xx = f with u(x, 0) = τ, u_t(x, 0) = ν.
pub fn eval_hyperbolic(traces: &TraceFunctions, source: &Source, x: f64, t: f64) -> Result<f64> {
    if !(t < 0.0) || !in_characteristic_triangle(traces, x, t) {
        return Err(Error::OutOfRegion { x, t });
    }
    let (a, b) = traces.span();
    let left = (x + t).max(a);
    let right = (x - t).min(b);
    let wave = 0.5 * (traces.tau_at(left) + traces.tau_at(right))
        - 0.5 * traces.nu_integral(left, right);
    Ok(wave + duhamel_backward(source, x, -t)?)
}

/// ½ ∫_0^s ∫_{x-(s-σ)}^{x+(s-σ)} f(ξ, -σ) dξ dσ
pub fn duhamel_backward(source: &Source, x: f64, s: f64) -> Result<f64> {
    match source {
        _ if source.is_zero() || s == 0.0 => Ok(0.0),
        Source::Constant(c) => Ok(0.5 * c * s * s),
        _ => {
            let mut failure = None;
            let outer = SOURCE_QUADRATURE.integrate(
                |sigma| {
                    let r = s - sigma;
                    SOURCE_QUADRATURE
                        .integrate(|xi| source.value(xi, -sigma), &[x - r, x + r])
                        .unwrap_or_else(|e| {
                            failure.get_or_insert(e);
                            f64::NAN
                        })
                },
                &[0.0, s],
            );
            if let Some(e) = failure {
                return Err(e);
            }
            Ok(0.5 * outer?)
        }
    }
}
