//! The traces τ(x) = u(x, 0) and ν(x) = u_t(x, 0⁻) on the type-change line.
//!
//! Matching the parabolic side (ν = τ''/Γ(1+α)) with the characteristic
//! data (τ' - ν = 2ψ' - F') gives τ'' - γ τ' = -γ G' with τ(0) = τ(1) = 0,
//! γ = Γ(1+α) and G = 2ψ - F. With K(x) = ∫_0^x G e^{-γξ} dξ the solution is
//!
//!   τ(x) = C₁ + C₂ e^{γx} - γ e^{γx} K(x),   C₂ = γ e^γ K(1) / (e^γ - 1),
//!
//! and C₁ = -C₂. When α = 1 the parabolic limit keeps the source,
//! ν = τ'' + f(x, 0), which shifts G by ∫_0^x f(ξ, 0) dξ.

use crate::error::{Error, Result};
use crate::profile::Source;
use crate::quadrature::{linspace, Adaptive, GaussLegendre};
use crate::special::gamma;
use crate::spline::CubicSpline;

use super::problem::ProblemSpec;

/// Tolerance of the self-check τ' - ν - 2ψ' + F' = 0.
pub const SECOND_RELATION_TOLERANCE: f64 = 1e-5;

const SOURCE_QUADRATURE: Adaptive = Adaptive {
    abs_tol: 1e-13,
    rel_tol: 1e-11,
    max_segments: 400,
};

/// F(x) = ∫_0^{x/2} ∫_σ^{x-σ} f(ξ, -σ) dξ dσ, the source integral over the
/// characteristic triangle below [0, x].
pub fn source_integral_f(source: &Source, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            function: "source_integral_f",
            value: x,
        });
    }
    match source {
        _ if source.is_zero() => Ok(0.0),
        Source::Constant(c) => Ok(c * x * x / 4.0),
        _ => {
            let mut failure = None;
            let outer = SOURCE_QUADRATURE.integrate(
                |sigma| {
                    let inner = SOURCE_QUADRATURE
                        .integrate(|xi| source.value(xi, -sigma), &[sigma, x - sigma]);
                    inner.unwrap_or_else(|e| {
                        failure.get_or_insert(e);
                        f64::NAN
                    })
                },
                &[0.0, x / 2.0],
            );
            if let Some(e) = failure {
                return Err(e);
            }
            outer
        }
    }
}

/// F'(x) = ∫_{-x/2}^0 f(x + η, η) dη.
pub fn source_integral_f_prime(source: &Source, x: f64) -> Result<f64> {
    match source {
        _ if source.is_zero() => Ok(0.0),
        Source::Constant(c) => Ok(c * x / 2.0),
        _ => SOURCE_QUADRATURE.integrate(|eta| source.value(x + eta, eta), &[-x / 2.0, 0.0]),
    }
}

/// Residuals of the functional relations and boundary values of the traces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceDiagnostics {
    /// max |ν - τ''/Γ(1+α)| (with + f(x,0) when α = 1) on the interior grid
    pub first_relation: f64,
    /// max |τ' - ν - 2ψ' + F'| on the interior grid, τ' by differencing
    pub second_relation: f64,
    pub tau_boundary: [f64; 2],
    pub nu_boundary: [f64; 2],
}

/// τ and ν sampled on the spatial grid, with the constants used.
#[derive(Debug, Clone)]
pub struct TraceFunctions {
    pub alpha: f64,
    pub x: Vec<f64>,
    pub tau: Vec<f64>,
    pub tau_prime: Vec<f64>,
    pub nu: Vec<f64>,
    /// γ = Γ(1+α)
    pub gamma_const: f64,
    pub c1: f64,
    pub c2: f64,
    /// g = 2ψ - F
    pub g: Vec<f64>,
    /// F on the grid
    pub source_integral: Vec<f64>,
    pub diagnostics: TraceDiagnostics,
    tau_spline: CubicSpline,
    nu_spline: CubicSpline,
}

impl TraceFunctions {
    /// Traces of a validated problem.
    pub fn build(spec: &ProblemSpec) -> Result<Self> {
        spec.validate()?;
        let alpha = spec.alpha;
        let x = spec.grid();
        let n = x.len();
        let gamma_const = gamma(1.0 + alpha)?;

        let big_f = x
            .iter()
            .map(|&xi| source_integral_f(&spec.source, xi))
            .collect::<Result<Vec<_>>>()?;
        let big_f_prime = x
            .iter()
            .map(|&xi| source_integral_f_prime(&spec.source, xi))
            .collect::<Result<Vec<_>>>()?;
        let source_free = spec.source.is_zero();
        let f_spline = if source_free {
            None
        } else {
            Some(CubicSpline::new(x.clone(), big_f.clone())?)
        };
        // ∫_0^x f(ξ, 0) dξ, only needed for α = 1
        let shift = if alpha == 1.0 && !source_free {
            let rule = GaussLegendre::n32();
            let mut acc = vec![0.0; n];
            for i in 1..n {
                acc[i] = acc[i - 1] + rule.integrate(|s| spec.source.value(s, 0.0), x[i - 1], x[i]);
            }
            Some(CubicSpline::new(x.clone(), acc)?)
        } else {
            None
        };
        let big_g = |s: f64| -> f64 {
            let mut v = 2.0 * spec.psi.value(s);
            if let Some(fs) = &f_spline {
                v -= fs.value(s);
            }
            if let Some(h) = &shift {
                v += h.value(s);
            }
            v
        };

        // K(x_i) cumulatively, 32-point Gauss–Legendre per cell.
        let rule = GaussLegendre::n32();
        let mut k_int = vec![0.0; n];
        for i in 1..n {
            k_int[i] = k_int[i - 1]
                + rule.integrate(|s| big_g(s) * (-gamma_const * s).exp(), x[i - 1], x[i]);
        }
        let eg = gamma_const.exp();
        let c2 = gamma_const * eg * k_int[n - 1] / gamma_const.exp_m1();
        let c1 = -c2;

        let mut tau: Vec<f64> = Vec::with_capacity(n);
        let mut tau_prime = Vec::with_capacity(n);
        let mut nu = Vec::with_capacity(n);
        let mut g = Vec::with_capacity(n);
        for i in 0..n {
            let e = (gamma_const * x[i]).exp();
            let gi = big_g(x[i]);
            let t = c2 * (gamma_const * x[i]).exp_m1() - gamma_const * e * k_int[i];
            let tp = gamma_const * c2 * e - gamma_const * gamma_const * e * k_int[i]
                - gamma_const * gi;
            let g_prime = 2.0 * spec.psi.derivative(x[i]) - big_f_prime[i];
            tau.push(t);
            tau_prime.push(tp);
            nu.push(tp - g_prime);
            g.push(2.0 * spec.psi.value(x[i]) - big_f[i]);
        }

        let tau_spline = CubicSpline::new(x.clone(), tau.clone())?;
        let nu_spline = CubicSpline::new(x.clone(), nu.clone())?;

        let h = x[1] - x[0];
        let mut second: f64 = 0.0;
        let mut first: f64 = 0.0;
        for i in 2..n - 2 {
            let d1 = (8.0 * (tau[i + 1] - tau[i - 1]) - (tau[i + 2] - tau[i - 2])) / (12.0 * h);
            let d2 = (-(tau[i + 2] + tau[i - 2]) + 16.0 * (tau[i + 1] + tau[i - 1])
                - 30.0 * tau[i])
                / (12.0 * h * h);
            let g_prime = 2.0 * spec.psi.derivative(x[i]) - big_f_prime[i];
            second = second.max((d1 - nu[i] - g_prime).abs());
            let expected = if alpha == 1.0 {
                d2 + spec.source.value(x[i], 0.0)
            } else {
                d2 / gamma_const
            };
            first = first.max((nu[i] - expected).abs());
        }
        if !(second <= SECOND_RELATION_TOLERANCE) {
            return Err(Error::ResidualViolation {
                relation: "tau' - nu = 2 psi' - F'",
                residual: second,
                tolerance: SECOND_RELATION_TOLERANCE,
            });
        }
        let diagnostics = TraceDiagnostics {
            first_relation: first,
            second_relation: second,
            tau_boundary: [tau[0], tau[n - 1]],
            nu_boundary: [nu[0], nu[n - 1]],
        };
        Ok(Self {
            alpha,
            x,
            tau,
            tau_prime,
            nu,
            gamma_const,
            c1,
            c2,
            g,
            source_integral: big_f,
            diagnostics,
            tau_spline,
            nu_spline,
        })
    }

    /// Traces given directly as functions, sampled on `grid_n` points. Used
    /// when (τ, ν) come from elsewhere, e.g. the half-line problem.
    pub fn from_functions<T, N>(alpha: f64, grid_n: usize, tau: T, nu: N) -> Result<Self>
    where
        T: Fn(f64) -> f64,
        N: Fn(f64) -> f64,
    {
        let x = linspace(0.0, 1.0, grid_n);
        let tau_v: Vec<f64> = x.iter().map(|&s| tau(s)).collect();
        let nu_v: Vec<f64> = x.iter().map(|&s| nu(s)).collect();
        Self::from_samples(alpha, x, tau_v, nu_v)
    }

    /// Traces from samples on an increasing grid.
    pub fn from_samples(alpha: f64, x: Vec<f64>, tau: Vec<f64>, nu: Vec<f64>) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidSpec(format!("alpha out of (0,1]: {alpha}")));
        }
        let tau_spline = CubicSpline::new(x.clone(), tau.clone())?;
        let nu_spline = CubicSpline::new(x.clone(), nu.clone())?;
        let tau_prime = x.iter().map(|&s| tau_spline.derivative(s)).collect();
        let n = x.len();
        let diagnostics = TraceDiagnostics {
            first_relation: f64::NAN,
            second_relation: f64::NAN,
            tau_boundary: [tau[0], tau[n - 1]],
            nu_boundary: [nu[0], nu[n - 1]],
        };
        Ok(Self {
            alpha,
            gamma_const: gamma(1.0 + alpha)?,
            c1: 0.0,
            c2: 0.0,
            g: vec![f64::NAN; n],
            source_integral: vec![f64::NAN; n],
            diagnostics,
            x,
            tau,
            tau_prime,
            nu,
            tau_spline,
            nu_spline,
        })
    }

    /// Left and right ends of the trace interval.
    pub fn span(&self) -> (f64, f64) {
        (self.x[0], self.x[self.x.len() - 1])
    }

    /// τ at any point of the interval (C² interpolant of the grid values).
    pub fn tau_at(&self, s: f64) -> f64 {
        self.tau_spline.value(s)
    }

    pub fn tau_second_derivative_at(&self, s: f64) -> f64 {
        self.tau_spline.second_derivative(s)
    }

    /// ν at any point of the interval.
    pub fn nu_at(&self, s: f64) -> f64 {
        self.nu_spline.value(s)
    }

    /// ∫_a^b ν, exact for the interpolant.
    pub fn nu_integral(&self, a: f64, b: f64) -> f64 {
        self.nu_spline.integral(a, b)
    }
}
