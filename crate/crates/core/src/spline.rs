//! Not-a-knot cubic spline interpolation.

use crate::error::{Error, Result};

/// C² piecewise cubic through (x_i, y_i) with not-a-knot end conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
    /// Running integral from x_0 to each knot.
    cumulative: Vec<f64>,
    uniform: bool,
}

impl CubicSpline {
    /// Builds the spline; `x` must be strictly increasing with at least four
    /// points.
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n != y.len() {
            return Err(Error::InvalidSpec(format!(
                "spline abscissae and values differ in length ({n} vs {})",
                y.len()
            )));
        }
        if n < 4 {
            return Err(Error::InvalidSpec(format!(
                "spline needs at least 4 points, got {n}"
            )));
        }
        if x.windows(2).any(|w| !(w[1] > w[0])) || y.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSpec(
                "spline abscissae must be strictly increasing and values finite".into(),
            ));
        }
        let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
        let m = second_derivatives(&h, &y);
        let span = x[n - 1] - x[0];
        let uniform = h
            .iter()
            .all(|&hi| (hi - span / (n - 1) as f64).abs() <= 1e-12 * span);
        let mut spline = Self {
            x,
            y,
            m,
            cumulative: vec![0.0; n],
            uniform,
        };
        for (i, &hi) in h.iter().enumerate() {
            spline.cumulative[i + 1] = spline.cumulative[i] + spline.partial_integral(i, hi);
        }
        Ok(spline)
    }

    /// Spline through samples of `f` on a uniform grid of `n` points.
    pub fn from_fn<F: Fn(f64) -> f64>(a: f64, b: f64, n: usize, f: F) -> Result<Self> {
        let x = crate::quadrature::linspace(a, b, n);
        let y = x.iter().map(|&v| f(v)).collect();
        Self::new(x, y)
    }

    pub fn knots(&self) -> &[f64] {
        &self.x
    }

    pub fn values(&self) -> &[f64] {
        &self.y
    }

    fn segment(&self, t: f64) -> usize {
        let n = self.x.len();
        if t <= self.x[0] {
            return 0;
        }
        if t >= self.x[n - 1] {
            return n - 2;
        }
        if self.uniform {
            let h = (self.x[n - 1] - self.x[0]) / (n - 1) as f64;
            let mut i = ((t - self.x[0]) / h) as usize;
            i = i.min(n - 2);
            // Guard against rounding at knot boundaries.
            if t < self.x[i] && i > 0 {
                i -= 1;
            } else if t >= self.x[i + 1] && i + 2 < n {
                i += 1;
            }
            return i;
        }
        match self.x.binary_search_by(|v| v.total_cmp(&t)) {
            Ok(i) => i.min(n - 2),
            Err(i) => i - 1,
        }
    }

    fn coefficients(&self, i: usize) -> (f64, f64, f64, f64, f64) {
        let h = self.x[i + 1] - self.x[i];
        let b = (self.y[i + 1] - self.y[i]) / h - h * (2.0 * self.m[i] + self.m[i + 1]) / 6.0;
        let d = (self.m[i + 1] - self.m[i]) / (6.0 * h);
        (self.y[i], b, 0.5 * self.m[i], d, h)
    }

    fn partial_integral(&self, i: usize, t: f64) -> f64 {
        let (a, b, c, d, _) = self.coefficients(i);
        t * (a + t * (b / 2.0 + t * (c / 3.0 + t * d / 4.0)))
    }

    /// s(t)
    pub fn value(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let (a, b, c, d, _) = self.coefficients(i);
        let s = t - self.x[i];
        a + s * (b + s * (c + s * d))
    }

    /// s'(t)
    pub fn derivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let (_, b, c, d, _) = self.coefficients(i);
        let s = t - self.x[i];
        b + s * (2.0 * c + 3.0 * s * d)
    }

    /// s''(t)
    pub fn second_derivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let (_, _, c, d, _) = self.coefficients(i);
        2.0 * c + 6.0 * d * (t - self.x[i])
    }

    /// ∫_{x_0}^t s
    pub fn antiderivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        self.cumulative[i] + self.partial_integral(i, t - self.x[i])
    }

    /// ∫_a^b s, exact for the piecewise cubic.
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        self.antiderivative(b) - self.antiderivative(a)
    }
}

/// Knot second derivatives under not-a-knot conditions. The end conditions
/// M_0 = ((h_0+h_1) M_1 - h_0 M_2) / h_1 (and its mirror) are substituted
/// into the first and last interior equations, leaving a tridiagonal system.
fn second_derivatives(h: &[f64], y: &[f64]) -> Vec<f64> {
    let n = y.len();
    let k = n - 2; // interior unknowns M_1..M_{n-2}
    let mut lower = vec![0.0; k];
    let mut diag = vec![0.0; k];
    let mut upper = vec![0.0; k];
    let mut rhs = vec![0.0; k];
    for j in 0..k {
        let i = j + 1;
        lower[j] = h[i - 1];
        diag[j] = 2.0 * (h[i - 1] + h[i]);
        upper[j] = h[i];
        rhs[j] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
    }
    // M_0 = p0 M_1 + q0 M_2
    let p0 = (h[0] + h[1]) / h[1];
    let q0 = -h[0] / h[1];
    // M_{n-1} = pn M_{n-2} + qn M_{n-3}
    let hl = h[n - 2];
    let hp = h[n - 3];
    let pn = (hl + hp) / hp;
    let qn = -hl / hp;

    if k == 2 {
        // Both substitutions land in a 2x2 system.
        let a11 = diag[0] + lower[0] * p0;
        let a12 = upper[0] + lower[0] * q0;
        let a21 = lower[1] + upper[1] * qn;
        let a22 = diag[1] + upper[1] * pn;
        let det = a11 * a22 - a12 * a21;
        let m1 = (rhs[0] * a22 - a12 * rhs[1]) / det;
        let m2 = (a11 * rhs[1] - a21 * rhs[0]) / det;
        return vec![p0 * m1 + q0 * m2, m1, m2, pn * m2 + qn * m1];
    }
    diag[0] += lower[0] * p0;
    upper[0] += lower[0] * q0;
    lower[0] = 0.0;
    diag[k - 1] += upper[k - 1] * pn;
    lower[k - 1] += upper[k - 1] * qn;
    upper[k - 1] = 0.0;

    let inner = solve_tridiagonal(&lower, &diag, &upper, &rhs);
    let mut m = Vec::with_capacity(n);
    m.push(p0 * inner[0] + q0 * inner[1]);
    m.extend_from_slice(&inner);
    m.push(pn * inner[k - 1] + qn * inner[k - 2]);
    m
}

fn solve_tridiagonal(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Vec<f64> {
    let k = diag.len();
    let mut c = vec![0.0; k];
    let mut d = vec![0.0; k];
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..k {
        let denom = diag[i] - lower[i] * c[i - 1];
        c[i] = upper[i] / denom;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    let mut out = vec![0.0; k];
    out[k - 1] = d[k - 1];
    for i in (0..k - 1).rev() {
        out[i] = d[i] - c[i] * out[i + 1];
    }
    out
}
