//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

/// Solves a x_{i-1} + b x_i + c x_{i+1} = d with constant a, b, c.
pub fn thomas(a: f64, b: f64, c: f64, d: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut cp = vec![0.0; n];
    let mut dp = vec![0.0; n];
    cp[0] = c / b;
    dp[0] = d[0] / b;
    for i in 1..n {
        let m = b - a * cp[i - 1];
        cp[i] = c / m;
        dp[i] = (d[i] - a * dp[i - 1]) / m;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = dp[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = dp[i] - cp[i] * x[i + 1];
    }
    x
}

/// Crank-Nicolson solution of u_t = u_xx on [0, 1] with zero boundary
/// values at time `t`, on `n` intervals with `steps` time steps. Returns
/// the interior values at x_i = i/n, i = 1..n-1.
pub fn crank_nicolson<F: Fn(f64) -> f64>(u0: F, t: f64, n: usize, steps: usize) -> Vec<f64> {
    let dx = 1.0 / n as f64;
    let r = t / steps as f64 / (dx * dx);
    let mut u: Vec<f64> = (1..n).map(|i| u0(i as f64 * dx)).collect();
    for _ in 0..steps {
        let rhs: Vec<f64> = (0..u.len())
            .map(|i| {
                let l = if i > 0 { u[i - 1] } else { 0.0 };
                let rr = if i + 1 < u.len() { u[i + 1] } else { 0.0 };
                (1.0 - r) * u[i] + 0.5 * r * (l + rr)
            })
            .collect();
        u = thomas(-0.5 * r, 1.0 + r, -0.5 * r, &rhs);
    }
    u
}
