//! Euler gamma, its reciprocal and logarithm, and the digamma function.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Target relative accuracy of [`gamma`] on [0.05, 20].
pub const GAMMA_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// sin(πx), exact at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (Γ(x + 1)).
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    acc
}

/// ln Γ(x) for x >= 0.5.
fn ln_gamma_right(x: f64) -> f64 {
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}

fn gamma_right(x: f64) -> f64 {
    if x == x.floor() && x <= 171.0 {
        // Exact factorials for integer arguments.
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    if x > 171.624_376_956_302_7 {
        return f64::INFINITY;
    }
    if x > 140.0 {
        return ln_gamma_right(x).exp();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * lanczos_sum(z)
}

/// Γ(x) by a Lanczos approximation, with reflection below 1/2.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain { function: "gamma", value: x });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x >= 0.5 {
        Ok(gamma_right(x))
    } else {
        let g = gamma_right(1.0 - x);
        if g.is_infinite() {
            return Ok(0.0);
        }
        Ok(PI / (sin_pi(x) * g))
    }
}

/// 1/Γ(x); entire, so it vanishes at the poles of Γ instead of failing.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > 171.0 {
            return (-ln_gamma_right(x)).exp();
        }
        return 1.0 / gamma_right(x);
    }
    let w = 1.0 - x;
    if w > 171.0 {
        let (ln_abs, sign) = ln_rgamma_abs(x);
        return sign * ln_abs.exp();
    }
    sin_pi(x) * gamma_right(w) / PI
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain { function: "ln_gamma", value: x });
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum away from its weak region.
        return Ok(ln_gamma_right(x + 1.0) - x.ln());
    }
    Ok(ln_gamma_right(x))
}

/// (ln |1/Γ(x)|, sign of 1/Γ(x)); the log is -∞ with sign 0 at the poles.
pub fn ln_rgamma_abs(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::NEG_INFINITY, 0.0);
    }
    if x > 0.0 {
        let lg = if x < 0.5 {
            ln_gamma_right(x + 1.0) - x.ln()
        } else {
            ln_gamma_right(x)
        };
        return (-lg, 1.0);
    }
    // 1/Γ(x) = sin(πx) Γ(1 - x) / π
    let s = sin_pi(x);
    (s.abs().ln() + ln_gamma_right(1.0 - x) - PI.ln(), s.signum())
}

/// Digamma Ψ(x) = Γ'(x)/Γ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain { function: "digamma", value: x });
    }
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift -= 1.0 / y;
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    // Bernoulli tail B_{2k} / (2k) y^{-2k}, k = 1..7
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2
                                        * (1.0 / 132.0
                                            - inv2 * (691.0 / 32_760.0 - inv2 / 12.0))))));
    Ok(shift + y.ln() - 0.5 * inv - tail)
}
