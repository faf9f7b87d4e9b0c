use frac_tricomi::bounded::{
    eval_hyperbolic, sine_coefficients, source_integral_f, verify_solution, ProblemSpec,
    ReportGrid, SpectralSolution, TraceFunctions,
};
use frac_tricomi::profile::{Profile, Source};
use frac_tricomi::quadrature::{extrapolate_to_zero, linspace};
use frac_tricomi::special::gamma;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{crank_nicolson, thomas};

fn parabola(alpha: f64) -> SpectralSolution {
    SpectralSolution::new(ProblemSpec::new(Profile::Parabola, Source::Zero, alpha).unwrap()).unwrap()
}

#[test]
fn traces_match_finite_difference_boundary_value_problem() {
    // τ'' - γτ' = -2γψ', τ(0) = τ(1) = 0, ψ = x(1 - x)
    for alpha in [0.3, 0.5, 0.8] {
        let sol = parabola(alpha);
        let g = gamma(1.0 + alpha).unwrap();
        let n = 4096;
        let h = 1.0 / n as f64;
        let rhs: Vec<f64> = (1..n)
            .map(|i| -2.0 * g * (1.0 - 2.0 * i as f64 * h) * h * h)
            .collect();
        let tau = thomas(1.0 + 0.5 * g * h, -2.0, 1.0 - 0.5 * g * h, &rhs);
        let err = tau
            .iter()
            .enumerate()
            .map(|(i, v)| (v - sol.traces.tau_at((i + 1) as f64 * h)).abs())
            .fold(0.0, f64::max);
        assert!(err <= 1e-5, "alpha {alpha}: {err:e}");
    }
}

#[test]
fn functional_relations_and_boundary_values() {
    for alpha in [0.3, 0.5, 0.8] {
        let sol = parabola(alpha);
        let d = sol.traces.diagnostics;
        assert!(d.first_relation <= 1e-4, "{alpha}: {:e}", d.first_relation);
        assert!(d.second_relation <= 1e-5, "{alpha}: {:e}", d.second_relation);
        assert!(d.tau_boundary.iter().all(|v| v.abs() <= 1e-9));
        assert_eq!(sol.traces.c1, -sol.traces.c2);
    }
}

#[test]
fn sine_series_reconstructs_the_trace() {
    // τ'' does not vanish at the ends, so τ_k ~ k⁻³ and 64 modes leave a
    // 1e-5 tail; 256 modes reach the 1e-6 invariant.
    for alpha in [0.3, 0.8] {
        let spec =
            ProblemSpec::with_discretisation(Profile::Parabola, Source::Zero, alpha, 513, 256)
                .unwrap();
        let err = SpectralSolution::new(spec).unwrap().reconstruction_error();
        assert!(err <= 1e-6, "{alpha}: {err:e}");
    }
}

#[test]
fn source_integral_against_simpson_oracle() {
    // F(1) = ∫_0^{1/2} ∫_σ^{1-σ} ξ(1-ξ) dξ dσ by nested composite Simpson
    // on 1001 × 1001 points.
    let f = |xi: f64| xi * (1.0 - xi);
    let simpson = |a: f64, b: f64, n: usize, g: &dyn Fn(f64) -> f64| {
        let h = (b - a) / n as f64;
        let mut s = g(a) + g(b);
        for i in 1..n {
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * g(a + i as f64 * h);
        }
        s * h / 3.0
    };
    let oracle = simpson(0.0, 0.5, 1000, &|sigma| simpson(sigma, 1.0 - sigma, 1000, &f));
    let source = Source::stationary(Profile::Parabola);
    let got = source_integral_f(&source, 1.0).unwrap();
    assert!((got - oracle).abs() <= 1e-12, "{got} vs {oracle}");
    assert!((source_integral_f(&Source::Constant(1.0), 0.5).unwrap() - 0.0625).abs() < 1e-15);
    assert_eq!(source_integral_f(&Source::Zero, 0.3).unwrap(), 0.0);
}

#[test]
fn sine_coefficients_of_the_parabola() {
    let x = linspace(0.0, 1.0, 2049);
    let h: Vec<f64> = x.iter().map(|s| s * (1.0 - s)).collect();
    let b = sine_coefficients(&h, 32).unwrap();
    for (i, bk) in b.iter().enumerate() {
        let k = (i + 1) as f64;
        let want = if (i + 1) % 2 == 1 {
            8.0 / (k * std::f64::consts::PI).powi(3)
        } else {
            0.0
        };
        assert!((bk - want).abs() <= 1e-8, "k={k}: {bk} vs {want}");
    }
}

#[test]
fn weighted_limit_recovers_the_trace() {
    // t^{1-α} u(x, t) → τ(x) with error O(λ t^α); fixed times 1e-3..1e-5
    // extrapolated in t^α resolve the limit for α ≥ 0.8.
    for alpha in [0.8, 1.0] {
        let sol = parabola(alpha);
        let ts = [1e-3, 1e-4, 1e-5];
        let hs: Vec<f64> = ts.iter().map(|t: &f64| t.powf(alpha)).collect();
        for x in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let v: Vec<f64> = ts.iter().map(|&t| sol.eval_weighted(x, t).unwrap()).collect();
            let lim = extrapolate_to_zero(&hs, &v);
            let want = sol.traces.tau_at(x);
            assert!((lim - want).abs() <= 1e-4, "{alpha} {x}: {lim} vs {want}");
        }
    }
}

#[test]
fn weighted_limit_on_the_truncation_scale() {
    // For small α the same limit is taken at t^α = s/λ_N, the scale on
    // which the N-mode series has settled.
    for alpha in [0.3, 0.5] {
        let sol = parabola(alpha);
        let report = verify_solution(&sol, &ReportGrid::default()).unwrap();
        assert!(report.gluing_value <= 1e-4, "{alpha}: {:e}", report.gluing_value);
    }
}

#[test]
fn classical_reduction_matches_crank_nicolson() {
    let sol = parabola(1.0);
    let n = 1000;
    let dx = 1.0 / n as f64;
    let u = crank_nicolson(|x| sol.traces.tau_at(x), 0.1, n, 2000);
    let err = (1..n)
        .step_by(10)
        .map(|i| (sol.eval_parabolic(i as f64 * dx, 0.1).unwrap() - u[i - 1]).abs())
        .fold(0.0, f64::max);
    assert!(err <= 1e-4, "{err:e}");
}

#[test]
fn classical_reduction_constant_source_on_the_wave_side() {
    // u = t²/2 solves u_tt - u_xx = 1 with zero Cauchy data
    let traces = TraceFunctions::from_functions(1.0, 65, |_| 0.0, |_| 0.0).unwrap();
    let custom = Source::custom(|_, _| 1.0, true);
    for (x, t) in [(0.5, -0.25), (0.3, -0.1), (0.6, -0.35), (0.5, -0.5)] {
        for source in [&Source::Constant(1.0), &custom] {
            let u = eval_hyperbolic(&traces, source, x, t).unwrap();
            assert!((u - 0.5 * t * t).abs() <= 1e-10, "({x}, {t}): {u}");
        }
    }
}

#[test]
fn random_smooth_data_satisfy_the_wave_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let b: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let c: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.5..2.0)];
    let tau = move |x: f64| (0..4).map(|k| a[k] * ((k + 1) as f64 * x).sin()).sum::<f64>();
    let nu = move |x: f64| (0..4).map(|k| b[k] * ((k + 1) as f64 * x).cos()).sum::<f64>();
    let traces = TraceFunctions::from_functions(0.5, 2049, tau, nu).unwrap();
    let source = Source::custom(move |x, t| c[0] * x * x + c[1] * (c[2] * t).sin(), false);
    let h = 1e-3;
    let u = |x: f64, t: f64| eval_hyperbolic(&traces, &source, x, t).unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = -rng.gen_range(3.0 * h..0.5 - 3.0 * h);
        let x = rng.gen_range(-t + 2.0 * h..1.0 + t - 2.0 * h);
        let utt = (u(x, t + h) - 2.0 * u(x, t) + u(x, t - h)) / (h * h);
        let uxx = (u(x + h, t) - 2.0 * u(x, t) + u(x - h, t)) / (h * h);
        worst = worst.max((utt - uxx - source.value(x, t)).abs());
    }
    assert!(worst <= 1e-4, "{worst:e}");
}

#[test]
fn characteristic_condition_holds() {
    for alpha in [0.3, 0.8] {
        let sol = parabola(alpha);
        for x in linspace(0.02, 1.0, 50) {
            let u = sol.eval_hyperbolic(x / 2.0, -x / 2.0).unwrap();
            assert!((u - x * (1.0 - x)).abs() <= 1e-4, "{alpha} {x}: {u}");
        }
    }
}
