use frac_tricomi::line::{
    eval_line_solution, fourier_transform, gaussian_heat, LineFunction, LineSolution, LineSpec,
};
use frac_tricomi::profile::TimeFactor;

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

fn bump() -> LineFunction {
    LineFunction::Bump { amplitude: 1.0 }
}

#[test]
fn gaussian_self_transform() {
    let g = LineFunction::custom(|x| (-0.5 * x * x).exp());
    for i in 0..=50 {
        let xi = -5.0 + 0.2 * i as f64;
        let v = fourier_transform(&g, 12.0, xi).unwrap();
        assert!((v.re - (-0.5 * xi * xi).exp()).abs() <= 1e-8, "{xi}");
        assert!(v.im.abs() <= 1e-8);
    }
    assert_eq!(fourier_transform(&LineFunction::Zero, 3.0, 1.0).unwrap().norm(), 0.0);
}

#[test]
fn bump_transform_against_simpson_oracle() {
    // 10⁶-interval composite Simpson of (1 - x²)² cos(xξ) / √(2π) on [-1, 1]
    let n = 1_000_000;
    let h = 2.0 / n as f64;
    let oracle = |xi: f64| {
        let g = |x: f64| (1.0 - x * x).powi(2) * (x * xi).cos();
        let mut s = g(-1.0) + g(1.0);
        for i in 1..n {
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * g(-1.0 + i as f64 * h);
        }
        s * h / 3.0 * INV_SQRT_2PI
    };
    let custom = LineFunction::custom(|x| if x.abs() < 1.0 { (1.0 - x * x).powi(2) } else { 0.0 });
    for xi in [0.0, 0.5, 1.9, 2.1, 7.0, 20.0] {
        let want = oracle(xi);
        let closed = fourier_transform(&bump(), 2.0, xi).unwrap();
        assert!((closed.re - want).abs() <= 1e-9, "{xi}: {} vs {want}", closed.re);
        assert!(closed.im.abs() <= 1e-15);
        let quad = fourier_transform(&custom, 2.0, xi).unwrap();
        assert!((quad.re - want).abs() <= 1e-5, "{xi}");
    }
}

#[test]
fn classical_heat_evolution_of_a_gaussian() {
    let spec = LineSpec::new(LineFunction::standard_gaussian(), 1.0, 12.0, 12.0).unwrap();
    for x in [-3.0, -1.0, 0.0, 0.5, 2.5] {
        let v = eval_line_solution(&spec, x, 0.5).unwrap();
        assert!((v.value - gaussian_heat(x, 0.5)).abs() <= 1e-6, "{x}");
        assert!(v.imaginary.abs() <= 1e-10);
    }
}

#[test]
fn zero_data_is_zero() {
    let spec = LineSpec::new(LineFunction::Zero, 0.4, 3.0, 5.0).unwrap();
    assert_eq!(eval_line_solution(&spec, 0.2, 1.0).unwrap().value, 0.0);
}

#[test]
fn bump_resolution_pair() {
    let mut spec = LineSpec::new(bump(), 0.6, 2.0, 200.0).unwrap();
    let coarse = eval_line_solution(&spec, 0.0, 1.0).unwrap();
    spec.refinement = 2;
    let fine = eval_line_solution(&spec, 0.0, 1.0).unwrap();
    assert!((coarse.value - fine.value).abs() <= 1e-7);
    assert!((fine.value - 0.254_994_924_793_497_4).abs() <= 1e-10, "{}", fine.value);
    assert!(fine.imaginary.abs() <= 1e-10);
}

#[test]
fn halving_the_frequency_step_is_converged() {
    let base = LineSpec::new(LineFunction::standard_gaussian(), 0.5, 12.0, 12.0)
        .unwrap()
        .with_source(LineFunction::Gaussian { amplitude: 0.5, sigma: 0.7 }, TimeFactor::Constant)
        .unwrap();
    let mut fine = base.clone();
    fine.refinement = 2;
    let a = LineSolution::new(base).unwrap();
    let b = LineSolution::new(fine).unwrap();
    for x in [-2.0, 0.0, 1.3] {
        for t in [0.2, 1.0] {
            let (va, vb) = (a.eval_parabolic(x, t).unwrap(), b.eval_parabolic(x, t).unwrap());
            assert!((va.value - vb.value).abs() <= 1e-7, "{x} {t}");
            assert!(va.imaginary.abs() <= 1e-10);
        }
    }
}

#[test]
fn symmetric_data_give_symmetric_fields() {
    let spec = LineSpec::new(bump(), 0.3, 2.0, 200.0).unwrap();
    let sol = LineSolution::new(spec).unwrap();
    for x in [0.2, 0.9, 1.7] {
        let l = sol.eval_parabolic(-x, 0.5).unwrap().value;
        let r = sol.eval_parabolic(x, 0.5).unwrap().value;
        assert!((l - r).abs() <= 1e-12, "{x}");
        let l = sol.eval(-x * 0.5, -0.3).unwrap();
        let r = sol.eval(x * 0.5, -0.3).unwrap();
        assert!((l - r).abs() <= 1e-12, "{x}");
    }
}

#[test]
fn truncation_is_flagged() {
    // a cut-off barely inside the decay tolerance leaves a visible edge
    let spec = LineSpec::new(LineFunction::standard_gaussian(), 1.0, 12.0, 5.5).unwrap();
    let v = eval_line_solution(&spec, 0.0, 1e-3).unwrap();
    assert!(v.truncated && v.edge > 1e-8);
}
