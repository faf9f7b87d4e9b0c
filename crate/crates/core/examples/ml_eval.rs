//! Evaluates the two-parameter Mittag-Leffler function along the negative
//! axis, showing the route chosen at each argument.
//!
//! cargo run --example ml_eval

use frac_tricomi::special::{e_lambda_1, e_lambda_2, evaluate, MLParams};

fn main() -> frac_tricomi::Result<()> {
    let p = MLParams::new(0.5, 0.5)?;
    println!("{:>10} {:>24} {:>12}", "z", "E_{0.5,0.5}(z)", "method");
    for z in [0.5, -0.1, -1.0, -5.0, -20.0, -100.0, -1e4] {
        let e = evaluate(p, z)?;
        println!("{z:>10} {:>24.16e} {:>12}", e.value, e.method.as_str());
    }
    let lam = std::f64::consts::PI.powi(2);
    println!("e_1(alpha=0.7, t=20, pi^2) = {:.16e}", e_lambda_1(0.7, 20.0, lam)?);
    println!("e_2(alpha=0.7, t=20, pi^2) = {:.16e}", e_lambda_2(0.7, 20.0, lam)?);
    Ok(())
}
