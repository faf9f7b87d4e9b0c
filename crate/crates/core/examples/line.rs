//! The problem on the whole line with Gaussian data, compared with the heat
//! kernel at α = 1 and evaluated for a fractional order.
//!
//! cargo run --example line

use frac_tricomi::line::{gaussian_heat, LineFunction, LineSolution, LineSpec};

fn main() -> frac_tricomi::Result<()> {
    let heat = LineSolution::new(LineSpec::new(LineFunction::standard_gaussian(), 1.0, 12.0, 12.0)?)?;
    let frac = LineSolution::new(LineSpec::new(LineFunction::standard_gaussian(), 0.6, 12.0, 12.0)?)?;
    println!("{:>6} {:>14} {:>14} {:>14}", "x", "u (a=1)", "heat kernel", "u (a=0.6)");
    for x in [-3.0, -1.0, 0.0, 1.0, 3.0] {
        let a = heat.eval_parabolic(x, 0.5)?;
        let b = frac.eval_parabolic(x, 0.5)?;
        println!("{x:>6} {:>14.8} {:>14.8} {:>14.8}", a.value, gaussian_heat(x, 0.5), b.value);
    }
    println!("hyperbolic side u(0.3, -0.8) = {:.8}", frac.eval(0.3, -0.8)?);
    Ok(())
}
