//! Solves the mixed problem on the unit interval for ψ(x) = x(1 - x) and
//! prints the solution on both sides of the type-change line.
//!
//! cargo run --example direct_bounded

use frac_tricomi::bounded::{ProblemSpec, SpectralSolution};
use frac_tricomi::profile::{Profile, Source};

fn main() -> frac_tricomi::Result<()> {
    let spec = ProblemSpec::new(Profile::Parabola, Source::Zero, 0.5)?;
    let sol = SpectralSolution::new(spec)?;
    let d = sol.traces.diagnostics;
    println!(
        "traces: C1 = {:.6e}, relations {:.1e} / {:.1e}, reconstruction {:.1e}",
        sol.traces.c1,
        d.first_relation,
        d.second_relation,
        sol.reconstruction_error()
    );
    println!("{:>6} {:>8} {:>14}", "x", "t", "u");
    for t in [-0.4, -0.2, 0.0, 0.01, 0.1, 1.0] {
        for x in [0.25, 0.5, 0.75] {
            if t < 0.0 && (x + t < 0.0 || x - t > 1.0) {
                continue;
            }
            println!("{x:>6} {t:>8} {:>14.6e}", sol.eval(x, t)?);
        }
    }
    Ok(())
}
