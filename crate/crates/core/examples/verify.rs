//! Residual report of a bounded solution: gluing, boundary, characteristic,
//! wave and subdiffusion residuals.
//!
//! cargo run --release --example verify

use frac_tricomi::bounded::{verify_solution, ProblemSpec, ReportGrid, SpectralSolution};
use frac_tricomi::profile::{Profile, Source};

fn main() -> frac_tricomi::Result<()> {
    for alpha in [0.3, 0.8] {
        let sol = SpectralSolution::new(ProblemSpec::new(Profile::Parabola, Source::Zero, alpha)?)?;
        let r = verify_solution(&sol, &ReportGrid::with_seed(1))?;
        println!("alpha = {alpha}");
        println!("  gluing value       {:.2e}", r.gluing_value);
        println!("  gluing derivative  {:.2e}", r.gluing_derivative);
        println!("  boundary           {:.2e}", r.boundary);
        println!("  characteristic     {:.2e}", r.characteristic);
        println!("  wave               {:.2e}", r.wave);
        println!("  subdiffusion       {:.2e}", r.subdiffusion);
        println!("  max                {:.2e}", r.max_residual());
    }
    Ok(())
}
