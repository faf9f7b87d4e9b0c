//! Recovers the fractional order from one spectral observation generated at
//! a known order.
//!
//! cargo run --example recover

use frac_tricomi::inverse::{
    observable_e, recover_alpha, t0_threshold, InverseObservation, ObservationMode,
};

fn main() -> frac_tricomi::Result<()> {
    let alpha0 = 0.5;
    let t0 = t0_threshold(alpha0);
    let obs = InverseObservation::new(ObservationMode::Bounded { k0: 1 }, t0, 0.0, alpha0, 1.0, 0.5)?;
    for star in [0.55, 0.7, 0.9, 1.0] {
        let d0 = observable_e(&obs, star)?;
        let r = recover_alpha(&obs.with_target(d0))?;
        println!(
            "alpha* = {star:<5} d0 = {d0:.6e} recovered {:.12} in {} iterations",
            r.alpha, r.iterations
        );
    }
    match recover_alpha(&obs.with_target(1.0)) {
        Err(e) => println!("target 1.0: {e}"),
        Ok(r) => println!("target 1.0 unexpectedly recovered {}", r.alpha),
    }
    Ok(())
}
