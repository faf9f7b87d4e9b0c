//! Monotonicity scan of the observable over [α0, 1], for an observation
//! time below and above the threshold.
//!
//! cargo run --example scan

use frac_tricomi::inverse::{monotonicity_scan, t0_threshold, InverseObservation, ObservationMode};

fn main() -> frac_tricomi::Result<()> {
    let alpha0 = 0.25;
    for t0 in [0.01, t0_threshold(alpha0)] {
        let obs = InverseObservation::new(ObservationMode::Bounded { k0: 1 }, t0, 0.0, alpha0, 1.0, -1.0)?;
        let s = monotonicity_scan(&obs, 33)?;
        println!(
            "t0 = {t0:.4e}: strictly monotone {}, direction {}, range [{:.6e}, {:.6e}], sign of de1 {} de2 {}",
            s.strictly_monotone, s.direction, s.min, s.max, s.e1_sign, s.e2_sign
        );
    }
    Ok(())
}
