use crate::error::{Error, Result};
use crate::profile::{Profile, Source};
use crate::quadrature::linspace;

/// Default number of sine modes.
pub const DEFAULT_MODES: usize = 64;
/// Default number of spatial grid points.
pub const DEFAULT_GRID: usize = 513;
/// Smallest admissible grid.
pub const MIN_GRID: usize = 9;
/// Tolerance on the compatibility conditions ψ(0) = 0 and f(0,t) = f(1,t) = 0.
pub const COMPATIBILITY_TOLERANCE: f64 = 1e-10;

/// Data of the bounded mixed problem: characteristic profile ψ, source f,
/// order α and discretisation.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub psi: Profile,
    pub source: Source,
    pub alpha: f64,
    pub grid_n: usize,
    pub modes: usize,
}

impl ProblemSpec {
    /// Validated spec with the default grid and truncation.
    pub fn new(psi: Profile, source: Source, alpha: f64) -> Result<Self> {
        Self::with_discretisation(psi, source, alpha, DEFAULT_GRID, DEFAULT_MODES)
    }

    pub fn with_discretisation(
        psi: Profile,
        source: Source,
        alpha: f64,
        grid_n: usize,
        modes: usize,
    ) -> Result<Self> {
        let spec = Self {
            psi,
            source,
            alpha,
            grid_n,
            modes,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::InvalidSpec(format!(
                "alpha out of (0,1]: {}",
                self.alpha
            )));
        }
        if self.grid_n < MIN_GRID {
            return Err(Error::InvalidSpec(format!(
                "grid must have at least {MIN_GRID} points, got {}",
                self.grid_n
            )));
        }
        if self.modes == 0 {
            return Err(Error::InvalidSpec("modes must be at least 1".into()));
        }
        if self.modes > self.grid_n / 2 {
            return Err(Error::Aliasing {
                modes: self.modes,
                grid: self.grid_n,
            });
        }
        if let Profile::Sampled(s) = &self.psi {
            if s.knots().len() < MIN_GRID {
                return Err(Error::InvalidSpec(format!(
                    "sampled psi needs at least {MIN_GRID} points, got {}",
                    s.knots().len()
                )));
            }
        }
        let psi0 = self.psi.value(0.0);
        if !psi0.is_finite() || psi0.abs() > COMPATIBILITY_TOLERANCE {
            return Err(Error::InvalidSpec(format!(
                "psi(0) must vanish to match u(0,0) = 0, got {psi0:e}"
            )));
        }
        for &t in &[-0.5, -0.25, 0.0, 0.5, 1.0, 2.0] {
            for &x in &[0.0, 1.0] {
                let v = self.source.value(x, t);
                if !v.is_finite() || v.abs() > COMPATIBILITY_TOLERANCE {
                    return Err(Error::InvalidSpec(format!(
                        "source must vanish on x = 0 and x = 1, f({x},{t}) = {v:e}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Uniform spatial grid on [0, 1].
    pub fn grid(&self) -> Vec<f64> {
        linspace(0.0, 1.0, self.grid_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_validation() {
        let s = ProblemSpec::new(Profile::Parabola, Source::Zero, 0.5).unwrap();
        assert_eq!((s.grid_n, s.modes), (513, 64));
        let e = ProblemSpec::new(Profile::Parabola, Source::Zero, 1.5).unwrap_err();
        assert!(e.to_string().contains("alpha out of (0,1]"));
        assert!(ProblemSpec::new(Profile::Parabola, Source::Constant(1.0), 0.5).is_err());
        assert!(ProblemSpec::new(Profile::Polynomial(vec![1.0]), Source::Zero, 0.5).is_err());
        assert!(matches!(
            ProblemSpec::with_discretisation(Profile::Zero, Source::Zero, 0.5, 33, 17),
            Err(Error::Aliasing { .. })
        ));
    }
}
