//! The mixed problem on the unit interval.

pub mod hyperbolic;
pub mod problem;
pub mod spectral;
pub mod traces;
pub mod verify;

pub use hyperbolic::{eval_hyperbolic, in_characteristic_triangle};
pub use problem::{ProblemSpec, DEFAULT_GRID, DEFAULT_MODES};
pub use spectral::{eigenvalue, sine_coefficients, sine_sum, ParabolicValue, SpectralSolution};
pub use traces::{source_integral_f, source_integral_f_prime, TraceDiagnostics, TraceFunctions};
pub use verify::{verify_solution, ReportGrid, ResidualReport};
