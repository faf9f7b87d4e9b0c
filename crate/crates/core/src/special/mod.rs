//! Special functions: Γ, 1/Γ, Ψ and the two-parameter Mittag-Leffler function.

pub mod gamma;
pub mod mittag_leffler;

pub use gamma::{digamma, gamma, ln_gamma, rgamma, EULER_GAMMA, GAMMA_TOLERANCE};
pub use mittag_leffler::{
    e_lambda_1, e_lambda_2, evaluate, mittag_leffler, Evaluation, MLParams, Method, DECAY_CONSTANT,
    ML_TOLERANCE,
};
