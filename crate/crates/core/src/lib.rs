// `!(x > 0.0)` deliberately rejects NaN along with the failed bound.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounded;
pub mod cli;
pub mod error;
pub mod inverse;
pub mod line;
pub mod profile;
pub mod quadrature;
pub mod special;
pub mod spline;

pub use error::{Error, Result};
