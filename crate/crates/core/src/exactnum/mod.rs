//! Exact rational arithmetic, integer k-th roots and perfect-power detection.
//!
//! Every scalar in the crate is a [`Rational`]. Nothing here ever touches
//! floating point.

mod rational;
mod roots;

pub use rational::Rational;
pub use roots::{integer_kth_root, is_square_i128, kth_power_root};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}
