//! Exact scalars: big rationals, half-integers and univariate rational functions.

mod half;
mod poly;
mod ratfunc;
mod rational;

pub use half::HalfInt;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("cannot parse {0:?} as a number")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    /// The denominator of `function` vanishes at `at`.
    #[error("pole at u = {at} of {function}")]
    Pole { at: Rational, function: String },
    /// A coefficient at infinity was requested from a function that grows there.
    #[error("function grows at infinity (numerator degree {num} > denominator degree {den})")]
    Degree { num: usize, den: usize },
}
