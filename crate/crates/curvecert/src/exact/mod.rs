//! Arbitrary-precision rational arithmetic and certified dyadic enclosures.
//!
//! `Rational` is the only scalar used for geometry; every value is kept in
//! canonical form (reduced, positive denominator). `DyadicInterval` encloses
//! irrational quantities between dyadic rationals `m/2^k`; a precision-`n`
//! interval has width at most 2⁻ⁿ. Square roots are computed by exact
//! integer square roots of scaled squares, so no floating point enters
//! anywhere and monotone refinement (the interval at `n+1` is contained in
//! the interval at `n`) holds by construction.

mod interval;
mod rational;
mod sqrt;

pub use interval::{DyadicInterval, PointInterval, RatInterval};
pub use rational::Rational;
pub use sqrt::sqrt_interval;

use thiserror::Error;

/// Precision index: a certified result at precision `n` has width ≤ 2⁻ⁿ.
pub type Precision = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("square root of negative rational {0}")]
    NegativeSqrt(Rational),
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("malformed rational literal `{0}`")]
    ParseRational(String),
    #[error("interval endpoints out of order: lo {lo} > hi {hi}")]
    EndpointOrder { lo: Rational, hi: Rational },
    #[error("endpoint {0} is not dyadic (denominator must be a power of two)")]
    NotDyadic(Rational),
}

/// Outcome of comparing interval-valued quantities: the order may not be
/// decided at the current precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ternary {
    True,
    False,
    Unknown,
}

impl Ternary {
    pub fn is_true(self) -> bool {
        self == Ternary::True
    }

    pub fn is_false(self) -> bool {
        self == Ternary::False
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Ternary::True
        } else {
            Ternary::False
        }
    }
}

#[cfg(test)]
mod tests;
