//! Error type shared by all modules of the crate.

use std::result;

/// Errors produced by polynomial construction, norm computation and the
/// numerical searches.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An operation that needs at least one term was given an empty polynomial.
    #[error("polynomial has no terms")]
    EmptyPolynomial,

    /// The same frequency appeared twice while building a polynomial.
    #[error("duplicate frequency {0}")]
    DuplicateFrequency(i64),

    /// A frequency set contained a repeated element.
    #[error("frequencies must be pairwise distinct: {0:?}")]
    DuplicateFrequencies(Vec<i64>),

    /// A scalar or structural argument was outside the operation's domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The polynomial text format could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A derivative root bracket failed to shrink to the requested width.
    #[error("root refinement stalled in bracket [{lo}, {hi}] (width {width:e})")]
    BracketStalled { lo: f64, hi: f64, width: f64 },

    /// Grid refinement was exhausted while the grid still dominated the
    /// located critical points.
    #[error(
        "sup-norm grid refinement exhausted: grid max {grid_max} exceeds \
         critical-point max {root_max} after {passes} passes"
    )]
    SupNormStalled {
        grid_max: f64,
        root_max: f64,
        passes: usize,
    },

    /// Every start of a multistart search diverged.
    #[error("all {starts} search starts diverged")]
    SearchFailed { starts: usize },
}

pub type Result<T> = result::Result<T, Error>;

impl Error {
    /// True for failures of iterative numerics (as opposed to bad input).
    pub fn is_convergence_failure(&self) -> bool {
        matches!(
            self,
            Error::BracketStalled { .. } | Error::SupNormStalled { .. } | Error::SearchFailed { .. }
        )
    }
}
