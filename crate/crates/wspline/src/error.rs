//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Knot times not strictly increasing, too few knots, or wrong origin.
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    /// Inputs whose lengths or spatial dimensions disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A scalar or structural argument outside its admissible range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact enumeration requested on an instance beyond the oracle limits.
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    /// Query time outside the knot span.
    #[error("query out of range: {0}")]
    OutOfRange(String),

    /// Problem data that admits no feasible point (e.g. a non-PSD covariance).
    #[error("infeasible data: {0}")]
    Infeasible(String),

    /// Iterative solver stopped at the iteration cap.
    #[error("solver did not converge after {iterations} iterations (residual {residual:.3e}): {detail}")]
    NonConvergence {
        residual: f64,
        iterations: usize,
        detail: String,
    },

    /// Problem file failed schema validation; the message carries the field path.
    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
