//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by exact series arithmetic and the metric pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two series with incompatible variable counts or cutoffs were combined.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An operand violated a domain precondition (wrong constant term, point
    /// outside the evaluation radius, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient or truncation request fell outside the stored box.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A jet was too short to saturate the requested truncation box.
    #[error("jet order {order} too small: composition needs order >= {required}")]
    JetOrderTooSmall { order: u32, required: u32 },

    /// The implicit system had a singular linear step.
    #[error("degenerate reversion at degree {degree}")]
    DegenerateReversion { degree: u32 },

    /// The profile-jet recursion could not determine a coefficient.
    #[error("degenerate jet recursion at order {order}")]
    DegenerateJetRecursion { order: u32 },

    /// An argument failed validation (n < 1, negative parameter, bad index).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A floating-point cross-check failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
