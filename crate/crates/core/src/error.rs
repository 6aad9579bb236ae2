use thiserror::Error;

/// Errors raised by the group engine and the analysis layers on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Enumeration stopped after `partial` elements because `cap` was reached.
    #[error("enumeration cap {cap} exceeded after {partial} elements")]
    CapExceeded { cap: usize, partial: usize },

    /// A bounded search gave up. This is not a proof of non-existence.
    #[error("{what}: not found within budget")]
    NotFoundWithinBudget { what: String },

    /// A computed object contradicts a proved theorem; always a bug.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InternalInvariantViolation(msg.into())
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
