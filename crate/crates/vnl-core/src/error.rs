use thiserror::Error;

/// Errors surfaced by ring constructions and analyses.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    /// A precondition on a construction or operation does not hold.
    /// The message carries the concrete witness (failing instance) when one exists.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested construction exceeds the configured representation budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A ring-axiom check failed; carries the axiom name and the failing tuple.
    #[error("ring axiom violated: {axiom} at {witness}")]
    AxiomViolation { axiom: &'static str, witness: String },

    /// Two routes to the same value disagreed. This is an implementation bug,
    /// never a mathematical finding, and must not be swallowed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl RingError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        RingError::InvalidParameter(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        RingError::Capacity(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        RingError::Inconsistency(msg.into())
    }
}
