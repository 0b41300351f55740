use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live over different rings, or a monomial has the wrong arity.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// An operation was called outside of its mathematical domain
    /// (zero ideal, unit ideal, prime not associated, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("exponent overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("budget exhausted after {0:?}")]
    BudgetExceeded(std::time::Duration),

    /// A checked theorem or invariant failed on a concrete instance.
    #[error("violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
