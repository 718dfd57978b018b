use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of an operation (bad degree, reducible cover, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// A search ran past its configured budget; for coset enumeration this
    /// usually means the presented group is infinite.
    #[error("budget exceeded: more than {limit} {what}")]
    BudgetExceeded { limit: usize, what: &'static str },

    /// An internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn syntax(position: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: msg.into(),
        }
    }
}
