use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Exhaustive enumeration was requested for a problem that is too large.
    #[error("refusing to enumerate 2^{n} solutions (limit is n <= {limit})")]
    EnumerationGuard { n: usize, limit: usize },

    /// The operation has no closed form for this problem.
    #[error("unsupported for {0}")]
    Unsupported(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shorthand for building [`Error::Contract`] with `format!` arguments.
macro_rules! contract {
    ($($arg:tt)*) => {
        $crate::error::Error::Contract(format!($($arg)*))
    };
}
pub(crate) use contract;
