use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A construction produced an object that violates its own invariants.
    /// This always points at a bug upstream, never at bad user input.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A computed quantity disagrees with the value it is checked against.
    #[error("verification mismatch: {0}")]
    Mismatch(String),

    #[error("matrix is degenerate: {0}")]
    Degenerate(String),

    #[error("form is not positive definite")]
    NotPositiveDefinite,

    #[error("finite group of order {order} exceeds the supported limit {limit}")]
    UnsupportedSize { order: u64, limit: u64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }
}
