//! Crate-wide error type.

/// Errors raised by loaders, parameter validation, and the size-limited
/// exhaustive miner.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Constraint ordering or threshold violations in user-supplied parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A dataset could not be loaded (unreadable, empty, ...).
    #[error("load error: {0}")]
    Load(String),

    /// Malformed dataset content; `line` is 1-based.
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    /// The exhaustive miner refused an input exceeding its size limits.
    #[error("oracle size limit exceeded: {0}")]
    OracleLimit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
