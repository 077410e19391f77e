use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input text. `line` is 1-based; 0 means the error is not tied to one line.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate line {0:?}")]
    DuplicateLine(Vec<usize>),

    /// A structure failed one of its defining invariants.
    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    /// An operation was called with arguments outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("expected {expected} lines, generated {actual}")]
    CountMismatch { expected: usize, actual: usize },

    /// A search ran out of nodes or time before deciding.
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::Invalid { what, message: message.into() }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
