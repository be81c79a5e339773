use thiserror::Error;

/// Errors produced by the tangle toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    Resource {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl TangleError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        TangleError::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        TangleError::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = TangleError> = std::result::Result<T, E>;
