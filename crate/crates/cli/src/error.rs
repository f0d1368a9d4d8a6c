use std::path::PathBuf;

/// Failures surfaced to the shell. Each maps to a fixed exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    InvalidGrid(String),

    #[error("{0}")]
    InvalidArguments(String),

    #[error("{0}")]
    Compute(#[from] fracspec::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Parse(_) => exit::PARSE,
            CliError::InvalidGrid(_) | CliError::InvalidArguments(_) => exit::INVALID,
            CliError::Compute(_) => exit::FAILURE,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const IO: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const INVALID: i32 = 4;
}
