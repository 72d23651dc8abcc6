use ga_core::GaError;
use thiserror::Error;

use crate::eval::EvalError;
use crate::parser::ParseError;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Evaluation error or failed assertion.
    pub const FAILURE: i32 = 1;
    /// Malformed input: bad arguments, parse errors, unreadable files.
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("error: {0}")]
    Eval(#[from] EvalError),
    #[error("error: {0}")]
    Ga(#[from] GaError),
    #[error("bad command: {0}")]
    Command(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_)
            | CliError::Command(_)
            | CliError::Io { .. }
            | CliError::Ga(GaError::TableTooLarge { .. }) => exit::USAGE,
            CliError::Eval(_) | CliError::Ga(_) => exit::FAILURE,
        }
    }
}
