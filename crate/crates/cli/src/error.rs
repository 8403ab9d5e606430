use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error in {object}: {message}")]
    Validation { object: String, message: String },
    #[error("size guard: {0}")]
    Size(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// 2 for size guards, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Size(_) => 2,
            _ => 1,
        }
    }
}
