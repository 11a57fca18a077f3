use thiserror::Error;

use toric_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}:{line}: {message}")]
    Parse { source_name: String, line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    /// 1 when a computation could not be certified, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::PositiveDimensional(_) | CoreError::UnresolvedPoints { .. }) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
