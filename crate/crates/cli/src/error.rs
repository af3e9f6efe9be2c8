use thiserror::Error;

/// A failed command, carrying the process exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed files or flags.
    #[error("{0}")]
    Input(String),
    /// A state with no ray (all amplitudes zero).
    #[error("{0}")]
    Degenerate(String),
    /// A pipeline step that cannot be applied.
    #[error("{0}")]
    Pipeline(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) => 2,
            Self::Degenerate(_) => 3,
            Self::Pipeline(_) => 4,
            Self::Io(_) => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
