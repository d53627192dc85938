use dspm_core::Error as CoreError;
use thiserror::Error;

/// Process exit statuses. The numbering is fixed for scripted use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Failure = 1,
    ScaleCap = 2,
    Mismatch = 3,
    InvalidInput = 4,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid grid: {0}")]
    InvalidGrid(dspm_core::Violation),
    #[error("worker count must be positive")]
    NoWorkers,
    #[error("{0}")]
    Refused(String),
    #[error("formula and census disagree: formula {formula}, census {census}")]
    Mismatch { formula: String, census: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(e) => match e {
                CoreError::SizeLimit { .. } | CoreError::Unsupported { .. } => ExitCode::ScaleCap,
                CoreError::Inconsistent(_) => ExitCode::Mismatch,
                CoreError::InvalidGrid
                | CoreError::Dimension { .. }
                | CoreError::EntryOutOfRange { .. }
                | CoreError::InvalidOrder(_)
                | CoreError::NotDivisible
                | CoreError::NotDisjoint { .. }
                | CoreError::NotSPermutation
                | CoreError::InvalidPermutation { .. }
                | CoreError::PermCount { .. }
                | CoreError::EdgeCountOutOfRange { .. }
                | CoreError::OrderMismatch { .. } => ExitCode::InvalidInput,
            },
            CliError::Refused(_) => ExitCode::ScaleCap,
            CliError::Mismatch { .. } => ExitCode::Mismatch,
            CliError::Parse { .. } | CliError::InvalidGrid(_) | CliError::NoWorkers => {
                ExitCode::InvalidInput
            }
            CliError::Io { .. } | CliError::Json(_) => ExitCode::Failure,
        }
    }
}
