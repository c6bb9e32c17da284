use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] weilbounds::Error),
    #[error("{0}")]
    Usage(String),
    #[error("replay digest {actual} does not match manifest digest {expected}")]
    Mismatch { expected: String, actual: String },
    #[error("bad manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(weilbounds::Error::Invariant(_)) | CliError::Mismatch { .. } => {
                ExitCode::from(3)
            }
            CliError::Lib(_) | CliError::Usage(_) | CliError::Manifest(_) => ExitCode::from(2),
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => ExitCode::FAILURE,
        }
    }
}
