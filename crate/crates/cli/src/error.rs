use thiserror::Error;

use crate::ingest::IngestError;

/// Failures that end the process, grouped by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error("data error: {0}")]
    Data(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Ingest(_) | CliError::Data(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<coinmotif::Error> for CliError {
    fn from(e: coinmotif::Error) -> Self {
        match e {
            coinmotif::Error::InvalidParams(m) => CliError::Config(m),
            coinmotif::Error::RadiusViolation { .. } => CliError::Invariant(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}
