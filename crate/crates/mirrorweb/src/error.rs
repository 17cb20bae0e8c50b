use thiserror::Error;

/// Errors surfaced by the command-line front end, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    SizeGuard(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::SizeGuard(_) => 4,
            CliError::Verification(_) => 1,
        }
    }
}

impl From<ftv_core::Error> for CliError {
    fn from(e: ftv_core::Error) -> Self {
        use ftv_core::Error as E;
        match e {
            E::UnsupportedDualFraming { .. } | E::NonPrimitiveVertex { .. } | E::NotWpsQuotient(_) => {
                CliError::Unsupported(e.to_string())
            }
            E::SizeGuard { .. } => CliError::SizeGuard(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
