use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes. Stable contract for scripts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitCode {
    Success = 0,
    Usage = 2,
    Violated = 3,
    Inconclusive = 4,
    Structural = 5,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Output(#[source] io::Error),
    #[error("state file schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] qudit_pt::Error),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(io::Error::other(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        use qudit_pt::Error as E;
        match self {
            CliError::InvalidArgs(_) | CliError::Io { .. } | CliError::Output(_) => ExitCode::Usage,
            CliError::Schema(_) => ExitCode::Structural,
            CliError::Core(e) => match e {
                E::InvalidDimension(_)
                | E::DimensionTooSmall { .. }
                | E::NotOddPrime(_)
                | E::NotTwoParticle
                | E::NotOneParticle
                | E::LabelOutOfRange { .. }
                | E::DimensionMismatch { .. } => ExitCode::Usage,
                E::BadLength { .. }
                | E::NonFinite
                | E::NotHermitian { .. }
                | E::NoConvergence
                | E::NotHermitianSource { .. }
                | E::NonRealVariance { .. }
                | E::Inconsistent(_) => ExitCode::Structural,
            },
        }
    }
}
