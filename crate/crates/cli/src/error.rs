use std::path::PathBuf;

use thiserror::Error;

/// Exit codes: 0 success, 2 usage, 3 solver, 4 I/O.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("solver failure: {0}")]
    Solver(deltaho::Error),

    #[error("oracle failure (half_width={}, n_intervals={}, n_eigen={}): {source}", config.half_width, config.n_intervals, config.n_eigen)]
    Oracle {
        config: deltaho::oracle::OracleConfig,
        source: deltaho::Error,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Solver(_) | CliError::Oracle { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<deltaho::Error> for CliError {
    fn from(e: deltaho::Error) -> Self {
        match e {
            deltaho::Error::InvalidInput(_) | deltaho::Error::UnknownStrategy { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Solver(other),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
