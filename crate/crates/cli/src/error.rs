use std::path::PathBuf;

use thiserror::Error;
use weakval_core::error::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: CoreError },

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write report: {0}")]
    Json(#[from] serde_json::Error),

    #[error("cannot write report: {0}")]
    Csv(#[from] csv::Error),
}

/// Numeric outcomes exit with 1, bad input of any kind with 2.
fn core_exit_code(e: &CoreError) -> u8 {
    match e {
        CoreError::UndefinedWeakValue { .. }
        | CoreError::ComplexWeakValue { .. }
        | CoreError::Infeasible { .. }
        | CoreError::NoConvergence { .. }
        | CoreError::PostSelectionMeasureZero { .. } => 1,
        _ => 2,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) | CliError::Input { source: e, .. } => core_exit_code(e),
            CliError::Io { .. } => 2,
            CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
