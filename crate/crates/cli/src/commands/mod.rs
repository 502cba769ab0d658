pub mod decompose;
pub mod pointer;
pub mod scenarios;
pub mod weakvalue;

use std::fs;
use std::path::Path;

use weakval_core::linalg::text::{parse_matrix, parse_state};
use weakval_core::linalg::{ComplexMatrix, StateVector};
use weakval_core::weak::PrePostSystem;

use crate::args::SystemFiles;
use crate::error::{CliError, Result};

/// How a command that ran to completion turned out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl From<bool> for Outcome {
    fn from(passed: bool) -> Self {
        if passed {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    parse_matrix(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_state(path: &Path) -> Result<StateVector> {
    parse_state(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_system(files: &SystemFiles) -> Result<(ComplexMatrix, PrePostSystem)> {
    let op = read_matrix(&files.obs)?;
    let sys = PrePostSystem::new(read_state(&files.pre)?, read_state(&files.post)?)?;
    Ok((op, sys))
}
