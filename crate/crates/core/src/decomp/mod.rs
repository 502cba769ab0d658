//! Eigen-constrained splits `O = P + Q` with `P psi_i = p psi_i` and
//! `Q psi_f = q psi_f`.
//!
//! For such a split the weak value is forced to `<O>_w = p + q`. [`verify`]
//! measures how well a proposed split satisfies the constraints; [`solve`]
//! constructs the minimum-Frobenius-norm Hermitian `P` for a chosen `p`.

mod fixtures;
mod solver;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{l2_norm, ComplexMatrix, C64};
use crate::weak::PrePostSystem;

pub use fixtures::{fixture, Fixture, FIXTURE_NAMES};
pub use solver::solve;

/// Tolerance the solver output is checked against before it is returned.
pub const SOLVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    #[serde(rename = "P")]
    pub p_part: ComplexMatrix,
    #[serde(rename = "Q")]
    pub q_part: ComplexMatrix,
    pub p: f64,
    pub q: f64,
}

impl Decomposition {
    pub fn new(p_part: ComplexMatrix, q_part: ComplexMatrix, p: f64, q: f64) -> Result<Self> {
        if p_part.dim() != q_part.dim() {
            return Err(Error::DimensionMismatch {
                expected: p_part.dim(),
                found: q_part.dim(),
            });
        }
        Ok(Self {
            p_part,
            q_part,
            p,
            q,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerificationReport {
    /// `||P + Q - O||_max`
    pub residual_sum: f64,
    /// `||P psi_i - p psi_i||`
    pub residual_pre: f64,
    /// `||Q psi_f - q psi_f||`
    pub residual_post: f64,
    pub hermiticity_p: f64,
    pub hermiticity_q: f64,
    /// `|p + q - <O>_w|`
    pub weak_value_gap: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.residual_sum,
            self.residual_pre,
            self.residual_post,
            self.hermiticity_p,
            self.hermiticity_q,
            self.weak_value_gap,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

fn eigen_residual(op: &ComplexMatrix, state: &[C64], eigenvalue: f64) -> Result<f64> {
    let image = op.apply(state)?;
    let diff: Vec<_> = image
        .iter()
        .zip(state)
        .map(|(a, b)| a - b * eigenvalue)
        .collect();
    Ok(l2_norm(&diff))
}

/// Checks a proposed split. A failing split is reported, not an error.
pub fn verify(
    op: &ComplexMatrix,
    sys: &PrePostSystem,
    d: &Decomposition,
    tol: f64,
) -> Result<VerificationReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    for m in [&d.p_part, &d.q_part] {
        if m.dim() != op.dim() {
            return Err(Error::DimensionMismatch {
                expected: op.dim(),
                found: m.dim(),
            });
        }
    }
    let residual_sum = d.p_part.try_add(&d.q_part)?.max_dist(op)?;
    let residual_pre = eigen_residual(&d.p_part, sys.pre().amplitudes(), d.p)?;
    let residual_post = eigen_residual(&d.q_part, sys.post().amplitudes(), d.q)?;
    let weak = sys.raw_weak_value(op)?;
    let weak_value_gap = (weak - (d.p + d.q)).norm();

    let mut report = VerificationReport {
        residual_sum,
        residual_pre,
        residual_post,
        hermiticity_p: d.p_part.hermiticity_gap(),
        hermiticity_q: d.q_part.hermiticity_gap(),
        weak_value_gap,
        tolerance: tol,
        passed: false,
    };
    report.passed = report.max_residual() <= tol;
    Ok(report)
}
