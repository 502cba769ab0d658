//! Pre/post-selected systems and the weak value
//! `<O>_w = <psi_f|O|psi_i> / <psi_f|psi_i>`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, inner_raw, ComplexMatrix, StateVector, C64, DEFAULT_TOL};

/// Below this overlap modulus the weak value is treated as undefined.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PrePostSystem {
    pre: StateVector,
    post: StateVector,
    overlap: C64,
}

impl PrePostSystem {
    pub fn new(pre: StateVector, post: StateVector) -> Result<Self> {
        let overlap = post.inner(&pre)?;
        if overlap.norm() <= ORTHOGONALITY_TOL {
            return Err(Error::UndefinedWeakValue {
                overlap: overlap.norm(),
            });
        }
        Ok(Self { pre, post, overlap })
    }

    pub fn pre(&self) -> &StateVector {
        &self.pre
    }

    pub fn post(&self) -> &StateVector {
        &self.post
    }

    pub fn dim(&self) -> usize {
        self.pre.dim()
    }

    /// `<psi_f|psi_i>`
    pub fn overlap(&self) -> C64 {
        self.overlap
    }

    /// Probability `|<psi_f|psi_i>|^2` that the post-selection succeeds
    /// when nothing happens in between.
    pub fn postselect_probability(&self) -> f64 {
        self.overlap.norm_sqr()
    }

    fn check_dim(&self, op: &ComplexMatrix) -> Result<()> {
        if op.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: op.dim(),
            });
        }
        Ok(())
    }

    /// The ratio without any Hermiticity requirement on `op`.
    pub(crate) fn raw_weak_value(&self, op: &ComplexMatrix) -> Result<C64> {
        self.check_dim(op)?;
        let o_pre = op.apply(self.pre.amplitudes())?;
        Ok(inner_raw(self.post.amplitudes(), &o_pre)? / self.overlap)
    }

    pub fn weak_value(&self, op: &ComplexMatrix) -> Result<WeakValue> {
        self.check_dim(op)?;
        require_hermitian(op)?;
        Ok(WeakValue {
            value: self.raw_weak_value(op)?,
            overlap: self.overlap,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeakValue {
    #[serde(with = "linalg::pair")]
    pub value: C64,
    #[serde(with = "linalg::pair")]
    pub overlap: C64,
}

pub(crate) fn require_hermitian(op: &ComplexMatrix) -> Result<()> {
    let gap = op.hermiticity_gap();
    if gap > DEFAULT_TOL {
        return Err(Error::NotHermitian { gap });
    }
    Ok(())
}

pub fn weak_value(sys: &PrePostSystem, op: &ComplexMatrix) -> Result<WeakValue> {
    sys.weak_value(op)
}

/// Ordinary expectation `<psi|O|psi>`; the imaginary rounding residue is dropped.
pub fn expectation(state: &StateVector, op: &ComplexMatrix) -> Result<f64> {
    if op.dim() != state.dim() {
        return Err(Error::DimensionMismatch {
            expected: state.dim(),
            found: op.dim(),
        });
    }
    require_hermitian(op)?;
    let o_psi = op.apply(state.amplitudes())?;
    Ok(inner_raw(state.amplitudes(), &o_psi)?.re)
}

pub fn postselect_probability(sys: &PrePostSystem) -> f64 {
    sys.postselect_probability()
}
