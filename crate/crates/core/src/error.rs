use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has {len} entries, expected {dim}x{dim}")]
    BadShape { dim: usize, len: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("operator is not Hermitian (max |A - A^dagger| = {gap:e})")]
    NotHermitian { gap: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("undefined weak value: pre- and post-selected states are orthogonal (|overlap| = {overlap:e})")]
    UndefinedWeakValue { overlap: f64 },

    #[error("no Hermitian decomposition with real p,q exists: weak value {re} + {im}i is complex")]
    ComplexWeakValue { re: f64, im: f64 },

    #[error("decomposition constraints are infeasible (residual {residual:e})")]
    Infeasible { residual: f64 },

    #[error("{value} is not an eigenvalue of the directional spin operator")]
    NotInSpectrum { value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("scenario `{scenario}` has no observable labelled `{label}`")]
    UnknownObservable { scenario: String, label: String },

    #[error("pointer grid too small: halfwidth {actual} < required {required}")]
    GridTooSmall { required: f64, actual: f64 },

    #[error("post-selection has measure zero (norm {norm:e})")]
    PostSelectionMeasureZero { norm: f64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
