use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: left is {left:?}, right is {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("local dimensions {local_dims:?} do not factor total dimension {dim}")]
    Factorization { local_dims: Vec<usize>, dim: usize },

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemIndex { index: usize, count: usize },

    #[error("entries length {len} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, len: usize },

    #[error("non-finite entry produced by {0}")]
    NonFinite(&'static str),

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    BadTrace { trace: f64 },

    #[error("density matrix has negative diagonal entry {value:e}")]
    NegativeDiagonal { value: f64 },

    #[error("measurement vectors are not orthonormal (Gram deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("expectation value has imaginary residue {residue:e}")]
    ComplexExpectation { residue: f64 },

    #[error("state is not diagonal in any known basis (off-diagonal weight {off_diagonal:e})")]
    NotDiagonal { off_diagonal: f64 },

    #[error("not operating as an engine: delta_E = {delta_e:e}")]
    NotAnEngine { delta_e: f64 },

    #[error("N = {n} exceeds the exact-state cap of {cap}; use the analytic path")]
    ExactPathCap { n: usize, cap: usize },

    #[error("no analytic path for {0}")]
    NoAnalyticPath(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
}
