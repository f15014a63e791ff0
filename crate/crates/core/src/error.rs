use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension profile: {0}")]
    InvalidProfile(String),
    #[error("dimension overflow: {0}")]
    DimensionOverflow(String),
    #[error("invalid party index {index} for {parties} parties")]
    InvalidPartyIndex { index: usize, parties: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not Hermitian: max |M - M^dagger| = {deviation:e} exceeds tolerance {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },
    #[error("trace {trace} differs from 1 by more than tolerance {tolerance:e}")]
    TraceNotUnit { trace: f64, tolerance: f64 },
    #[error("negative eigenvalue {value:e} below tolerance -{tolerance:e} (matrix is not positive semidefinite)")]
    NegativeEigenvalue { value: f64, tolerance: f64 },
    #[error("state is not normalized: norm^2 = {norm_sq} differs from 1 by more than tolerance {tolerance:e}")]
    NotNormalized { norm_sq: f64, tolerance: f64 },
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by a state that violates a structural invariant
    /// (as opposed to I/O, usage or guard problems).
    pub fn is_invalid_state(&self) -> bool {
        matches!(
            self,
            Error::InvalidProfile(_)
                | Error::DimensionOverflow(_)
                | Error::ShapeMismatch(_)
                | Error::NotHermitian { .. }
                | Error::TraceNotUnit { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::NotNormalized { .. }
                | Error::Schema(_)
                | Error::Json(_)
                | Error::InvalidDecomposition(_)
        )
    }
}
