use crate::scalar::Rational;
use thiserror::Error;

/// Errors surfaced by construction, validation and geometric operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("antisymmetry violated: C[{i}][{j}][{k}] = {lhs}, C[{j}][{i}][{k}] = {rhs}")]
    AntisymmetryViolation {
        i: usize,
        j: usize,
        k: usize,
        lhs: Rational,
        rhs: Rational,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Jacobi identity violated: {identity} = {defect}")]
    JacobiViolation { identity: String, defect: Rational },

    #[error("constraint violated: theta1*omega2 - theta2*omega1 = {defect}")]
    ConstraintViolation { defect: Rational },

    #[error("metric is singular, no inverse exists")]
    SingularMetric,

    #[error("degenerate plane: g(x,x)g(y,y) - g(x,y)^2 = 0")]
    DegeneratePlane,

    #[error("degenerate pair: vectors are linearly dependent")]
    DegeneratePair,

    #[error("empty grid: {reason}")]
    EmptyGrid { reason: String },

    #[error("cannot parse rational from {input:?}")]
    ParseRational { input: String },

    #[error("invalid input: {message}")]
    InvalidInput { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
