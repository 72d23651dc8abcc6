use thiserror::Error;

use crate::signature::Signature;

/// Errors raised by the algebra kernel and the operations built on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaError {
    #[error("invalid signature G({p},{q}): need 1 <= p+q <= {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("incompatible algebras: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation requires {expected}, got {found}")]
    WrongSignature { expected: Signature, found: Signature },

    #[error("basis index {index} out of range for {sig}")]
    BladeOutOfRange { index: usize, sig: Signature },

    #[error("expected a pure grade-{expected} value, found grades {found:?}")]
    Grade { expected: usize, found: Vec<usize> },

    #[error("inverse of a vector is only defined for nonzero vectors (a.a = {square:e})")]
    SingularVector { square: f64 },

    #[error("value is not invertible")]
    NonInvertible,

    #[error("bivector is not a blade: its square has non-scalar part of size {residual:e}")]
    NonBlade { residual: f64 },

    #[error("{what} is not unit (deviation {deviation:e})")]
    NotUnit { what: &'static str, deviation: f64 },

    #[error("rotor must contain only grades 0 and 2")]
    RotorGrades,

    #[error("direction vector is zero or null")]
    ZeroDirection,

    #[error("antipodal vectors: the rotation plane is undetermined")]
    Antipodal,

    #[error("cayley table for dimension {dim} exceeds the emission limit {max}")]
    TableTooLarge { dim: usize, max: usize },

    #[error("point is at the projection pole -e3")]
    PoleSingularity,

    #[error("antipode of the origin lies at infinity")]
    AntipodeAtInfinity,

    #[error("point is off the {what} (deviation {deviation:e})")]
    OffSurface { what: &'static str, deviation: f64 },

    #[error("degenerate triangle: sides are collinear")]
    Collinear,
}

pub type Result<T, E = GaError> = std::result::Result<T, E>;
