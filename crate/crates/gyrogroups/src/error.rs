//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by constructors, parsers and checked operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GyroError {
    #[error("value is not finite")]
    NonFinite,

    #[error("coordinate list must be nonempty")]
    EmptyVector,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("point lies outside the open ball: |x|^2 = {norm_sq} is not < {bound}")]
    OutsideBall { norm_sq: String, bound: String },

    #[error("operands belong to different balls (dim or radius differ)")]
    ParamsMismatch,

    #[error("ball radius must be positive and finite")]
    InvalidRadius,

    #[error("ball dimension must be at least 1")]
    InvalidDimension,

    #[error("tolerance components must be finite and nonnegative")]
    InvalidTolerance,

    #[error("not a unimodular complex number: |g|^2 = {norm_sq}")]
    NotUnimodular { norm_sq: String },

    #[error("the rotation -1 is not an attainable gyration")]
    UnattainableGyration,

    #[error("disc correspondence requires dim = 2 and s = 1")]
    NotDiscCompatible,

    #[error("exact backend supports only rotations by multiples of pi/2, got theta = {theta}")]
    ExactRotationUnsupported { theta: f64 },

    #[error("cannot parse scalar from {text:?}")]
    ParseScalar { text: String },

    #[error("table parse error at line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error("table order {order} exceeds the exhaustive-classification cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("sample count must be at least 1")]
    NoSamples,

    #[error("{message}")]
    Unsupported { message: String },
}

pub type Result<T, E = GyroError> = std::result::Result<T, E>;
