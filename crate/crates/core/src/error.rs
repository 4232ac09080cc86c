use thiserror::Error;

/// Errors raised by curve construction and the approximation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("expected {expected} control points, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("curve has no control points or zero dimension")]
    Empty,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("weight {index} is not strictly positive ({value})")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("parameter {value} outside {range}")]
    ParameterOutOfRange { value: f64, range: &'static str },

    #[error("sequence of length {len} too short for a difference of order {order}")]
    InsufficientLength { len: usize, order: usize },

    #[error("derivative order {order} exceeds degree {degree}")]
    OrderTooHigh { order: usize, degree: usize },

    #[error("constraint orders k={k}, l={l} exceed degree m={m}")]
    ConstraintTooLarge { k: usize, l: usize, m: usize },

    #[error("Jacobi exponent {name}={value} must be finite and > -1")]
    InvalidJacobiExponent { name: &'static str, value: f64 },

    #[error("index {j} lies inside the interior range [{lo}, {hi}]")]
    InteriorIndex { j: usize, lo: usize, hi: usize },

    #[error("degree {m} exceeds the supported cap {cap} for the dual-basis recurrence")]
    DegreeCap { m: usize, cap: usize },

    #[error("dual-basis recurrence produced a non-finite coefficient at ({i}, {j})")]
    Unstable { i: usize, j: usize },

    #[error(
        "weight nearly singular or tolerance unreachable: tail {best_tail:e} at M={best_order} (cap {max_order})"
    )]
    QuadratureNotConverged {
        max_order: usize,
        best_order: usize,
        best_tail: f64,
        /// Coefficients of the best series found, widened to `f64`.
        best_coefficients: Vec<f64>,
    },

    #[error("interpolation nodes must increase strictly from 0 to 1")]
    NonMonotoneNodes,

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),

    #[error("join {join}: continuity order {order} needs l >= {required} on the left segment and k >= {required} on the right (got l={l}, k={k})")]
    ContinuityViolation {
        join: usize,
        order: usize,
        required: usize,
        l: usize,
        k: usize,
    },

    #[error("segments {join} and {next} do not share their join point")]
    BrokenJoin { join: usize, next: usize },

    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("expected {expected} per-segment requests, got {got}")]
    RequestCount { expected: usize, got: usize },
}

impl Error {
    /// True for failures of the numerical machinery, as opposed to invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::QuadratureNotConverged { .. } | Error::Unstable { .. } | Error::DegreeCap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
