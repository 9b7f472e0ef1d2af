use thiserror::Error;

/// Errors raised by the arithmetic, series and inversion layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("coefficient {index} requested beyond precision {precision}")]
    OutOfPrecision { index: usize, precision: usize },

    #[error("derivative of a precision-0 series is undefined")]
    DerivativeOfPrecisionZero,

    #[error("series has zero constant term and no reciprocal")]
    NotInvertible,

    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstantTerm,

    #[error("{what} has precision {have}, need at least {need}")]
    InsufficientPrecision {
        what: &'static str,
        need: usize,
        have: usize,
    },

    #[error("series has no compositional inverse: {0}")]
    NoCompositionalInverse(&'static str),

    #[error("fixed-point iteration did not settle at degree {degree}")]
    FixpointFailed { degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
