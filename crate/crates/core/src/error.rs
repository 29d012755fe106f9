use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid B-spline order {0}")]
    InvalidOrder(usize),

    #[error("unsupported spline order r = {0} (only r = 2 and r = 3 have wavelet tables)")]
    UnsupportedOrder(usize),

    #[error("derivative order {derivative} exceeds spline order {order}")]
    DerivativeOrder { derivative: usize, order: usize },

    #[error("index {index} outside {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("level {level} is below the admissible level {min}")]
    Level { level: u32, min: u32 },

    #[error("parameter {name} = {value} outside {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("power term with exponent {exponent} is not integrable against basis function {index}")]
    NonIntegrable { exponent: f64, index: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular pivot in column {0}")]
    Singular(usize),

    #[error("Bi-CGSTAB breakdown at iteration {iteration}: {quantity} vanished")]
    Breakdown {
        iteration: usize,
        quantity: &'static str,
    },

    #[error("singular value decomposition did not converge")]
    Svd,

    #[error("report serialization: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        expected,
    }
}
