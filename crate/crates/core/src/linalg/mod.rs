//! Matrix-free operators and the dense kernels used at desk scale.

pub mod cond;
pub mod dense;
pub mod kron;
pub mod toeplitz;

pub use cond::condition_number_2;
pub use dense::{lu_solve_doolittle, DenseMatrix, DoolittleLu};
pub use kron::{kron_sum_matvec, Factor, KroneckerSumOperator};
pub use toeplitz::{toeplitz_matvec_fft, ToeplitzOperator};
pub use cond::singular_values;

/// A square linear map applied matrix-free.
pub trait LinearOperator {
    fn dim(&self) -> usize;

    /// `y = A x`. Panics if `x.len() != self.dim()`.
    fn apply(&self, x: &[f64]) -> Vec<f64>;
}

impl LinearOperator for DenseMatrix {
    fn dim(&self) -> usize {
        assert_eq!(self.rows(), self.cols(), "operator must be square");
        self.rows()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.matvec(x)
    }
}

impl<T: LinearOperator + ?Sized> LinearOperator for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        (**self).apply(x)
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> crate::error::Result<()> {
    if expected != got {
        return Err(crate::error::Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// A closure viewed as an operator.
pub struct FnOperator<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[f64]) -> Vec<f64>> FnOperator<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(&[f64]) -> Vec<f64>> LinearOperator for FnOperator<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "operator dimension");
        (self.f)(x)
    }
}
