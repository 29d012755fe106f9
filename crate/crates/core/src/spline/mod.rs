//! Exact spline and wavelet function machinery.

pub mod bspline;
pub mod piecewise;
pub mod wavelet;

pub use bspline::{bspline, bspline_derivative, bspline_dirac_jumps, eval_bspline};
pub use piecewise::{PiecewisePolynomial, TruncatedPower};
pub use wavelet::{
    scaled_basis_function, scaling_expansion, wavelet_expansion, wavelet_function, CoefficientTable,
    WaveletBasisSpec,
};
