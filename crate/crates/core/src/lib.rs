//! Wavelet-Galerkin discretization of steady fractional elliptic equations
//! on `(0, 1)` and `(0, 1)^2`.
//!
//! Stiffness matrices over the single-scale spline basis are Toeplitz (1D) or
//! Kronecker sums of Toeplitz factors (2D); conjugation with the multilevel
//! wavelet transform keeps their condition numbers bounded in the level.
//!
//! ```
//! use fracwave::assembly::{assemble_a, FractionalForm1D};
//! use fracwave::linalg::LinearOperator;
//!
//! let form = FractionalForm1D::new(1.0, 1.0, 0.0, 0.5, 2, 6).unwrap();
//! let a = assemble_a(&form).unwrap();
//! assert_eq!(a.dim(), 63);
//! ```

pub mod assembly;
pub mod error;
pub mod experiments;
pub mod krylov;
pub mod linalg;
pub mod special;
pub mod spline;
pub mod transform;

pub use error::{Error, Result};
