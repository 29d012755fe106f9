//! Spectral condition numbers from a full singular value decomposition.

use super::dense::DenseMatrix;
use crate::error::{Error, Result};
use faer::Mat;

/// Singular values in decreasing order.
pub fn singular_values(a: &DenseMatrix) -> Result<Vec<f64>> {
    let m = Mat::<f64>::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j));
    m.singular_values().map_err(|_| Error::Svd)
}

/// `sigma_max / sigma_min`; infinite when `sigma_min < 1e-300`.
pub fn condition_number_2(a: &DenseMatrix) -> Result<f64> {
    let s = singular_values(a)?;
    let (Some(&max), Some(&min)) = (s.first(), s.last()) else {
        return Ok(1.0);
    };
    if min < 1e-300 {
        return Ok(f64::INFINITY);
    }
    Ok(max / min)
}
