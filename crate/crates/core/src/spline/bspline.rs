//! Cardinal B-splines `M_m`: the `m`-fold convolution of the indicator of `[0, 1)`.

use super::piecewise::PiecewisePolynomial;
use crate::error::{Error, Result};
use crate::special::binomial;

/// `M_m(x)` by the two-term convolution recursion
/// `M_m(x) = (x M_{m-1}(x) + (m - x) M_{m-1}(x - 1)) / (m - 1)`.
pub fn eval_bspline(m: usize, x: f64) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidOrder(m));
    }
    Ok(eval_recursive(m, x))
}

fn eval_recursive(m: usize, x: f64) -> f64 {
    if m == 1 {
        return if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 };
    }
    if x <= 0.0 || x >= m as f64 {
        return 0.0;
    }
    let mf = m as f64;
    (x * eval_recursive(m - 1, x) + (mf - x) * eval_recursive(m - 1, x - 1.0)) / (mf - 1.0)
}

/// `M_m` as a piecewise polynomial on the integer knots `0..=m`, built from
/// `M_m(x) = sum_k (-1)^k C(m, k) (x - k)_+^(m-1) / (m-1)!`.
pub fn bspline(m: usize) -> Result<PiecewisePolynomial> {
    if m < 1 {
        return Err(Error::InvalidOrder(m));
    }
    let deg = m - 1;
    let fact: f64 = (1..=deg).map(|i| i as f64).product();
    let coeffs = (0..m)
        .map(|piece| {
            let mut local = vec![0.0; m];
            for k in 0..=piece {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let w = sign * binomial(m, k) / fact;
                // (u + piece - k)^deg expanded in u
                let off = (piece - k) as f64;
                for (l, slot) in local.iter_mut().enumerate() {
                    *slot += w * binomial(deg, l) * off.powi((deg - l) as i32);
                }
            }
            local
        })
        .collect();
    PiecewisePolynomial::new((0..=m).map(|k| k as f64).collect(), coeffs)
}

/// Classical `k`-th derivative of `M_m`.
///
/// For `k = m` the classical part is identically zero and the whole derivative
/// is the Dirac comb returned by [`bspline_dirac_jumps`].
pub fn bspline_derivative(m: usize, k: usize) -> Result<PiecewisePolynomial> {
    if k > m {
        return Err(Error::DerivativeOrder {
            derivative: k,
            order: m,
        });
    }
    Ok(bspline(m)?.nth_derivative(k))
}

/// Dirac weights of `M_m^(m)`: the jumps of the piecewise-constant
/// `M_m^(m-1)` at the knots `0..=m`, namely `(-1)^k C(m, k)`.
pub fn bspline_dirac_jumps(m: usize) -> Result<Vec<(f64, f64)>> {
    if m < 1 {
        return Err(Error::InvalidOrder(m));
    }
    Ok(bspline(m)?.nth_derivative(m - 1).jumps())
}
