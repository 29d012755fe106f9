//! Scaled spline bases on `[0, 1]` and the compactly supported spline wavelets
//! with homogeneous boundary conditions for `(r, t) = (2, 2)` and `(3, 1)`.

use super::bspline::bspline;
use super::piecewise::PiecewisePolynomial;
use crate::error::{domain, Error, Result};

/// Fixes the wavelet family: spline order `r`, dual order `t`, coarsest level
/// `n0` and the Sobolev exponent `mu` used for level scaling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveletBasisSpec {
    r: usize,
    t: usize,
    n0: u32,
    mu: f64,
}

impl WaveletBasisSpec {
    pub fn new(r: usize, mu: f64) -> Result<Self> {
        let t = match r {
            2 => 2,
            3 => 1,
            _ => return Err(Error::UnsupportedOrder(r)),
        };
        if !(mu > 0.0 && mu < r as f64 - 0.5) {
            return Err(domain("mu", mu, "0 < mu < r - 1/2"));
        }
        let mut n0 = 0;
        while (1usize << n0) < r + t {
            n0 += 1;
        }
        Ok(Self { r, t, n0, mu })
    }

    /// Basis for the one-dimensional problem with fractional exponent `beta`:
    /// `mu = 1 - beta / 2`.
    pub fn for_1d(r: usize, beta: f64) -> Result<Self> {
        Self::new(r, 1.0 - beta / 2.0)
    }

    /// Basis for the two-dimensional operator of order `s + 1 - alpha`:
    /// `mu = (s + 1 - alpha) / 2`.
    pub fn for_2d(r: usize, s: u32, alpha: f64) -> Result<Self> {
        Self::new(r, (s as f64 + 1.0 - alpha) / 2.0)
    }

    pub fn r(&self) -> usize {
        self.r
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn n0(&self) -> u32 {
        self.n0
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `dim V_n = 2^n - r + 1`.
    pub fn dim(&self, n: u32) -> usize {
        (1usize << n) + 1 - self.r
    }

    pub(crate) fn check_level(&self, n: u32) -> Result<()> {
        if n < self.n0 {
            return Err(Error::Level {
                level: n,
                min: self.n0,
            });
        }
        Ok(())
    }
}

/// Refinement mask of `M_r` and the two-scale coefficients of the interior
/// wavelet and of the left boundary wavelet, all relative to `M_r(2x - k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub refinement: Vec<f64>,
    pub interior_wavelet: Vec<f64>,
    pub boundary_wavelet: Vec<f64>,
}

impl CoefficientTable {
    pub fn for_order(r: usize) -> Result<Self> {
        match r {
            2 => Ok(Self {
                refinement: vec![0.5, 1.0, 0.5],
                interior_wavelet: vec![1.0 / 24.0, -0.25, 5.0 / 12.0, -0.25, 1.0 / 24.0],
                boundary_wavelet: vec![3.0 / 8.0, -0.25, 1.0 / 24.0],
            }),
            3 => Ok(Self {
                refinement: vec![0.25, 0.75, 0.75, 0.25],
                interior_wavelet: vec![1.0 / 12.0, -5.0 / 12.0, 5.0 / 12.0, -1.0 / 12.0],
                boundary_wavelet: vec![5.0 / 12.0, -1.0 / 12.0],
            }),
            _ => Err(Error::UnsupportedOrder(r)),
        }
    }
}

/// `phi_{n,j}(x) = 2^{n/2} M_r(2^n x - j)` for `j` in `0..=2^n - r`.
pub fn scaled_basis_function(spec: &WaveletBasisSpec, n: u32, j: usize) -> Result<PiecewisePolynomial> {
    spec.check_level(n)?;
    let last = spec.dim(n) - 1;
    if j > last {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            lo: 0,
            hi: last as i64,
        });
    }
    let scale = (1u64 << n) as f64;
    Ok(bspline(spec.r)?.dilate(scale, j as f64, scale.sqrt()))
}

/// Coefficients of `phi_{n,j}` in the level-`n+1` basis.
pub fn scaling_expansion(spec: &WaveletBasisSpec, n: u32, j: usize) -> Result<Vec<(usize, f64)>> {
    spec.check_level(n)?;
    let last = spec.dim(n) - 1;
    if j > last {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            lo: 0,
            hi: last as i64,
        });
    }
    let table = CoefficientTable::for_order(spec.r)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Ok(table
        .refinement
        .iter()
        .enumerate()
        .map(|(l, h)| (2 * j + l, s * h))
        .collect())
}

/// Coefficients of the wavelet `psi_{n,j}`, `j` in `1..=2^n`, in the
/// level-`n+1` basis. `j = 1` is the left boundary wavelet, `j = 2^n` its
/// reflection `2^{n/2} psi_1(2^n (1 - x))`, the rest translates of the
/// interior wavelet `2^{n/2} psi(2^n x - j + 2)`.
pub fn wavelet_expansion(spec: &WaveletBasisSpec, n: u32, j: usize) -> Result<Vec<(usize, f64)>> {
    spec.check_level(n)?;
    let count = 1usize << n;
    if j < 1 || j > count {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            lo: 1,
            hi: count as i64,
        });
    }
    let table = CoefficientTable::for_order(spec.r)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let fine_last = spec.dim(n + 1) - 1;
    Ok(if j == 1 {
        table
            .boundary_wavelet
            .iter()
            .enumerate()
            .map(|(l, b)| (l, s * b))
            .collect()
    } else if j == count {
        table
            .boundary_wavelet
            .iter()
            .enumerate()
            .map(|(l, b)| (fine_last - l, s * b))
            .collect()
    } else {
        table
            .interior_wavelet
            .iter()
            .enumerate()
            .map(|(l, a)| (2 * (j - 2) + l, s * a))
            .collect()
    })
}

fn expand(spec: &WaveletBasisSpec, level: u32, coeffs: &[(usize, f64)]) -> Result<PiecewisePolynomial> {
    let basis = coeffs
        .iter()
        .map(|&(k, _)| scaled_basis_function(spec, level, k))
        .collect::<Result<Vec<_>>>()?;
    let terms: Vec<(f64, &PiecewisePolynomial)> = coeffs.iter().map(|(_, c)| *c).zip(basis.iter()).collect();
    Ok(PiecewisePolynomial::linear_combination(&terms))
}

/// `psi_{n,j}` as a piecewise polynomial.
pub fn wavelet_function(spec: &WaveletBasisSpec, n: u32, j: usize) -> Result<PiecewisePolynomial> {
    expand(spec, n + 1, &wavelet_expansion(spec, n, j)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spline::bspline::eval_bspline;

    #[test]
    fn spec_levels_and_admissibility() {
        assert_eq!(WaveletBasisSpec::new(2, 0.75).unwrap().n0(), 2);
        assert_eq!(WaveletBasisSpec::new(3, 0.75).unwrap().n0(), 2);
        assert!(WaveletBasisSpec::new(4, 0.75).is_err());
        assert!(WaveletBasisSpec::new(2, 1.5).is_err());
        assert!(WaveletBasisSpec::new(3, 0.0).is_err());
    }

    #[test]
    fn basis_supports() {
        let spec = WaveletBasisSpec::new(2, 0.75).unwrap();
        let f = scaled_basis_function(&spec, 3, 0).unwrap();
        assert_eq!(f.support(), (0.0, 0.25));
        let f = scaled_basis_function(&spec, 3, 3).unwrap();
        assert!((f.eval(0.5) - 8f64.sqrt()).abs() < 1e-14);
        let spec3 = WaveletBasisSpec::new(3, 0.75).unwrap();
        let f = scaled_basis_function(&spec3, 3, 5).unwrap();
        assert_eq!(f.support().1, 1.0);
        assert!(scaled_basis_function(&spec3, 3, 6).is_err());
        assert!(scaled_basis_function(&spec3, 1, 0).is_err());
    }

    #[test]
    fn interior_wavelet_coefficients() {
        let spec = WaveletBasisSpec::new(2, 0.75).unwrap();
        let e = wavelet_expansion(&spec, 2, 2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let want = [1.0 / 24.0, -0.25, 5.0 / 12.0, -0.25, 1.0 / 24.0];
        for (l, (k, c)) in e.iter().enumerate() {
            assert_eq!(*k, l);
            assert!((c - s * want[l]).abs() < 1e-16);
        }
        let spec3 = WaveletBasisSpec::new(3, 0.75).unwrap();
        let e = wavelet_expansion(&spec3, 2, 1).unwrap();
        assert_eq!(e.len(), 2);
        assert!((e[0].1 - s * 5.0 / 12.0).abs() < 1e-16);
        assert!((e[1].1 + s / 12.0).abs() < 1e-16);
        assert!(wavelet_expansion(&spec3, 2, 0).is_err());
        assert!(wavelet_expansion(&spec3, 2, 5).is_err());
    }

    /// The right boundary wavelet is the mirror image of the left one.
    #[test]
    fn right_boundary_wavelet_is_reflection() {
        for r in [2, 3] {
            let spec = WaveletBasisSpec::new(r, 0.75).unwrap();
            let n = 3;
            let left = wavelet_function(&spec, n, 1).unwrap();
            let right = wavelet_function(&spec, n, 1 << n).unwrap();
            for i in 0..=200 {
                let x = i as f64 / 200.0;
                assert!((right.eval(x) - left.eval(1.0 - x)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn interior_wavelets_match_definition() {
        for r in [2, 3] {
            let spec = WaveletBasisSpec::new(r, 0.75).unwrap();
            let table = CoefficientTable::for_order(r).unwrap();
            let n = 3u32;
            let scale = (1 << n) as f64;
            for j in 2..(1usize << n) {
                let psi = wavelet_function(&spec, n, j).unwrap();
                for i in 0..=300 {
                    let x = i as f64 / 300.0;
                    let y = scale * x - j as f64 + 2.0;
                    let direct: f64 = table
                        .interior_wavelet
                        .iter()
                        .enumerate()
                        .map(|(l, a)| a * eval_bspline(r, 2.0 * y - l as f64).unwrap())
                        .sum();
                    assert!((psi.eval(x) - scale.sqrt() * direct).abs() < 1e-12);
                }
            }
        }
    }
}
