//! `L^2(Omega)` errors of spline expansions against closed-form solutions.

use crate::assembly::{eval_terms, PowerTerm, SeparableTerm};
use crate::error::{Error, Result};
use crate::special::gauss_legendre;
use crate::spline::bspline::eval_bspline;
use crate::spline::wavelet::WaveletBasisSpec;

/// Per cell: quadrature abscissae and the values of the `r` basis functions
/// that do not vanish there (`phi_{c-r+1..=c}`, missing indices set to zero).
struct CellTable {
    r: usize,
    points: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// `[cell][point][l]`, basis index `cell + l + 1 - r`
    values: Vec<f64>,
}

impl CellTable {
    fn new(spec: &WaveletBasisSpec, n: u32) -> Result<Self> {
        let r = spec.r();
        let points = r - 1 + 6;
        let (gx, gw) = gauss_legendre(points);
        let cells = 1usize << n;
        let h = 1.0 / cells as f64;
        let amp = (cells as f64).sqrt();
        let mut nodes = Vec::with_capacity(cells * points);
        let mut weights = Vec::with_capacity(cells * points);
        let mut values = Vec::with_capacity(cells * points * r);
        for c in 0..cells {
            for (t, w) in gx.iter().zip(&gw) {
                let u = 0.5 * (t + 1.0); // local coordinate in (0, 1)
                nodes.push((c as f64 + u) * h);
                weights.push(0.5 * w * h);
                for l in 0..r {
                    // M_r evaluated at c + u - j with j = c + l + 1 - r
                    values.push(amp * eval_bspline(r, u + (r - 1 - l) as f64)?);
                }
            }
        }
        Ok(Self {
            r,
            points,
            nodes,
            weights,
            values,
        })
    }

    fn cells(&self) -> usize {
        self.nodes.len() / self.points
    }

    /// Spline value at quadrature point `k` of cell `c`.
    fn eval(&self, coeffs: &[f64], c: usize, k: usize) -> f64 {
        let base = (c * self.points + k) * self.r;
        let mut s = 0.0;
        for l in 0..self.r {
            let j = c as i64 + l as i64 + 1 - self.r as i64;
            if j >= 0 && (j as usize) < coeffs.len() {
                s += coeffs[j as usize] * self.values[base + l];
            }
        }
        s
    }
}

/// `||sum_j c_j phi_{n,j} - u||_{L^2(0,1)}` by Gauss-Legendre quadrature with
/// `r + 5` points per cell.
pub fn l2_error_1d(coeffs: &[f64], exact: &[PowerTerm], spec: &WaveletBasisSpec, n: u32) -> Result<f64> {
    spec.check_level(n)?;
    if coeffs.len() != spec.dim(n) {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(n),
            got: coeffs.len(),
        });
    }
    let table = CellTable::new(spec, n)?;
    let mut acc = 0.0;
    for c in 0..table.cells() {
        for k in 0..table.points {
            let idx = c * table.points + k;
            let e = table.eval(coeffs, c, k) - eval_terms(exact, table.nodes[idx]);
            acc += table.weights[idx] * e * e;
        }
    }
    Ok(acc.sqrt())
}

/// Two-dimensional analogue over the tensor basis, coefficients flattened
/// with the x index slowest.
pub fn l2_error_2d(coeffs: &[f64], exact: &[SeparableTerm], spec: &WaveletBasisSpec, n: u32) -> Result<f64> {
    spec.check_level(n)?;
    let m = spec.dim(n);
    if coeffs.len() != m * m {
        return Err(Error::DimensionMismatch {
            expected: m * m,
            got: coeffs.len(),
        });
    }
    let table = CellTable::new(spec, n)?;
    let (cells, pts, r) = (table.cells(), table.points, table.r);
    // exact solution is separable term by term: tabulate factors at the nodes
    let factors: Vec<(Vec<f64>, Vec<f64>)> = exact
        .iter()
        .map(|t| {
            (
                table.nodes.iter().map(|x| eval_terms(&t.x, *x)).collect(),
                table.nodes.iter().map(|y| eval_terms(&t.y, *y)).collect(),
            )
        })
        .collect();
    let mut acc = 0.0;
    let mut partial = vec![0.0; m * pts];
    for cx in 0..cells {
        // contract the x index first: partial[j2][kx] = sum_l c[j1, j2] phi_{j1}(x_k)
        partial.iter_mut().for_each(|v| *v = 0.0);
        for l in 0..r {
            let j1 = cx as i64 + l as i64 + 1 - r as i64;
            if j1 < 0 || j1 as usize >= m {
                continue;
            }
            let row = &coeffs[j1 as usize * m..(j1 as usize + 1) * m];
            for kx in 0..pts {
                let phi = table.values[(cx * pts + kx) * r + l];
                for (j2, c) in row.iter().enumerate() {
                    partial[j2 * pts + kx] += c * phi;
                }
            }
        }
        for cy in 0..cells {
            for ky in 0..pts {
                let iy = cy * pts + ky;
                for kx in 0..pts {
                    let ix = cx * pts + kx;
                    let mut u = 0.0;
                    for l in 0..r {
                        let j2 = cy as i64 + l as i64 + 1 - r as i64;
                        if j2 >= 0 && (j2 as usize) < m {
                            u += partial[j2 as usize * pts + kx] * table.values[iy * r + l];
                        }
                    }
                    let ex: f64 = factors.iter().map(|(fx, fy)| fx[ix] * fy[iy]).sum();
                    let e = u - ex;
                    acc += table.weights[ix] * table.weights[iy] * e * e;
                }
            }
        }
    }
    Ok(acc.sqrt())
}
