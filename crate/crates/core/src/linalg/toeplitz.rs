//! Toeplitz operators with circulant-embedding FFT products.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::dense::DenseMatrix;
use super::LinearOperator;
use crate::error::{domain, Result};

/// Bandwidths up to this size are applied directly instead of through the FFT.
const DIRECT_BAND: usize = 48;

struct Plan {
    len: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Plan {
    fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            len,
            forward: planner.plan_fft_forward(len),
            inverse: planner.plan_fft_inverse(len),
        }
    }
}

fn embedding_len(dim: usize) -> usize {
    (2 * dim).next_power_of_two().max(2)
}

/// `T[i][j] = col[i - j]` for `i >= j`, `row[j - i]` otherwise.
#[derive(Clone)]
pub struct ToeplitzOperator {
    col: Vec<f64>,
    row: Vec<f64>,
    lower: usize,
    upper: usize,
    plan: Arc<Plan>,
    spectrum: Arc<Vec<Complex64>>,
}

impl fmt::Debug for ToeplitzOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ToeplitzOperator")
            .field("dim", &self.col.len())
            .field("col", &self.col)
            .field("row", &self.row)
            .finish()
    }
}

impl PartialEq for ToeplitzOperator {
    fn eq(&self, other: &Self) -> bool {
        self.col == other.col && self.row == other.row
    }
}

fn last_nonzero(v: &[f64]) -> usize {
    v.iter().rposition(|x| *x != 0.0).unwrap_or(0)
}

impl ToeplitzOperator {
    pub fn new(col: Vec<f64>, row: Vec<f64>) -> Result<Self> {
        super::check_len(col.len(), row.len())?;
        if col.is_empty() {
            return Err(domain("dimension", 0.0, "dimension >= 1"));
        }
        if col[0] != row[0] {
            return Err(domain("row[0]", row[0], "row[0] == col[0]"));
        }
        let plan = Plan::new(embedding_len(col.len()));
        let mut c = vec![Complex64::new(0.0, 0.0); plan.len];
        for (i, v) in col.iter().enumerate() {
            c[i].re = *v;
        }
        for (k, v) in row.iter().enumerate().skip(1) {
            c[plan.len - k].re = *v;
        }
        plan.forward.process(&mut c);
        Ok(Self {
            lower: last_nonzero(&col),
            upper: last_nonzero(&row),
            col,
            row,
            plan: Arc::new(plan),
            spectrum: Arc::new(c),
        })
    }

    pub fn symmetric(col: Vec<f64>) -> Result<Self> {
        Self::new(col.clone(), col)
    }

    pub fn first_column(&self) -> &[f64] {
        &self.col
    }

    pub fn first_row(&self) -> &[f64] {
        &self.row
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i >= j {
            self.col[i - j]
        } else {
            self.row[j - i]
        }
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.row.clone(), self.col.clone()).expect("transpose of a valid operator")
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.col.len();
        DenseMatrix::from_fn(n, n, |i, j| self.entry(i, j))
    }

    fn is_banded(&self) -> bool {
        self.lower.max(self.upper) <= DIRECT_BAND
    }

    /// Product computed by the banded loop regardless of bandwidth.
    pub fn apply_direct(&self, x: &[f64]) -> Vec<f64> {
        let n = self.col.len();
        assert_eq!(x.len(), n, "Toeplitz matvec dimension");
        let mut y = vec![0.0; n];
        for (i, yi) in y.iter_mut().enumerate() {
            let lo = i.saturating_sub(self.lower);
            let hi = (i + self.upper).min(n - 1);
            let mut s = 0.0;
            for j in lo..=hi {
                s += self.entry(i, j) * x[j];
            }
            *yi = s;
        }
        y
    }

    /// Product computed through the circulant embedding.
    pub fn apply_fft(&self, x: &[f64]) -> Vec<f64> {
        let n = self.col.len();
        assert_eq!(x.len(), n, "Toeplitz matvec dimension");
        let mut buf = vec![Complex64::new(0.0, 0.0); self.plan.len];
        for (b, v) in buf.iter_mut().zip(x) {
            b.re = *v;
        }
        self.plan.forward.process(&mut buf);
        for (b, s) in buf.iter_mut().zip(self.spectrum.iter()) {
            *b *= s;
        }
        self.plan.inverse.process(&mut buf);
        let inv = 1.0 / self.plan.len as f64;
        buf[..n].iter().map(|z| z.re * inv).collect()
    }
}

impl LinearOperator for ToeplitzOperator {
    fn dim(&self) -> usize {
        self.col.len()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        if self.is_banded() {
            self.apply_direct(x)
        } else {
            self.apply_fft(x)
        }
    }
}

/// `(a p T(q1, a1) + a q T(a1, q1)) y` with a single complex FFT product:
/// the left-sided part acts on the real part of `y + i reverse(y)` and the
/// right-sided part, `T^T = J T J`, is read back reversed from the imaginary
/// part. `a1` holds the (short) first row, `q1` the first column.
pub fn toeplitz_matvec_fft(a1: &[f64], q1: &[f64], y: &[f64], a: f64, p: f64, q: f64) -> Result<Vec<f64>> {
    let m = q1.len();
    super::check_len(m, y.len())?;
    if a1.is_empty() || a1.len() > m || a1[0] != q1[0] {
        return Err(domain("a1 length", a1.len() as f64, "1 <= len(a1) <= len(q1), a1[0] == q1[0]"));
    }
    let len = embedding_len(m);
    let mut planner = FftPlanner::new();
    let forward = planner.plan_fft_forward(len);
    let inverse = planner.plan_fft_inverse(len);

    let mut c = vec![Complex64::new(0.0, 0.0); len];
    for (i, v) in q1.iter().enumerate() {
        c[i].re = *v;
    }
    for (k, v) in a1.iter().enumerate().skip(1) {
        c[len - k].re = *v;
    }
    let mut t = vec![Complex64::new(0.0, 0.0); len];
    for i in 0..m {
        t[i] = Complex64::new(y[i], y[m - 1 - i]);
    }
    forward.process(&mut c);
    forward.process(&mut t);
    for (ti, ci) in t.iter_mut().zip(&c) {
        *ti *= ci;
    }
    inverse.process(&mut t);
    let inv = 1.0 / len as f64;
    Ok((0..m)
        .map(|i| a * (p * t[i].re + q * t[m - 1 - i].im) * inv)
        .collect())
}
