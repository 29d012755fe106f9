//! Compressed sparse row matrices: just enough for the wavelet transforms.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    indptr: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    /// Build from per-row `(column, value)` lists; duplicate columns are summed.
    pub fn from_rows(cols: usize, rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        let mut indptr = Vec::with_capacity(rows.len() + 1);
        let mut indices = Vec::new();
        let mut values = Vec::new();
        indptr.push(0);
        for mut row in rows.iter().cloned() {
            row.sort_by_key(|e| e.0);
            let start = indices.len();
            for (c, v) in row {
                if c >= cols {
                    return Err(Error::IndexOutOfRange {
                        index: c as i64,
                        lo: 0,
                        hi: cols as i64 - 1,
                    });
                }
                if indices.len() > start && indices[indices.len() - 1] == c {
                    *values.last_mut().unwrap() += v;
                } else {
                    indices.push(c);
                    values.push(v);
                }
            }
            indptr.push(indices.len());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            indptr,
            indices,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            indptr: (0..=n).collect(),
            indices: (0..n).collect(),
            values: vec![1.0; n],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// `(column, value)` pairs of row `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.indptr[i]..self.indptr[i + 1];
        self.indices[span.clone()].iter().copied().zip(self.values[span].iter().copied())
    }

    pub fn row_entries(&self) -> Vec<Vec<(usize, f64)>> {
        (0..self.rows).map(|i| self.row(i).collect()).collect()
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "sparse matvec dimension");
        (0..self.rows).map(|i| self.row(i).map(|(c, v)| v * x[c]).sum()).collect()
    }

    pub fn matvec_transpose(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.rows, "sparse matvec dimension");
        let mut y = vec![0.0; self.cols];
        for (i, xi) in x.iter().enumerate() {
            for (c, v) in self.row(i) {
                y[c] += v * xi;
            }
        }
        y
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        out.values.iter_mut().for_each(|v| *v *= s);
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &SparseMatrix) -> Self {
        let mut rows = Vec::with_capacity(self.rows * other.rows);
        for i in 0..self.rows {
            for k in 0..other.rows {
                let mut row = Vec::new();
                for (c1, v1) in self.row(i) {
                    for (c2, v2) in other.row(k) {
                        row.push((c1 * other.cols + c2, v1 * v2));
                    }
                }
                rows.push(row);
            }
        }
        Self::from_rows(self.cols * other.cols, rows).expect("columns in range by construction")
    }

    /// Stack blocks with equal column counts on top of each other.
    pub fn vstack(blocks: &[&SparseMatrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: b.cols,
                });
            }
            rows.extend(b.row_entries());
        }
        Self::from_rows(cols, rows)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (c, v) in self.row(i) {
                d.set(i, c, d.get(i, c) + v);
            }
        }
        d
    }
}
