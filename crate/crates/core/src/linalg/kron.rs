//! Sums of Kronecker products of one-dimensional factors.
//!
//! Vectors are flattened with the first (x) index slowest, so for a term
//! `A ⊗ B` the product is `A Y B^T` with `Y` the `n1 x n2` reshaping.

use super::dense::DenseMatrix;
use super::toeplitz::ToeplitzOperator;
use super::LinearOperator;
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Identity(usize),
    Toeplitz(ToeplitzOperator),
    Dense(DenseMatrix),
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Identity(n) => *n,
            Factor::Toeplitz(t) => t.dim(),
            Factor::Dense(d) => d.rows(),
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        match self {
            Factor::Identity(_) => x.to_vec(),
            Factor::Toeplitz(t) => t.apply(x),
            Factor::Dense(d) => d.matvec(x),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        match self {
            Factor::Identity(n) => DenseMatrix::identity(*n),
            Factor::Toeplitz(t) => t.to_dense(),
            Factor::Dense(d) => d.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KroneckerSumOperator {
    terms: Vec<(Factor, Factor)>,
    n1: usize,
    n2: usize,
}

impl KroneckerSumOperator {
    pub fn new(terms: Vec<(Factor, Factor)>) -> Result<Self> {
        let Some((l, r)) = terms.first() else {
            return Err(domain("terms", 0.0, "at least one Kronecker term"));
        };
        let (n1, n2) = (l.dim(), r.dim());
        for (l, r) in &terms {
            super::check_len(n1, l.dim())?;
            super::check_len(n2, r.dim())?;
        }
        Ok(Self { terms, n1, n2 })
    }

    pub fn terms(&self) -> &[(Factor, Factor)] {
        &self.terms
    }

    pub fn factor_dims(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let (n1, n2) = (self.n1, self.n2);
        let dim = n1 * n2;
        let mut acc = vec![0.0; dim * dim];
        for (l, r) in &self.terms {
            let (l, r) = (l.to_dense(), r.to_dense());
            for i1 in 0..n1 {
                for j1 in 0..n1 {
                    let a = l.get(i1, j1);
                    if a == 0.0 {
                        continue;
                    }
                    for i2 in 0..n2 {
                        let dst = &mut acc[(i1 * n2 + i2) * dim + j1 * n2..][..n2];
                        for (d, b) in dst.iter_mut().zip(r.row(i2)) {
                            *d += a * b;
                        }
                    }
                }
            }
        }
        DenseMatrix::new(dim, dim, acc).expect("square by construction")
    }
}

fn apply_term(left: &Factor, right: &Factor, n1: usize, n2: usize, y: &[f64], out: &mut [f64]) {
    // W = Y B^T, row by row
    let mut w = vec![0.0; n1 * n2];
    for (src, dst) in y.chunks_exact(n2).zip(w.chunks_exact_mut(n2)) {
        dst.copy_from_slice(&right.apply(src));
    }
    // Z = A W, column by column
    let mut column = vec![0.0; n1];
    for j in 0..n2 {
        for i in 0..n1 {
            column[i] = w[i * n2 + j];
        }
        for (i, v) in left.apply(&column).into_iter().enumerate() {
            out[i * n2 + j] += v;
        }
    }
}

impl LinearOperator for KroneckerSumOperator {
    fn dim(&self) -> usize {
        self.n1 * self.n2
    }

    fn apply(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.dim(), "Kronecker matvec dimension");
        let mut out = vec![0.0; y.len()];
        for (l, r) in &self.terms {
            apply_term(l, r, self.n1, self.n2, y, &mut out);
        }
        out
    }
}

/// `sum_k (L_k ⊗ R_k) y`.
pub fn kron_sum_matvec(op: &KroneckerSumOperator, y: &[f64]) -> Result<Vec<f64>> {
    super::check_len(op.dim(), y.len())?;
    Ok(op.apply(y))
}
