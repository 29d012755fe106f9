//! One-level and multilevel wavelet transforms.
//!
//! `P_k` maps the single-level basis `Phi_k` to the stacked basis
//! `(Phi_{k-1}; 2^{-(k-1) mu} Psi_{k-1})`. The multilevel transform
//!
//! `S_n = diag(2^{-n0 mu} I, I) blockdiag(P_{n0+1}, I) ... blockdiag(P_{n-1}, I) P_n`
//!
//! is kept in this factored form: each factor acts on a prefix of the vector,
//! so storage and application cost stay linear in the dimension.

pub mod sparse;

pub use sparse::SparseMatrix;

use crate::error::{domain, Error, Result};
use crate::linalg::{DenseMatrix, LinearOperator};
use crate::spline::wavelet::{scaling_expansion, wavelet_expansion, WaveletBasisSpec};

fn check_fine_level(spec: &WaveletBasisSpec, k: u32) -> Result<()> {
    if k <= spec.n0() {
        return Err(Error::Level {
            level: k,
            min: spec.n0() + 1,
        });
    }
    Ok(())
}

/// Unscaled scaling block: rows express `phi_{k-1,j}` in `Phi_k`.
pub fn scaling_block(spec: &WaveletBasisSpec, k: u32) -> Result<SparseMatrix> {
    check_fine_level(spec, k)?;
    let rows = (0..spec.dim(k - 1))
        .map(|j| scaling_expansion(spec, k - 1, j))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_rows(spec.dim(k), rows)
}

/// Unscaled wavelet block: rows express `psi_{k-1,j}`, `j = 1..=2^{k-1}`, in `Phi_k`.
pub fn wavelet_block(spec: &WaveletBasisSpec, k: u32) -> Result<SparseMatrix> {
    check_fine_level(spec, k)?;
    let rows = (1..=1usize << (k - 1))
        .map(|j| wavelet_expansion(spec, k - 1, j))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_rows(spec.dim(k), rows)
}

fn level_factor(spec: &WaveletBasisSpec, level: u32) -> f64 {
    2f64.powf(-(level as f64) * spec.mu())
}

/// `P_k` for the one-dimensional basis.
pub fn one_level_1d(spec: &WaveletBasisSpec, k: u32) -> Result<SparseMatrix> {
    let phi = scaling_block(spec, k)?;
    let psi = wavelet_block(spec, k)?.scaled(level_factor(spec, k - 1));
    SparseMatrix::vstack(&[&phi, &psi])
}

/// `P~_k` for the tensor basis, rows ordered as
/// `[phi ⊗ phi; c phi ⊗ psi; c psi ⊗ phi; c psi ⊗ psi]`, `c = 2^{-(k-1) mu}`.
pub fn one_level_2d(spec: &WaveletBasisSpec, k: u32) -> Result<SparseMatrix> {
    let phi = scaling_block(spec, k)?;
    let psi = wavelet_block(spec, k)?;
    let c = level_factor(spec, k - 1);
    SparseMatrix::vstack(&[
        &phi.kron(&phi),
        &phi.kron(&psi).scaled(c),
        &psi.kron(&phi).scaled(c),
        &psi.kron(&psi).scaled(c),
    ])
}

/// Multilevel transform `S_n` (1D) or `S~_n` (2D) in factored form.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformMatrix {
    dim: usize,
    n0: u32,
    n: u32,
    mu: f64,
    coarse_dim: usize,
    coarse_scale: f64,
    /// `P_n, P_{n-1}, ..., P_{n0+1}`, each acting on a prefix.
    stages: Vec<SparseMatrix>,
}

fn multilevel(spec: &WaveletBasisSpec, n: u32, square: bool) -> Result<TransformMatrix> {
    spec.check_level(n)?;
    let d = |k: u32| {
        let m = spec.dim(k);
        if square {
            m * m
        } else {
            m
        }
    };
    let stages = ((spec.n0() + 1)..=n)
        .rev()
        .map(|k| {
            if square {
                one_level_2d(spec, k)
            } else {
                one_level_1d(spec, k)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TransformMatrix {
        dim: d(n),
        n0: spec.n0(),
        n,
        mu: spec.mu(),
        coarse_dim: d(spec.n0()),
        coarse_scale: level_factor(spec, spec.n0()),
        stages,
    })
}

/// `S_n` over `Phi_n`.
pub fn multilevel_1d(spec: &WaveletBasisSpec, n: u32) -> Result<TransformMatrix> {
    multilevel(spec, n, false)
}

/// `S~_n` over the tensor basis `Phi_n ⊗ Phi_n`.
pub fn multilevel_2d(spec: &WaveletBasisSpec, n: u32) -> Result<TransformMatrix> {
    multilevel(spec, n, true)
}

impl TransformMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> (u32, u32) {
        (self.n0, self.n)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Stored nonzeros over all factors.
    pub fn nnz(&self) -> usize {
        self.coarse_dim + self.stages.iter().map(SparseMatrix::nnz).sum::<usize>()
    }

    /// `S x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "transform dimension");
        let mut y = x.to_vec();
        for p in &self.stages {
            let m = p.rows();
            let head = p.matvec(&y[..m]);
            y[..m].copy_from_slice(&head);
        }
        y[..self.coarse_dim].iter_mut().for_each(|v| *v *= self.coarse_scale);
        y
    }

    /// `S^T x`.
    pub fn apply_transpose(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "transform dimension");
        let mut y = x.to_vec();
        y[..self.coarse_dim].iter_mut().for_each(|v| *v *= self.coarse_scale);
        for p in self.stages.iter().rev() {
            let m = p.rows();
            let head = p.matvec_transpose(&y[..m]);
            y[..m].copy_from_slice(&head);
        }
        y
    }

    /// Dense `S`, column by column.
    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.dim;
        let mut d = DenseMatrix::zeros(n, n);
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            for (i, v) in self.apply(&e).into_iter().enumerate() {
                if v != 0.0 {
                    d.set(i, j, v);
                }
            }
            e[j] = 0.0;
        }
        d
    }

    /// `S A S^T` for a dense `A`.
    pub fn conjugate(&self, a: &DenseMatrix) -> Result<DenseMatrix> {
        if a.rows() != self.dim || a.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.rows().max(a.cols()),
            });
        }
        let n = self.dim;
        // rows of A S^T are S applied to rows of A
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for (j, v) in self.apply(a.row(i)).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        let mut out = DenseMatrix::zeros(n, n);
        let mut col = vec![0.0; n];
        for j in 0..n {
            for (i, c) in col.iter_mut().enumerate() {
                *c = m.get(i, j);
            }
            for (i, v) in self.apply(&col).into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

/// `S x` with a dimension check.
pub fn fast_apply(t: &TransformMatrix, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            got: x.len(),
        });
    }
    Ok(t.apply(x))
}

/// `S^T x` with a dimension check.
pub fn fast_apply_transpose(t: &TransformMatrix, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            got: x.len(),
        });
    }
    Ok(t.apply_transpose(x))
}

/// The matrix-free operator `S A S^T`.
#[derive(Clone, Debug)]
pub struct Conjugated<'a, A> {
    pub transform: &'a TransformMatrix,
    pub inner: A,
}

impl<'a, A: LinearOperator> Conjugated<'a, A> {
    pub fn new(transform: &'a TransformMatrix, inner: A) -> Result<Self> {
        if transform.dim() != inner.dim() {
            return Err(domain("operator dimension", inner.dim() as f64, "equal to the transform dimension"));
        }
        Ok(Self { transform, inner })
    }
}

impl<A: LinearOperator> LinearOperator for Conjugated<'_, A> {
    fn dim(&self) -> usize {
        self.transform.dim()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.transform
            .apply(&self.inner.apply(&self.transform.apply_transpose(x)))
    }
}
