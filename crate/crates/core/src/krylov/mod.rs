//! Krylov solvers with optional wavelet preconditioning.
//!
//! Both solvers start from the zero vector and stop on the absolute 2-norm of
//! the residual they iterate on.

mod bicgstab;
mod gmres;

pub use bicgstab::bicgstab;
pub use gmres::gmres;

use std::time::Duration;

use crate::error::{domain, Result};
use crate::transform::TransformMatrix;

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig<'a> {
    /// Stopping threshold on the residual 2-norm.
    pub tol: f64,
    pub max_iter: usize,
    /// GMRES restart length; `0` runs full GMRES.
    pub restart: usize,
    pub preconditioner: Option<&'a TransformMatrix>,
}

impl Default for SolverConfig<'_> {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            max_iter: 100_000,
            restart: 0,
            preconditioner: None,
        }
    }
}

impl<'a> SolverConfig<'a> {
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_restart(mut self, restart: usize) -> Self {
        self.restart = restart;
        self
    }

    pub fn with_preconditioner(mut self, s: &'a TransformMatrix) -> Self {
        self.preconditioner = Some(s);
        self
    }

    pub(crate) fn validate(&self, dim: usize) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(domain("tol", self.tol, "tol > 0"));
        }
        if let Some(s) = self.preconditioner {
            crate::linalg::check_len(dim, s.dim())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverReport {
    /// Bi-CGSTAB counts an exit at the intermediate check as half an
    /// iteration; GMRES counts Arnoldi steps.
    pub iterations: f64,
    /// Iteration count as printed: `"27.0"`, or `"6×50+47"` for restarted GMRES.
    pub label: String,
    pub residual_history: Vec<f64>,
    pub converged: bool,
    pub wall_time: Duration,
    pub solution: Vec<f64>,
}
