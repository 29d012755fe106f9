//! Drivers for condition-number tables and solver benchmarks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::norms::{l2_error_1d, l2_error_2d};
use super::problems::{Problem1D, Problem2D};
use super::report::{BenchRow, ConditionRow, ReportDocument};
use crate::assembly::{assemble_a, assemble_c2d, load_vector_1d, load_vector_2d, FractionalForm1D, FractionalForm2D};
use crate::error::{domain, Result};
use crate::krylov::{bicgstab, gmres, SolverConfig, SolverReport};
use crate::linalg::{condition_number_2, DenseMatrix, DoolittleLu, LinearOperator};
use crate::transform::{multilevel_1d, multilevel_2d, TransformMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    Lu,
    Bicgstab,
    PreBicgstab,
    Gmres,
    PreGmres,
}

impl SolverKind {
    pub const ALL: [SolverKind; 5] = [
        SolverKind::Lu,
        SolverKind::Bicgstab,
        SolverKind::PreBicgstab,
        SolverKind::Gmres,
        SolverKind::PreGmres,
    ];

    pub fn is_preconditioned(self) -> bool {
        matches!(self, SolverKind::PreBicgstab | SolverKind::PreGmres)
    }

    fn name(self, restart: usize) -> String {
        let base = match self {
            SolverKind::Lu => "lu",
            SolverKind::Bicgstab => "bicgstab",
            SolverKind::PreBicgstab => "pre-bicgstab",
            SolverKind::Gmres => "gmres",
            SolverKind::PreGmres => "pre-gmres",
        };
        match self {
            SolverKind::Gmres | SolverKind::PreGmres if restart > 0 => format!("{base}({restart})"),
            _ => base.to_string(),
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name(0))
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name(0) == s)
            .ok_or_else(|| format!("unknown solver `{s}` (expected lu, bicgstab, pre-bicgstab, gmres, pre-gmres)"))
    }
}

/// Condition numbers of the 1D matrices `A_n` and `B_n = S_n A_n S_n^T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Condition1DConfig {
    pub a: f64,
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub r: usize,
    pub nmin: u32,
    pub nmax: u32,
}

/// Condition numbers of `C_n^s` and `D_n^s = S~_n C_n^s S~_n^T`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Condition2DConfig {
    pub s: u32,
    pub a: (f64, f64),
    pub p1: f64,
    pub p2: f64,
    pub alpha: f64,
    pub beta: f64,
    pub r: usize,
    pub nmin: u32,
    pub nmax: u32,
}

fn check_range(nmin: u32, nmax: u32) -> Result<()> {
    if nmin > nmax {
        return Err(domain("nmin", nmin as f64, "nmin <= nmax"));
    }
    Ok(())
}

/// `(kappa(A), kappa(S A S^T))` for a dense `A`.
pub fn condition_pair(a: &DenseMatrix, s: &TransformMatrix) -> Result<(f64, f64)> {
    let ka = condition_number_2(a)?;
    let kb = condition_number_2(&s.conjugate(a)?)?;
    Ok((ka, kb))
}

pub fn condition_row_1d(form: &FractionalForm1D) -> Result<ConditionRow> {
    let a = assemble_a(form)?.to_dense();
    let s = multilevel_1d(&form.basis()?, form.n)?;
    let (kappa, kappa_preconditioned) = condition_pair(&a, &s)?;
    Ok(ConditionRow {
        n: form.n,
        size: form.dim(),
        kappa,
        kappa_preconditioned,
    })
}

pub fn condition_row_2d(form: &FractionalForm2D) -> Result<ConditionRow> {
    let c = assemble_c2d(form)?.to_dense();
    let s = multilevel_2d(&form.basis()?, form.n)?;
    let (kappa, kappa_preconditioned) = condition_pair(&c, &s)?;
    Ok(ConditionRow {
        n: form.n,
        size: form.dim(),
        kappa,
        kappa_preconditioned,
    })
}

pub fn run_condition_table_1d(cfg: &Condition1DConfig) -> Result<ReportDocument> {
    check_range(cfg.nmin, cfg.nmax)?;
    let rows = (cfg.nmin..=cfg.nmax)
        .map(|n| condition_row_1d(&FractionalForm1D::new(cfg.a, cfg.p, cfg.q, cfg.beta, cfg.r, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument::Condition {
        title: format!(
            "kappa(A_n), kappa(B_n): beta = {}, p = {}, q = {}, r = {}",
            cfg.beta, cfg.p, cfg.q, cfg.r
        ),
        rows,
    })
}

pub fn run_condition_table_2d(cfg: &Condition2DConfig) -> Result<ReportDocument> {
    check_range(cfg.nmin, cfg.nmax)?;
    let rows = (cfg.nmin..=cfg.nmax)
        .map(|n| {
            let form = FractionalForm2D::new(
                cfg.s,
                cfg.a,
                (cfg.p1, 1.0 - cfg.p1),
                (cfg.p2, 1.0 - cfg.p2),
                cfg.alpha,
                cfg.beta,
                cfg.r,
                n,
            )?;
            condition_row_2d(&form)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument::Condition {
        title: format!(
            "kappa(C_n^s), kappa(D_n^s): s = {}, alpha = {}, beta = {}, r = {}",
            cfg.s, cfg.alpha, cfg.beta, cfg.r
        ),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub r: usize,
    pub nmin: u32,
    pub nmax: u32,
    pub solvers: Vec<SolverKind>,
    pub tol: f64,
    pub restart: usize,
    pub max_iter: usize,
}

impl BenchConfig {
    pub fn new(r: usize, nmin: u32, nmax: u32, solvers: Vec<SolverKind>) -> Self {
        Self {
            r,
            nmin,
            nmax,
            solvers,
            tol: 1e-7,
            restart: 0,
            max_iter: 200_000,
        }
    }
}

/// Outcome of one solve: the report (iterative) or `None` (direct).
pub struct SolveOutcome {
    pub solution: Vec<f64>,
    pub seconds: f64,
    pub report: Option<SolverReport>,
}

impl SolveOutcome {
    pub fn label(&self) -> String {
        self.report.as_ref().map_or("-".into(), |r| r.label.clone())
    }

    pub fn converged(&self) -> bool {
        self.report.as_ref().is_none_or(|r| r.converged)
    }
}

/// Solve `A y = b` with the requested method; `dense` materializes `A` for LU.
pub fn solve_with<A: LinearOperator>(
    kind: SolverKind,
    op: &A,
    dense: impl FnOnce() -> DenseMatrix,
    b: &[f64],
    s: &TransformMatrix,
    cfg: &BenchConfig,
) -> Result<SolveOutcome> {
    let mut sc = SolverConfig::default()
        .with_tol(cfg.tol)
        .with_max_iter(cfg.max_iter)
        .with_restart(cfg.restart);
    if kind.is_preconditioned() {
        sc = sc.with_preconditioner(s);
    }
    Ok(match kind {
        SolverKind::Lu => {
            let a = dense();
            let start = Instant::now();
            let solution = DoolittleLu::factor(&a)?.solve(b)?;
            SolveOutcome {
                solution,
                seconds: start.elapsed().as_secs_f64(),
                report: None,
            }
        }
        SolverKind::Bicgstab | SolverKind::PreBicgstab => {
            let rep = bicgstab(op, b, &sc)?;
            SolveOutcome {
                solution: rep.solution.clone(),
                seconds: rep.wall_time.as_secs_f64(),
                report: Some(rep),
            }
        }
        SolverKind::Gmres | SolverKind::PreGmres => {
            let rep = gmres(op, b, &sc)?;
            SolveOutcome {
                solution: rep.solution.clone(),
                seconds: rep.wall_time.as_secs_f64(),
                report: Some(rep),
            }
        }
    })
}

fn bench_row(n: u32, size: usize, kind: SolverKind, restart: usize, out: &SolveOutcome, l2: f64) -> BenchRow {
    BenchRow {
        n,
        size,
        solver: kind.name(restart),
        iterations: out.label(),
        cpu_seconds: out.seconds,
        l2_error: l2,
        converged: out.converged(),
    }
}

pub fn run_benchmark_1d(problem: &Problem1D, cfg: &BenchConfig) -> Result<ReportDocument> {
    check_range(cfg.nmin, cfg.nmax)?;
    let mut rows = Vec::new();
    for n in cfg.nmin..=cfg.nmax {
        let form = problem.form(cfg.r, n)?;
        let spec = form.basis()?;
        let op = assemble_a(&form)?;
        let b = load_vector_1d(&problem.forcing, &spec, n)?;
        let s = multilevel_1d(&spec, n)?;
        for &kind in &cfg.solvers {
            let out = solve_with(kind, &op, || op.to_dense(), &b, &s, cfg)?;
            let l2 = l2_error_1d(&out.solution, &problem.exact, &spec, n)?;
            rows.push(bench_row(n, form.dim(), kind, cfg.restart, &out, l2));
        }
    }
    Ok(ReportDocument::Bench {
        title: format!("{}: beta = {}, r = {}, tol = {:e}", problem.name, problem.beta, cfg.r, cfg.tol),
        rows,
    })
}

pub fn run_benchmark_2d(problem: &Problem2D, cfg: &BenchConfig) -> Result<ReportDocument> {
    check_range(cfg.nmin, cfg.nmax)?;
    let mut rows = Vec::new();
    for n in cfg.nmin..=cfg.nmax {
        let form = problem.form(cfg.r, n)?;
        let spec = form.basis()?;
        let op = assemble_c2d(&form)?;
        let b = load_vector_2d(&problem.forcing, &spec, n)?;
        let s = multilevel_2d(&spec, n)?;
        for &kind in &cfg.solvers {
            let out = solve_with(kind, &op, || op.to_dense(), &b, &s, cfg)?;
            let l2 = l2_error_2d(&out.solution, &problem.exact, &spec, n)?;
            rows.push(bench_row(n, form.dim(), kind, cfg.restart, &out, l2));
        }
    }
    Ok(ReportDocument::Bench {
        title: format!(
            "{}: s = {}, alpha = beta = {}, r = {}, tol = {:e}",
            problem.name, problem.s, problem.alpha, cfg.r, cfg.tol
        ),
        rows,
    })
}

/// Convergence table in the layout of the 1D solver tables: Bi-CGSTAB, LU
/// and preconditioned Bi-CGSTAB at every level.
pub fn run_convergence_table_1d(problem: &Problem1D, r: usize, nmin: u32, nmax: u32) -> Result<ReportDocument> {
    let cfg = BenchConfig::new(
        r,
        nmin,
        nmax,
        vec![SolverKind::Bicgstab, SolverKind::Lu, SolverKind::PreBicgstab],
    );
    run_benchmark_1d(problem, &cfg)
}

/// Convergence table for the 2D problem: plain and preconditioned Bi-CGSTAB.
pub fn run_convergence_table_2d(problem: &Problem2D, r: usize, nmin: u32, nmax: u32) -> Result<ReportDocument> {
    let cfg = BenchConfig::new(r, nmin, nmax, vec![SolverKind::Bicgstab, SolverKind::PreBicgstab]);
    run_benchmark_2d(problem, &cfg)
}
