use std::time::Instant;

use super::{SolverConfig, SolverReport};
use crate::error::{Error, Result};
use crate::linalg::{check_len, dot, norm2, LinearOperator};

/// Bi-CGSTAB for `A y = b`. With a wavelet preconditioner `S` the search
/// directions are replaced by `S^T S p` and `S^T S s`, which is the plain
/// method applied to `S A S^T z = S b` written in the original unknowns.
pub fn bicgstab<A: LinearOperator>(a: &A, b: &[f64], config: &SolverConfig) -> Result<SolverReport> {
    let n = a.dim();
    check_len(n, b.len())?;
    config.validate(n)?;
    let start = Instant::now();
    let precondition = |v: &[f64]| match config.preconditioner {
        Some(s) => s.apply_transpose(&s.apply(v)),
        None => v.to_vec(),
    };
    let finish = |y: Vec<f64>, iterations: f64, history: Vec<f64>, converged: bool| SolverReport {
        iterations,
        label: format!("{iterations:.1}"),
        residual_history: history,
        converged,
        wall_time: start.elapsed(),
        solution: y,
    };

    let mut y = vec![0.0; n];
    let mut r = b.to_vec();
    let r_hat = r.clone();
    let mut history = vec![norm2(&r)];
    if history[0] <= config.tol {
        return Ok(finish(y, 0.0, history, true));
    }
    let r_hat_norm = norm2(&r_hat);
    let mut p = vec![0.0; n];
    let mut v = vec![0.0; n];
    let (mut rho_prev, mut alpha, mut omega) = (1.0, 1.0, 1.0);

    for k in 1..=config.max_iter {
        let rho = dot(&r_hat, &r);
        if rho.abs() <= f64::EPSILON * f64::EPSILON * r_hat_norm * norm2(&r) {
            return Err(Error::Breakdown {
                iteration: k,
                quantity: "rho",
            });
        }
        if k == 1 {
            p.copy_from_slice(&r);
        } else {
            let beta = (rho / rho_prev) * (alpha / omega);
            for i in 0..n {
                p[i] = r[i] + beta * (p[i] - omega * v[i]);
            }
        }
        let p_hat = precondition(&p);
        v = a.apply(&p_hat);
        let denom = dot(&r_hat, &v);
        if denom.abs() <= f64::EPSILON * f64::EPSILON * r_hat_norm * norm2(&v) {
            return Err(Error::Breakdown {
                iteration: k,
                quantity: "r_hat^T v",
            });
        }
        alpha = rho / denom;
        let s: Vec<f64> = r.iter().zip(&v).map(|(ri, vi)| ri - alpha * vi).collect();
        let s_norm = norm2(&s);
        history.push(s_norm);
        if s_norm <= config.tol {
            for (yi, pi) in y.iter_mut().zip(&p_hat) {
                *yi += alpha * pi;
            }
            return Ok(finish(y, k as f64 - 0.5, history, true));
        }
        let s_hat = precondition(&s);
        let t = a.apply(&s_hat);
        let tt = dot(&t, &t);
        omega = if tt > 0.0 { dot(&t, &s) / tt } else { 0.0 };
        if omega == 0.0 {
            return Err(Error::Breakdown {
                iteration: k,
                quantity: "omega",
            });
        }
        for i in 0..n {
            y[i] += alpha * p_hat[i] + omega * s_hat[i];
            r[i] = s[i] - omega * t[i];
        }
        rho_prev = rho;
        let r_norm = norm2(&r);
        history.push(r_norm);
        if r_norm <= config.tol {
            return Ok(finish(y, k as f64, history, true));
        }
    }
    Ok(finish(y, config.max_iter as f64, history, false))
}
