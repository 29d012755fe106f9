use std::time::Instant;

use super::{SolverConfig, SolverReport};
use crate::error::Result;
use crate::linalg::{check_len, dot, norm2, LinearOperator};

/// Residual reduction below which a full restart cycle counts as stagnation.
const STAGNATION: f64 = 1e-12;

fn givens(a: f64, b: f64) -> (f64, f64) {
    if b == 0.0 {
        (1.0, 0.0)
    } else {
        let h = a.hypot(b);
        (a / h, b / h)
    }
}

struct Cycle {
    steps: usize,
    converged: bool,
}

/// One Arnoldi cycle of at most `m` steps from `x`; updates `x` in place.
fn cycle(
    apply: &dyn Fn(&[f64]) -> Vec<f64>,
    rhs: &[f64],
    x: &mut [f64],
    m: usize,
    tol: f64,
    history: &mut Vec<f64>,
) -> Cycle {
    let n = rhs.len();
    let ax = apply(x);
    let r: Vec<f64> = rhs.iter().zip(&ax).map(|(b, a)| b - a).collect();
    let beta = norm2(&r);
    if beta <= tol {
        return Cycle {
            steps: 0,
            converged: true,
        };
    }
    let mut basis: Vec<Vec<f64>> = vec![r.iter().map(|v| v / beta).collect()];
    // column-major Hessenberg, each column of length j + 2
    let mut h: Vec<Vec<f64>> = Vec::with_capacity(m);
    let (mut cs, mut sn): (Vec<f64>, Vec<f64>) = (Vec::with_capacity(m), Vec::with_capacity(m));
    let mut g = vec![beta];
    let mut converged = false;
    let mut steps = 0;
    for j in 0..m {
        let mut w = apply(&basis[j]);
        let mut col = vec![0.0; j + 2];
        for (i, v) in basis.iter().enumerate() {
            let hij = dot(&w, v);
            col[i] = hij;
            for (wk, vk) in w.iter_mut().zip(v) {
                *wk -= hij * vk;
            }
        }
        let next = norm2(&w);
        col[j + 1] = next;
        for i in 0..j {
            let (c, s) = (cs[i], sn[i]);
            let (a, b) = (col[i], col[i + 1]);
            col[i] = c * a + s * b;
            col[i + 1] = -s * a + c * b;
        }
        let (c, s) = givens(col[j], col[j + 1]);
        col[j] = c * col[j] + s * col[j + 1];
        col[j + 1] = 0.0;
        cs.push(c);
        sn.push(s);
        g.push(-s * g[j]);
        g[j] *= c;
        h.push(col);
        steps += 1;
        let res = g[j + 1].abs();
        history.push(res);
        if res <= tol || next == 0.0 {
            converged = res <= tol;
            break;
        }
        basis.push(w.iter().map(|v| v / next).collect());
    }
    // back substitution for the least-squares coefficients
    let k = steps;
    let mut y = vec![0.0; k];
    for i in (0..k).rev() {
        let mut s = g[i];
        for (l, yl) in y.iter().enumerate().skip(i + 1) {
            s -= h[l][i] * yl;
        }
        y[i] = s / h[i][i];
    }
    for (yi, v) in y.iter().zip(&basis) {
        for (xk, vk) in x.iter_mut().zip(v) {
            *xk += yi * vk;
        }
    }
    debug_assert_eq!(x.len(), n);
    Cycle { steps, converged }
}

/// GMRES with modified Gram-Schmidt Arnoldi and Givens rotations, restarted
/// every `config.restart` steps (`0` = never). With a wavelet preconditioner
/// `S` it iterates on `S A S^T z = S b` and returns `y = S^T z`.
pub fn gmres<A: LinearOperator>(a: &A, b: &[f64], config: &SolverConfig) -> Result<SolverReport> {
    let n = a.dim();
    check_len(n, b.len())?;
    config.validate(n)?;
    let start = Instant::now();
    let rhs = match config.preconditioner {
        Some(s) => s.apply(b),
        None => b.to_vec(),
    };
    let apply = |v: &[f64]| match config.preconditioner {
        Some(s) => s.apply(&a.apply(&s.apply_transpose(v))),
        None => a.apply(v),
    };
    let m = if config.restart == 0 {
        config.max_iter.max(1)
    } else {
        config.restart
    };
    let mut x = vec![0.0; n];
    let mut history = vec![norm2(&rhs)];
    let mut total = 0usize;
    let mut cycles = 0usize;
    let mut last_steps = 0usize;
    let mut converged = history[0] <= config.tol;
    while !converged && total < config.max_iter {
        let before = *history.last().unwrap();
        let budget = m.min(config.max_iter - total);
        let c = cycle(&apply, &rhs, &mut x, budget, config.tol, &mut history);
        total += c.steps;
        converged = c.converged;
        if converged || c.steps < budget {
            last_steps = c.steps;
            break;
        }
        cycles += 1;
        let after = *history.last().unwrap();
        if before - after <= STAGNATION * before {
            break;
        }
    }
    let solution = match config.preconditioner {
        Some(s) => s.apply_transpose(&x),
        None => x,
    };
    let label = if config.restart == 0 {
        format!("{total}")
    } else {
        format!("{cycles}×{}+{last_steps}", config.restart)
    };
    Ok(SolverReport {
        iterations: total as f64,
        label,
        residual_history: history,
        converged,
        wall_time: start.elapsed(),
        solution,
    })
}
