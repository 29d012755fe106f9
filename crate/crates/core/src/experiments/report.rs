//! Table rows, CSV serialization and aligned-text rendering.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One row of a condition-number table: `kappa` of the single-scale matrix
/// (`A_n` or `C_n^s`) and of its wavelet-preconditioned form (`B_n` or `D_n^s`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub n: u32,
    pub size: usize,
    pub kappa: f64,
    pub kappa_preconditioned: f64,
}

/// One solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: u32,
    pub size: usize,
    pub solver: String,
    /// Printed iteration count, e.g. `27.0` or `6×50+47`; `-` for the direct solver.
    pub iterations: String,
    pub cpu_seconds: f64,
    pub l2_error: f64,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ReportDocument {
    Condition { title: String, rows: Vec<ConditionRow> },
    Bench { title: String, rows: Vec<BenchRow> },
}

fn to_csv<R: Serialize>(rows: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Report(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
}

fn from_csv<R: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Report(e.to_string())))
        .collect()
}

fn sci(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else if v != 0.0 && (v.abs() >= 1e4 || v.abs() < 1e-2) {
        format!("{v:.4e}")
    } else {
        format!("{v:.4}")
    }
}

fn render(header: &[&str], body: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
    out.push('\n');
    for row in body {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// `log2(e_{k-1} / e_k)` between consecutive rows of the same solver.
fn observed_orders(rows: &[BenchRow]) -> Vec<Option<f64>> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            rows[..i]
                .iter()
                .rev()
                .find(|p| p.solver == row.solver && p.n + 1 == row.n)
                .filter(|p| p.l2_error > 0.0 && row.l2_error > 0.0)
                .map(|p| (p.l2_error / row.l2_error).log2())
        })
        .collect()
}

impl ReportDocument {
    pub fn title(&self) -> &str {
        match self {
            ReportDocument::Condition { title, .. } | ReportDocument::Bench { title, .. } => title,
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        match self {
            ReportDocument::Condition { rows, .. } => to_csv(rows),
            ReportDocument::Bench { rows, .. } => to_csv(rows),
        }
    }

    pub fn condition_from_csv(title: &str, text: &str) -> Result<Self> {
        Ok(ReportDocument::Condition {
            title: title.into(),
            rows: from_csv(text)?,
        })
    }

    pub fn bench_from_csv(title: &str, text: &str) -> Result<Self> {
        Ok(ReportDocument::Bench {
            title: title.into(),
            rows: from_csv(text)?,
        })
    }

    pub fn to_text(&self) -> String {
        let (title, table) = match self {
            ReportDocument::Condition { title, rows } => {
                let mut prev: Option<&ConditionRow> = None;
                let body = rows
                    .iter()
                    .map(|r| {
                        let ratio = |a: f64, b: f64| format!("{:.4}", (a / b).log2());
                        let (g, gp) = match prev {
                            Some(p) => (ratio(r.kappa, p.kappa), ratio(r.kappa_preconditioned, p.kappa_preconditioned)),
                            None => (String::new(), String::new()),
                        };
                        prev = Some(r);
                        vec![
                            r.n.to_string(),
                            format!("{0}x{0}", r.size),
                            sci(r.kappa),
                            g,
                            sci(r.kappa_preconditioned),
                            gp,
                        ]
                    })
                    .collect();
                (title, render(&["n", "size", "kappa", "log2 ratio", "kappa (precond.)", "log2 ratio"], body))
            }
            ReportDocument::Bench { title, rows } => {
                let orders = observed_orders(rows);
                let body = rows
                    .iter()
                    .zip(orders)
                    .map(|(r, o)| {
                        vec![
                            r.n.to_string(),
                            r.size.to_string(),
                            r.solver.clone(),
                            r.iterations.clone(),
                            format!("{:.4}", r.cpu_seconds),
                            format!("{:.4e}", r.l2_error),
                            o.map_or(String::new(), |o| format!("{o:.3}")),
                            if r.converged { "yes" } else { "no" }.into(),
                        ]
                    })
                    .collect();
                (
                    title,
                    render(
                        &["n", "size", "solver", "iter", "cpu(s)", "L2 error", "order", "converged"],
                        body,
                    ),
                )
            }
        };
        format!("{title}\n{table}")
    }
}
