use crate::error::{Error, Result};

/// Compactly supported piecewise polynomial.
///
/// Piece `i` lives on `[breaks[i], breaks[i + 1]]` and stores monomial
/// coefficients in the local variable `x - breaks[i]`. The function is zero
/// outside `[breaks[0], breaks[last]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewisePolynomial {
    breaks: Vec<f64>,
    coeffs: Vec<Vec<f64>>,
}

/// A term `coef * (x - knot)_+^power` of a truncated-power expansion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncatedPower {
    pub coef: f64,
    pub knot: f64,
    pub power: usize,
}

/// Coefficients of `p(u + delta)` given those of `p(u)`.
pub(crate) fn recentre(coeffs: &[f64], delta: f64) -> Vec<f64> {
    let mut out = coeffs.to_vec();
    if delta == 0.0 {
        return out;
    }
    // repeated synthetic division (Taylor shift)
    let n = out.len();
    for i in 0..n {
        for k in (i..n.saturating_sub(1)).rev() {
            out[k] += delta * out[k + 1];
        }
    }
    out
}

pub(crate) fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c)
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_integral(coeffs: &[f64], width: f64) -> f64 {
    let mut acc = 0.0;
    let mut w = width;
    for (k, c) in coeffs.iter().enumerate() {
        acc += c * w / (k + 1) as f64;
        w *= width;
    }
    acc
}

impl PiecewisePolynomial {
    pub fn new(breaks: Vec<f64>, coeffs: Vec<Vec<f64>>) -> Result<Self> {
        if breaks.len() < 2 || coeffs.len() != breaks.len() - 1 {
            return Err(Error::DimensionMismatch {
                expected: breaks.len().saturating_sub(1),
                got: coeffs.len(),
            });
        }
        if breaks.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(crate::error::domain(
                "breakpoints",
                f64::NAN,
                "strictly increasing sequence",
            ));
        }
        Ok(Self { breaks, coeffs })
    }

    /// The zero function on `[a, b]`.
    pub fn zero_on(a: f64, b: f64) -> Self {
        Self {
            breaks: vec![a, b],
            coeffs: vec![vec![0.0]],
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Vec<f64>] {
        &self.coeffs
    }

    pub fn support(&self) -> (f64, f64) {
        (self.breaks[0], *self.breaks.last().unwrap())
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .map(|c| c.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    fn piece_index(&self, x: f64) -> Option<usize> {
        let (a, b) = self.support();
        if x < a || x > b {
            return None;
        }
        let i = self.breaks.partition_point(|&t| t <= x);
        Some(i.saturating_sub(1).min(self.coeffs.len() - 1))
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self.piece_index(x) {
            Some(i) => horner(&self.coeffs[i], x - self.breaks[i]),
            None => 0.0,
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.len() <= 1 {
                    vec![0.0]
                } else {
                    c.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(k, v)| k as f64 * v)
                        .collect()
                }
            })
            .collect();
        Self {
            breaks: self.breaks.clone(),
            coeffs,
        }
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    /// Jumps `f(t+) - f(t-)` at every breakpoint, support ends included.
    ///
    /// These are the Dirac weights of the distributional derivative beyond its
    /// classical (piecewise) part.
    pub fn jumps(&self) -> Vec<(f64, f64)> {
        let n = self.coeffs.len();
        (0..=n)
            .map(|i| {
                let right = if i < n { self.coeffs[i].first().copied().unwrap_or(0.0) } else { 0.0 };
                let left = if i > 0 {
                    let h = self.breaks[i] - self.breaks[i - 1];
                    horner(&self.coeffs[i - 1], h)
                } else {
                    0.0
                };
                (self.breaks[i], right - left)
            })
            .collect()
    }

    /// `amp * f(scale * x - shift)` for `scale > 0`.
    pub fn dilate(&self, scale: f64, shift: f64, amp: f64) -> Self {
        let breaks = self.breaks.iter().map(|t| (t + shift) / scale).collect();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let mut s = amp;
                c.iter()
                    .map(|v| {
                        let out = v * s;
                        s *= scale;
                        out
                    })
                    .collect()
            })
            .collect();
        Self { breaks, coeffs }
    }

    /// `f(centre - x)`.
    pub fn reflect(&self, centre: f64) -> Self {
        let n = self.coeffs.len();
        let mut breaks: Vec<f64> = self.breaks.iter().rev().map(|t| centre - t).collect();
        // guard against -0.0 noise
        breaks.iter_mut().for_each(|b| *b += 0.0);
        let coeffs = (0..n)
            .rev()
            .map(|i| {
                let h = self.breaks[i + 1] - self.breaks[i];
                // p(h - u) = q(-u) with q(v) = p(h + v)
                let mut q = recentre(&self.coeffs[i], h);
                q.iter_mut()
                    .enumerate()
                    .filter(|(k, _)| k % 2 == 1)
                    .for_each(|(_, v)| *v = -*v);
                q
            })
            .collect();
        Self { breaks, coeffs }
    }

    /// Local coefficients (in `x - a`) on an interval `[a, b]` lying inside a
    /// single piece or entirely outside the support.
    pub(crate) fn local_on(&self, a: f64, b: f64) -> Vec<f64> {
        let mid = 0.5 * (a + b);
        let (s0, s1) = self.support();
        if mid <= s0 || mid >= s1 {
            return vec![0.0];
        }
        let i = self.piece_index(mid).expect("inside support");
        recentre(&self.coeffs[i], a - self.breaks[i])
    }

    /// `sum_i w_i f_i` on the union of all breakpoints.
    pub fn linear_combination(terms: &[(f64, &PiecewisePolynomial)]) -> Self {
        let mut breaks: Vec<f64> = terms
            .iter()
            .flat_map(|(_, f)| f.breaks.iter().copied())
            .collect();
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        breaks.dedup();
        if breaks.len() < 2 {
            return Self::zero_on(0.0, 1.0);
        }
        let coeffs = breaks
            .windows(2)
            .map(|w| {
                let mut acc: Vec<f64> = Vec::new();
                for (weight, f) in terms {
                    let local = f.local_on(w[0], w[1]);
                    if acc.len() < local.len() {
                        acc.resize(local.len(), 0.0);
                    }
                    for (a, l) in acc.iter_mut().zip(&local) {
                        *a += weight * l;
                    }
                }
                if acc.is_empty() {
                    acc.push(0.0);
                }
                acc
            })
            .collect();
        Self { breaks, coeffs }
    }

    pub fn integral(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(self.breaks.windows(2))
            .map(|(c, w)| poly_integral(c, w[1] - w[0]))
            .sum()
    }

    /// Exact `∫ f g`.
    pub fn inner(&self, other: &PiecewisePolynomial) -> f64 {
        let (a0, a1) = self.support();
        let (b0, b1) = other.support();
        let (lo, hi) = (a0.max(b0), a1.min(b1));
        if lo >= hi {
            return 0.0;
        }
        let mut breaks: Vec<f64> = self
            .breaks
            .iter()
            .chain(&other.breaks)
            .copied()
            .filter(|t| *t >= lo && *t <= hi)
            .collect();
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        breaks.dedup();
        breaks
            .windows(2)
            .map(|w| {
                let p = poly_mul(&self.local_on(w[0], w[1]), &other.local_on(w[0], w[1]));
                poly_integral(&p, w[1] - w[0])
            })
            .sum()
    }

    /// Expansion `f(x) = sum coef (x - knot)_+^power`, exact for compactly
    /// supported `f`. Terms come from the Taylor jumps at each breakpoint.
    pub fn to_truncated_powers(&self) -> Vec<TruncatedPower> {
        let n = self.coeffs.len();
        let mut out = Vec::new();
        for i in 0..=n {
            let t = self.breaks[i];
            let right = if i < n { self.coeffs[i].clone() } else { Vec::new() };
            let left = if i > 0 {
                recentre(&self.coeffs[i - 1], self.breaks[i] - self.breaks[i - 1])
            } else {
                Vec::new()
            };
            let len = right.len().max(left.len());
            for k in 0..len {
                let jump = right.get(k).copied().unwrap_or(0.0) - left.get(k).copied().unwrap_or(0.0);
                if jump != 0.0 {
                    out.push(TruncatedPower {
                        coef: jump,
                        knot: t,
                        power: k,
                    });
                }
            }
        }
        out
    }
}
