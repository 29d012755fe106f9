//! Load vectors `<f, phi_{n,j}>` for forcing terms built from (truncated)
//! powers.
//!
//! For `f(x) = (x - sigma)_+^g` the substitution `t = 2^n x - j` gives
//!
//! `<f, phi_{n,j}> = 2^{-n/2 - n g} Δ^r[(·)_+^{g + r}](j + r - 2^n sigma) / ((g + 1) ... (g + r))`,
//!
//! the `r`-fold integral of the power against the B-spline in closed form.
//! Right-sided terms `(sigma - x)_+^g` are mapped onto left-sided ones by the
//! reflection `x -> 1 - x`, under which `phi_{n,j}` becomes `phi_{n,N-1-j}`.

use crate::error::{Error, Result};
use crate::special::{power_difference, truncated_power};
use crate::spline::wavelet::WaveletBasisSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(x - shift)_+^exponent`
    Left,
    /// `(shift - x)_+^exponent`
    Right,
}

/// `coef * (x - shift)_+^exponent` or its right-sided mirror.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerTerm {
    pub coef: f64,
    pub exponent: f64,
    pub shift: f64,
    pub side: Side,
}

impl PowerTerm {
    /// `coef * x^exponent` on `x > 0`.
    pub fn new(coef: f64, exponent: f64) -> Self {
        Self {
            coef,
            exponent,
            shift: 0.0,
            side: Side::Left,
        }
    }

    pub fn left(coef: f64, exponent: f64, shift: f64) -> Self {
        Self {
            coef,
            exponent,
            shift,
            side: Side::Left,
        }
    }

    pub fn right(coef: f64, exponent: f64, shift: f64) -> Self {
        Self {
            coef,
            exponent,
            shift,
            side: Side::Right,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = match self.side {
            Side::Left => x - self.shift,
            Side::Right => self.shift - x,
        };
        self.coef * truncated_power(t, self.exponent)
    }
}

/// Evaluate a sum of power terms.
pub fn eval_terms(terms: &[PowerTerm], x: f64) -> f64 {
    terms.iter().map(|t| t.eval(x)).sum()
}

/// `(sum of x terms) * (sum of y terms)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableTerm {
    pub x: Vec<PowerTerm>,
    pub y: Vec<PowerTerm>,
}

impl SeparableTerm {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        eval_terms(&self.x, x) * eval_terms(&self.y, y)
    }
}

/// `<(x - sigma)_+^g, phi_{n,j}>` with the singular point placed by `offset = j - 2^n sigma`.
fn left_entry(r: usize, n: u32, g: f64, offset: f64, index: usize) -> Result<f64> {
    let is_pole = g <= -1.0 && g.fract() == 0.0 && g >= -(r as f64);
    let integrable = if offset > 0.0 {
        !is_pole
    } else if offset == 0.0 {
        // phi vanishes to order r - 1 at the start of its support
        g > -(r as f64) && !is_pole
    } else {
        g > -1.0
    };
    if !integrable {
        return Err(Error::NonIntegrable { exponent: g, index });
    }
    let denom: f64 = (1..=r).map(|k| g + k as f64).product();
    let h = (1u64 << n) as f64;
    let scale = h.powf(-0.5 - g);
    Ok(scale * power_difference(r, g + r as f64, offset + r as f64) / denom)
}

/// `(<f, phi_{n,j}>)_j` for `f` a finite sum of power terms.
///
/// Exponents `g <= -1` are accepted where the pairing is finite: when the
/// singular point lies at or left of the support start of every basis
/// function that sees it (`g > -r` when it coincides with the start).
pub fn load_vector_1d(terms: &[PowerTerm], spec: &WaveletBasisSpec, n: u32) -> Result<Vec<f64>> {
    spec.check_level(n)?;
    let r = spec.r();
    let dim = spec.dim(n);
    let h = (1u64 << n) as f64;
    let mut out = vec![0.0; dim];
    for term in terms {
        if term.coef == 0.0 {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            let (index, sigma) = match term.side {
                Side::Left => (j, term.shift),
                Side::Right => (dim - 1 - j, 1.0 - term.shift),
            };
            let offset = index as f64 - h * sigma;
            if offset <= -(r as f64) {
                // support ends before the singular point
                continue;
            }
            *slot += term.coef * left_entry(r, n, term.exponent, offset, j)?;
        }
    }
    Ok(out)
}

/// Load vector over the tensor basis `phi_{n,j1}(x) phi_{n,j2}(y)`, flattened
/// with `j1` slowest.
pub fn load_vector_2d(terms: &[SeparableTerm], spec: &WaveletBasisSpec, n: u32) -> Result<Vec<f64>> {
    let dim = spec.dim(n);
    let mut out = vec![0.0; dim * dim];
    for term in terms {
        let lx = load_vector_1d(&term.x, spec, n)?;
        let ly = load_vector_1d(&term.y, spec, n)?;
        for (i, a) in lx.iter().enumerate() {
            for (j, b) in ly.iter().enumerate() {
                out[i * dim + j] += a * b;
            }
        }
    }
    Ok(out)
}
