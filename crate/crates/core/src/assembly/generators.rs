//! Toeplitz generators of the Galerkin matrices over the level-`n` spline basis.
//!
//! Every basis function is a dilated translate of `M_r`, so an entry depends
//! only on the index difference `d = i - j` (test minus trial). In reference
//! coordinates, with `a` derivatives on the trial and `b` on the test factor,
//!
//! `∫ (I^alpha M_r^(a))(ξ) M_r^(b)(ξ - d) dξ = (-1)^b Δ^{2r} F(d + r)`,
//! `F(x) = x_+^g / Gamma(g + 1)`, `g = 2r - 1 - a - b + alpha`,
//!
//! with `Δ` the unit backward difference. This follows from writing `M_r` as
//! `Δ^r` of a truncated power and moving derivatives and averages onto `F`.
//! [`stiffness_entry_exact`] evaluates the same entries through explicit
//! fractional profiles and serves as an independent second route.

use crate::assembly::fractional::frac_integral_piecewise;
use crate::error::{domain, Error, Result};
use crate::linalg::kron::{Factor, KroneckerSumOperator};
use crate::linalg::toeplitz::ToeplitzOperator;
use crate::special::{gamma, power_difference};
use crate::spline::wavelet::{scaled_basis_function, WaveletBasisSpec};

/// `a (p _0D_x^{-beta} + q _xD_1^{-beta})` between first derivatives, on the
/// level-`n` basis of order `r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FractionalForm1D {
    pub a: f64,
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub r: usize,
    pub n: u32,
}

fn check_weights(name: &'static str, p: f64, q: f64) -> Result<()> {
    if !(p >= 0.0 && q >= 0.0 && ((p + q) - 1.0).abs() < 1e-12) {
        return Err(domain(name, p, "p, q >= 0 with p + q = 1"));
    }
    Ok(())
}

fn check_order_level(r: usize, n: u32) -> Result<()> {
    if !(r == 2 || r == 3) {
        return Err(Error::UnsupportedOrder(r));
    }
    if n < 2 {
        return Err(Error::Level { level: n, min: 2 });
    }
    Ok(())
}

impl FractionalForm1D {
    pub fn new(a: f64, p: f64, q: f64, beta: f64, r: usize, n: u32) -> Result<Self> {
        if !(a > 0.0) {
            return Err(domain("a", a, "a > 0"));
        }
        check_weights("p", p, q)?;
        if !(0.0..1.0).contains(&beta) {
            return Err(domain("beta", beta, "0 <= beta < 1"));
        }
        check_order_level(r, n)?;
        Ok(Self { a, p, q, beta, r, n })
    }

    pub fn dim(&self) -> usize {
        (1usize << self.n) + 1 - self.r
    }

    pub fn basis(&self) -> Result<WaveletBasisSpec> {
        WaveletBasisSpec::for_1d(self.r, self.beta)
    }
}

/// The two-dimensional form with order flag `s` in `{2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FractionalForm2D {
    pub s: u32,
    pub a1: f64,
    pub a2: f64,
    pub p1: f64,
    pub q1: f64,
    pub p2: f64,
    pub q2: f64,
    pub alpha: f64,
    pub beta: f64,
    pub r: usize,
    pub n: u32,
}

impl FractionalForm2D {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        s: u32,
        (a1, a2): (f64, f64),
        (p1, q1): (f64, f64),
        (p2, q2): (f64, f64),
        alpha: f64,
        beta: f64,
        r: usize,
        n: u32,
    ) -> Result<Self> {
        if !(s == 2 || s == 3) {
            return Err(domain("s", s as f64, "s in {2, 3}"));
        }
        if !(a1 > 0.0) {
            return Err(domain("a1", a1, "a1 > 0"));
        }
        if !(a2 > 0.0) {
            return Err(domain("a2", a2, "a2 > 0"));
        }
        check_weights("p1", p1, q1)?;
        check_weights("p2", p2, q2)?;
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(domain("alpha", alpha, "0 < alpha < 1"));
        }
        if !(beta > 0.0 && beta < 1.0) {
            return Err(domain("beta", beta, "0 < beta < 1"));
        }
        if r != 3 {
            return Err(domain("r", r as f64, "r = 3 for the higher-order operator"));
        }
        check_order_level(r, n)?;
        Ok(Self {
            s,
            a1,
            a2,
            p1,
            q1,
            p2,
            q2,
            alpha,
            beta,
            r,
            n,
        })
    }

    /// The configuration of every two-dimensional experiment:
    /// `a1 = a2 = 1`, `p1 = p2 = 1`, `alpha = beta`.
    pub fn left_sided(s: u32, alpha: f64, r: usize, n: u32) -> Result<Self> {
        Self::new(s, (1.0, 1.0), (1.0, 0.0), (1.0, 0.0), alpha, alpha, r, n)
    }

    pub fn dim_1d(&self) -> usize {
        (1usize << self.n) + 1 - self.r
    }

    pub fn dim(&self) -> usize {
        self.dim_1d() * self.dim_1d()
    }

    /// Wavelet basis with `mu = (s + 1 - alpha) / 2`.
    pub fn basis(&self) -> Result<WaveletBasisSpec> {
        WaveletBasisSpec::for_2d(self.r, self.s, self.alpha)
    }
}

/// `∫ (I^alpha M_r^(a))(ξ) M_r^(b)(ξ - d) dξ` in reference coordinates.
pub fn reference_entry(r: usize, trial_derivatives: usize, test_derivatives: usize, alpha: f64, d: i64) -> f64 {
    let order = 2 * r;
    debug_assert!(trial_derivatives + test_derivatives < order);
    let g = (order - 1 - trial_derivatives - test_derivatives) as f64 + alpha;
    let sign = if test_derivatives % 2 == 0 { 1.0 } else { -1.0 };
    sign * power_difference(order, g, d as f64 + r as f64) / gamma(g + 1.0)
}

fn level_scale(n: u32, exponent: f64) -> f64 {
    2f64.powf(n as f64 * exponent)
}

/// Generators of the left-sided stiffness matrix:
/// `a1[i] = <_0D^{-beta} phi'_i, phi'_0>` for `i < r` (the rest vanish) and
/// `q1[j] = <_0D^{-beta} phi'_0, phi'_j>` for `j` in `0..dim`.
pub fn stiffness_generators_1d(form: &FractionalForm1D) -> (Vec<f64>, Vec<f64>) {
    let scale = level_scale(form.n, 2.0 - form.beta);
    let a1 = (0..form.r as i64)
        .map(|i| scale * reference_entry(form.r, 1, 1, form.beta, -i))
        .collect();
    let q1 = (0..form.dim() as i64)
        .map(|j| scale * reference_entry(form.r, 1, 1, form.beta, j))
        .collect();
    (a1, q1)
}

fn padded(v: &[f64], len: usize) -> Vec<f64> {
    let mut out = v.to_vec();
    out.resize(len, 0.0);
    out
}

/// `A_n = a p T(q1, a1) + a q T(a1, q1)`; the right-sided part is the
/// transpose of the left-sided one.
pub fn assemble_a(form: &FractionalForm1D) -> Result<ToeplitzOperator> {
    let (a1, q1) = stiffness_generators_1d(form);
    let a1 = padded(&a1, form.dim());
    let col: Vec<f64> = q1
        .iter()
        .zip(&a1)
        .map(|(q, a)| form.a * (form.p * q + form.q * a))
        .collect();
    let row: Vec<f64> = q1
        .iter()
        .zip(&a1)
        .map(|(q, a)| form.a * (form.p * a + form.q * q))
        .collect();
    ToeplitzOperator::new(col, row)
}

/// Generators `(first column, first row)` of
/// `G[i][j] = <D^{s-1} _0D^{-alpha} D phi_j, D phi_i>`.
pub fn highorder_generators_1d(s: u32, alpha: f64, r: usize, n: u32) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(s == 2 || s == 3) {
        return Err(domain("s", s as f64, "s in {2, 3}"));
    }
    if r != 3 {
        return Err(domain("r", r as f64, "r = 3 for the higher-order operator"));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(domain("alpha", alpha, "0 <= alpha < 1"));
    }
    check_order_level(r, n)?;
    let dim = (1usize << n) + 1 - r;
    let scale = level_scale(n, 1.0 + s as f64 - alpha);
    // (-1)^(s-1) from moving s-1 derivatives onto the test function
    let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
    let entry = |d: i64| sign * scale * reference_entry(r, 1, s as usize, alpha, d);
    let col = (0..dim as i64).map(entry).collect();
    let row = (0..dim as i64).map(|d| entry(-d)).collect();
    Ok((col, row))
}

/// Generators of the mass matrix `<phi_j, phi_i>`, identical for every level.
pub fn mass_generators_1d(r: usize, n: u32) -> Result<(Vec<f64>, Vec<f64>)> {
    check_order_level(r, n)?;
    let dim = (1usize << n) + 1 - r;
    let col: Vec<f64> = (0..dim as i64).map(|d| reference_entry(r, 0, 0, 0.0, d)).collect();
    Ok((col.clone(), col))
}

fn directional(col: &[f64], row: &[f64], a: f64, p: f64, q: f64) -> Result<ToeplitzOperator> {
    let c = col.iter().zip(row).map(|(c, r)| a * (p * c + q * r)).collect();
    let w = col.iter().zip(row).map(|(c, r)| a * (p * r + q * c)).collect();
    ToeplitzOperator::new(c, w)
}

/// `C = a1 (p1 G_alpha + q1 G_alpha^T) ⊗ M + M ⊗ a2 (p2 G_beta + q2 G_beta^T)`
/// with the x index varying slowest in the flattened ordering.
pub fn assemble_c2d(form: &FractionalForm2D) -> Result<KroneckerSumOperator> {
    let (gc, gr) = highorder_generators_1d(form.s, form.alpha, form.r, form.n)?;
    let (hc, hr) = highorder_generators_1d(form.s, form.beta, form.r, form.n)?;
    let (mc, mr) = mass_generators_1d(form.r, form.n)?;
    let x_part = directional(&gc, &gr, form.a1, form.p1, form.q1)?;
    let y_part = directional(&hc, &hr, form.a2, form.p2, form.q2)?;
    let mass = ToeplitzOperator::new(mc, mr)?;
    KroneckerSumOperator::new(vec![
        (Factor::Toeplitz(x_part), Factor::Toeplitz(mass.clone())),
        (Factor::Toeplitz(mass), Factor::Toeplitz(y_part)),
    ])
}

/// `<D^{s-1} _0D^{-alpha} D phi_{n,j}, D phi_{n,i}>` via the explicit
/// fractional profile of `phi'_{n,j}` and cell-by-cell integration against
/// `phi_{n,i}^(s)`; Dirac masses of the distributional derivative are paired
/// with the (continuous) profile. `s = 1` gives the one-dimensional form.
pub fn stiffness_entry_exact(r: usize, s: u32, alpha: f64, n: u32, i: usize, j: usize) -> Result<f64> {
    let spec = WaveletBasisSpec::new(r, 0.5)?;
    let trial = scaled_basis_function(&spec, n, j)?.derivative();
    let test = scaled_basis_function(&spec, n, i)?;
    let profile = frac_integral_piecewise(alpha, &trial)?;
    let s = s as usize;
    let classical = profile.integrate_against(&test.nth_derivative(s));
    let diracs = profile.pair_with_diracs(&test.nth_derivative(s - 1).jumps());
    let sign = if s % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * (classical + diracs))
}

/// Exact mass entry `<phi_{n,j}, phi_{n,i}>` by polynomial integration.
pub fn mass_entry_exact(r: usize, n: u32, i: usize, j: usize) -> Result<f64> {
    let spec = WaveletBasisSpec::new(r, 0.5)?;
    Ok(scaled_basis_function(&spec, n, i)?.inner(&scaled_basis_function(&spec, n, j)?))
}
