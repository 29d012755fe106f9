//! Left Riemann-Liouville fractional integrals of piecewise polynomials.
//!
//! A compactly supported piecewise polynomial is a finite sum of truncated
//! powers `(x - k)_+^m`, and the left integral from `0` maps each of them to
//! `m! / Gamma(m + 1 + beta) (x - k)_+^(m + beta)`. The resulting profile is
//! therefore exact and can be integrated against any other piecewise
//! polynomial cell by cell.

use crate::error::{domain, Result};
use crate::spline::piecewise::{recentre, PiecewisePolynomial};
use crate::special::{gamma, truncated_power};

/// `_0D_x^{-beta}` applied to `(xi - shift)_+^k`, evaluated at `x`.
pub fn frac_integral_monomial(beta: f64, k: u32, shift: f64, x: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(domain("beta", beta, "beta > 0 (beta = 0 is the classical path)"));
    }
    Ok(monomial_kernel(beta, k) * truncated_power(x - shift, k as f64 + beta))
}

fn monomial_kernel(beta: f64, k: u32) -> f64 {
    gamma(k as f64 + 1.0) / gamma(k as f64 + 1.0 + beta)
}

/// One term `coef * (x - knot)_+^exponent` of a fractional profile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfileTerm {
    pub coef: f64,
    pub knot: f64,
    pub exponent: f64,
}

/// Closed-form `_0D_x^{-beta} f` for a piecewise polynomial `f` supported in
/// `[0, inf)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalProfile {
    terms: Vec<ProfileTerm>,
}

impl FractionalProfile {
    pub fn terms(&self) -> &[ProfileTerm] {
        &self.terms
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef * truncated_power(x - t.knot, t.exponent))
            .sum()
    }

    /// Exact `∫ g(x) f(x) dx` for the profile `g` and a piecewise polynomial `f`.
    ///
    /// On each cell the local polynomial is re-expanded about the term's knot
    /// and integrated against `(x - knot)^exponent` in closed form.
    pub fn integrate_against(&self, f: &PiecewisePolynomial) -> f64 {
        let breaks = f.breakpoints();
        let mut acc = 0.0;
        for (cell, local) in breaks.windows(2).zip(f.pieces()) {
            let (a, b) = (cell[0], cell[1]);
            for t in &self.terms {
                if b <= t.knot {
                    continue;
                }
                let lo = a.max(t.knot);
                let about_knot = recentre(local, t.knot - a);
                let (wb, wl) = (b - t.knot, lo - t.knot);
                for (l, d) in about_knot.iter().enumerate() {
                    if *d == 0.0 {
                        continue;
                    }
                    let e = t.exponent + l as f64 + 1.0;
                    acc += t.coef * d * (wb.powf(e) - if wl > 0.0 { wl.powf(e) } else { 0.0 }) / e;
                }
            }
        }
        acc
    }

    /// `sum_k w_k g(x_k)`: the pairing of the profile with a Dirac comb.
    pub fn pair_with_diracs(&self, diracs: &[(f64, f64)]) -> f64 {
        diracs.iter().map(|(x, w)| w * self.eval(*x)).sum()
    }
}

/// `_0D_x^{-beta} f` in closed form. `beta = 0` returns `f` itself in
/// truncated-power form.
pub fn frac_integral_piecewise(beta: f64, f: &PiecewisePolynomial) -> Result<FractionalProfile> {
    if !(beta >= 0.0) {
        return Err(domain("beta", beta, "beta >= 0"));
    }
    if f.support().0 < 0.0 {
        return Err(domain("support start", f.support().0, "support inside [0, inf)"));
    }
    let terms = f
        .to_truncated_powers()
        .into_iter()
        .map(|t| ProfileTerm {
            coef: t.coef * monomial_kernel(beta, t.power as u32),
            knot: t.knot,
            exponent: t.power as f64 + beta,
        })
        .collect();
    Ok(FractionalProfile { terms })
}
