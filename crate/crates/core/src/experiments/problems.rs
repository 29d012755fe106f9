//! Manufactured test problems with closed-form forcing terms.

use crate::assembly::{FractionalForm1D, FractionalForm2D, PowerTerm, SeparableTerm};
use crate::error::{domain, Result};
use crate::special::gamma;

/// `-D (a p _0D^{-beta} + a q _xD_1^{-beta}) D u = f` on `(0, 1)`, `u(0) = u(1) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem1D {
    pub name: String,
    pub a: f64,
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub forcing: Vec<PowerTerm>,
    pub exact: Vec<PowerTerm>,
    pub lambda: Option<f64>,
}

impl Problem1D {
    pub fn form(&self, r: usize, n: u32) -> Result<FractionalForm1D> {
        FractionalForm1D::new(self.a, self.p, self.q, self.beta, r, n)
    }
}

/// `-D_x^s _0D_x^{-alpha} D_x u - D_y^s _0D_y^{-alpha} D_y u = f` on the unit square.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem2D {
    pub name: String,
    pub s: u32,
    pub alpha: f64,
    pub forcing: Vec<SeparableTerm>,
    pub exact: Vec<SeparableTerm>,
}

impl Problem2D {
    pub fn form(&self, r: usize, n: u32) -> Result<FractionalForm2D> {
        FractionalForm2D::left_sided(self.s, self.alpha, r, n)
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(domain("beta", beta, "0 < beta < 1"));
    }
    Ok(())
}

/// Exact solution `x^2 - x^3` with `p = 1`, `q = 0`, `a = 1`.
pub fn make_f1(beta: f64) -> Result<Problem1D> {
    check_beta(beta)?;
    Ok(Problem1D {
        name: "f1".into(),
        a: 1.0,
        p: 1.0,
        q: 0.0,
        beta,
        forcing: vec![
            PowerTerm::new(-2.0 / gamma(beta + 1.0), beta),
            PowerTerm::new(6.0 / gamma(beta + 2.0), beta + 1.0),
        ],
        exact: vec![PowerTerm::new(1.0, 2.0), PowerTerm::new(-1.0, 3.0)],
        lambda: None,
    })
}

/// Exact solution `x^lambda - x` with `p = 1`, `q = 0`, `a = 1`.
pub fn make_f2(beta: f64, lambda: f64) -> Result<Problem1D> {
    check_beta(beta)?;
    if !(lambda > 1.0) {
        return Err(domain("lambda", lambda, "lambda > 1"));
    }
    Ok(Problem1D {
        name: "f2".into(),
        a: 1.0,
        p: 1.0,
        q: 0.0,
        beta,
        forcing: vec![
            PowerTerm::new(-gamma(lambda + 1.0) / gamma(lambda + beta - 1.0), lambda + beta - 2.0),
            PowerTerm::new(1.0 / gamma(beta), beta - 1.0),
        ],
        exact: vec![PowerTerm::new(1.0, lambda), PowerTerm::new(-1.0, 1.0)],
        lambda: Some(lambda),
    })
}

/// `x^2 (1 - x)^2` as power terms.
fn quartic_bump() -> Vec<PowerTerm> {
    vec![PowerTerm::new(1.0, 2.0), PowerTerm::new(-2.0, 3.0), PowerTerm::new(1.0, 4.0)]
}

/// `-D^s _0D^{-alpha} D [x^2 (1 - x)^2]` term by term.
fn directional_forcing(s: u32, alpha: f64) -> Vec<PowerTerm> {
    let s = s as f64;
    // D u = 2x - 6x^2 + 4x^3; each c x^k maps to c k! / Gamma(k + 1 + alpha - s) x^{k + alpha - s}
    [(2.0, 1.0), (-6.0, 2.0), (4.0, 3.0)]
        .iter()
        .map(|&(c, k)| {
            let e = k + alpha - s;
            PowerTerm::new(-c * gamma(k + 1.0) / gamma(e + 1.0), e)
        })
        .collect()
}

/// Exact solution `x^2 (1-x)^2 y^2 (1-y)^2` with `alpha = beta`, `p1 = p2 = 1`,
/// `a1 = a2 = 1`.
pub fn make_fs_with_alpha(s: u32, alpha: f64) -> Result<Problem2D> {
    if !(s == 2 || s == 3) {
        return Err(domain("s", s as f64, "s in {2, 3}"));
    }
    check_beta(alpha)?;
    let d = directional_forcing(s, alpha);
    Ok(Problem2D {
        name: format!("fs{s}"),
        s,
        alpha,
        forcing: vec![
            SeparableTerm {
                x: d.clone(),
                y: quartic_bump(),
            },
            SeparableTerm {
                x: quartic_bump(),
                y: d,
            },
        ],
        exact: vec![SeparableTerm {
            x: quartic_bump(),
            y: quartic_bump(),
        }],
    })
}

/// The two-dimensional problem with `alpha = beta = 3/4`.
pub fn make_fs(s: u32) -> Result<Problem2D> {
    make_fs_with_alpha(s, 0.75)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::eval_terms;

    #[test]
    fn f1_coefficients() {
        let p = make_f1(0.5).unwrap();
        let sp = std::f64::consts::PI.sqrt();
        assert!((p.forcing[0].coef + 2.0 / (sp / 2.0)).abs() < 1e-14);
        assert!((p.forcing[1].coef - 6.0 / (3.0 * sp / 4.0)).abs() < 1e-14);
        assert!((eval_terms(&p.forcing, 1.0) - 2.256758).abs() < 1e-6);
        assert_eq!(eval_terms(&p.exact, 0.0), 0.0);
        assert_eq!(eval_terms(&p.exact, 1.0), 0.0);
    }

    #[test]
    fn f2_value_at_one() {
        let p = make_f2(0.75, 1.1).unwrap();
        let expected = -gamma(2.1) / gamma(0.85) + 1.0 / gamma(0.75);
        assert!((eval_terms(&p.forcing, 1.0) - expected).abs() < 1e-14);
        assert!(make_f2(0.75, 1.0).is_err());
        assert!(make_f1(1.0).is_err());
    }

    #[test]
    fn fs_matches_printed_coefficients() {
        for s in [2u32, 3] {
            let p = make_fs(s).unwrap();
            let d = &p.forcing[0].x;
            let sf = s as f64;
            let printed = [
                (-2.0 / gamma(2.75 - sf), 1.75 - sf),
                (12.0 / gamma(3.75 - sf), 2.75 - sf),
                (-24.0 / gamma(4.75 - sf), 3.75 - sf),
            ];
            for (t, (c, e)) in d.iter().zip(printed) {
                assert!((t.coef - c).abs() < 1e-13 * c.abs());
                assert!((t.exponent - e).abs() < 1e-15);
            }
        }
        assert!(make_fs(4).is_err());
    }
}
