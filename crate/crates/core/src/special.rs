//! Scalar special functions shared by assembly, load vectors and error norms.
//!
//! The central routine is [`power_difference`], the `m`-th backward difference
//! of a truncated power. Every Galerkin entry of a translation-invariant spline
//! basis (stiffness, mass, fractional stiffness, monomial moments) reduces to
//! one such difference, so its accuracy bounds the accuracy of every matrix in
//! the crate.

/// Gamma function.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Binomial coefficient `C(n, k)` as a float.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c.round()
}

/// Truncated power `t_+^p`, with the convention `t_+^0 = 1` for `t >= 0`.
#[inline]
pub fn truncated_power(t: f64, p: f64) -> f64 {
    if p == 0.0 {
        if t >= 0.0 {
            1.0
        } else {
            0.0
        }
    } else if t > 0.0 {
        t.powf(p)
    } else {
        0.0
    }
}

const SERIES_MAX_TERMS: usize = 400;

/// `sum_{k=0}^{order} (-1)^k C(order, k) (x - k)_+^p`.
///
/// Far from the support start the direct sum cancels catastrophically (the
/// result decays like `x^(p - order)` while each term grows like `x^p`). There
/// the difference is expanded about the stencil centre `c = x - order/2`:
///
/// `sum_j C(p, j) c^(p-j) mu_j`,  `mu_j = sum_k (-1)^k C(order, k) (order/2 - k)^j`,
///
/// where `mu_j` vanishes exactly for `j < order` and for `j + order` odd, so
/// none of the cancelling leading terms is ever formed.
pub fn power_difference(order: usize, p: f64, x: f64) -> f64 {
    let half = order as f64 / 2.0;
    let centre = x - half;
    if order > 0 && centre >= order as f64 {
        power_difference_series(order, p, centre)
    } else {
        (0..=order)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sign * binomial(order, k) * truncated_power(x - k as f64, p)
            })
            .sum()
    }
}

fn stencil_moment(order: usize, j: usize) -> f64 {
    let half = order as f64 / 2.0;
    (0..=order)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * binomial(order, k) * (half - k as f64).powi(j as i32)
        })
        .sum()
}

fn power_difference_series(order: usize, p: f64, centre: f64) -> f64 {
    let inv = 1.0 / centre;
    let mut coeff = 1.0; // C(p, j)
    let mut cpow = centre.powf(p); // centre^(p - j)
    let mut sum = 0.0;
    let mut quiet = 0;
    for j in 0..SERIES_MAX_TERMS {
        if j >= order && (j - order) % 2 == 0 {
            let term = coeff * cpow * stencil_moment(order, j);
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() {
                quiet += 1;
                if quiet >= 2 {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        coeff *= (p - j as f64) / (j + 1) as f64;
        if coeff == 0.0 {
            break;
        }
        cpow *= inv;
    }
    sum
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
