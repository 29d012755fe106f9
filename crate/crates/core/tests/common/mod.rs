//! Independent oracles for the integration tests: cardinal B-splines by the
//! Cox-de Boor recursion, wavelets from their printed two-scale formulas and
//! a globally adaptive Gauss-Kronrod rule for (fractional) integrals.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// `M_m(t)` with support `[0, m]`.
pub fn cardinal(m: usize, t: f64) -> f64 {
    if m == 1 {
        return if (0.0..1.0).contains(&t) { 1.0 } else { 0.0 };
    }
    if t <= 0.0 || t >= m as f64 {
        return 0.0;
    }
    let k = (m - 1) as f64;
    (t * cardinal(m - 1, t) + (m as f64 - t) * cardinal(m - 1, t - 1.0)) / k
}

/// `M_m^(k)(t)` via `M_m' = M_{m-1} - M_{m-1}(· - 1)`.
pub fn cardinal_derivative(m: usize, k: usize, t: f64) -> f64 {
    if k == 0 {
        return cardinal(m, t);
    }
    cardinal_derivative(m - 1, k - 1, t) - cardinal_derivative(m - 1, k - 1, t - 1.0)
}

/// `d^k/dx^k [2^{n/2} M_r(2^n x - j)]`.
pub fn phi(r: usize, n: u32, j: usize, k: usize, x: f64) -> f64 {
    let s = (1u64 << n) as f64;
    s.sqrt() * s.powi(k as i32) * cardinal_derivative(r, k, s * x - j as f64)
}

/// Knots of `phi_{n,j}` as points of `[0, 1]`.
pub fn phi_knots(r: usize, n: u32, j: usize) -> Vec<f64> {
    let h = 1.0 / (1u64 << n) as f64;
    (0..=r).map(|k| (j + k) as f64 * h).collect()
}

pub fn dim(r: usize, n: u32) -> usize {
    (1usize << n) + 1 - r
}

/// Interior and left boundary wavelets as printed, in terms of `M_r(2x - k)`.
fn wavelet_masks(r: usize) -> (Vec<f64>, Vec<f64>) {
    match r {
        2 => (
            vec![1.0 / 24.0, -0.25, 5.0 / 12.0, -0.25, 1.0 / 24.0],
            vec![3.0 / 8.0, -0.25, 1.0 / 24.0],
        ),
        3 => (
            vec![1.0 / 12.0, -5.0 / 12.0, 5.0 / 12.0, -1.0 / 12.0],
            vec![5.0 / 12.0, -1.0 / 12.0],
        ),
        _ => panic!("no wavelet for r = {r}"),
    }
}

fn mask_eval(r: usize, mask: &[f64], x: f64) -> f64 {
    mask.iter()
        .enumerate()
        .map(|(k, c)| c * cardinal(r, 2.0 * x - k as f64))
        .sum()
}

/// `psi_{n,j}` for `j` in `1..=2^n`.
pub fn psi(r: usize, n: u32, j: usize, x: f64) -> f64 {
    let (interior, boundary) = wavelet_masks(r);
    let count = 1usize << n;
    let s = count as f64;
    if j == 1 {
        s.sqrt() * mask_eval(r, &boundary, s * x)
    } else if j == count {
        s.sqrt() * mask_eval(r, &boundary, s * (1.0 - x))
    } else {
        s.sqrt() * mask_eval(r, &interior, s * x - j as f64 + 2.0)
    }
}

/// The multilevel basis `Psi_n` in transform order, evaluated at `x`.
pub fn multilevel_basis(r: usize, n0: u32, n: u32, mu: f64, x: f64) -> Vec<f64> {
    let c0 = 2f64.powf(-(n0 as f64) * mu);
    let mut out: Vec<f64> = (0..dim(r, n0)).map(|j| c0 * phi(r, n0, j, 0, x)).collect();
    for k in n0..n {
        let c = 2f64.powf(-(k as f64) * mu);
        out.extend((1..=1usize << k).map(|j| c * psi(r, k, j, x)));
    }
    out
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// G7-K15 on `[a, b]`: `(kronrod, |kronrod - gauss|)`.
fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let v = f(c - h * XGK[i]) + f(c + h * XGK[i]);
        k += WGK[i] * v;
        if i % 2 == 1 {
            g += WG[i / 2] * v;
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error)
    }
}

/// Globally adaptive G7-K15 over `[a, b]` split first at `breaks`: the
/// interval with the largest error estimate is bisected until the total
/// estimate is below `max(abs_tol, rel_tol * sum |I_k|)`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, breaks: &[f64], abs_tol: f64, rel_tol: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut pts: Vec<f64> = breaks.iter().copied().filter(|&t| t > a && t < b).collect();
    pts.push(a);
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut heap = BinaryHeap::new();
    let (mut total, mut err) = (0.0, 0.0);
    for w in pts.windows(2) {
        let (value, error) = gk15(f, w[0], w[1]);
        total += value;
        err += error;
        heap.push(Piece {
            a: w[0],
            b: w[1],
            value,
            error,
        });
    }
    let mass: f64 = heap.iter().map(|p| p.value.abs()).sum();
    for _ in 0..5_000 {
        if err <= abs_tol.max(rel_tol * mass.max(total.abs())) {
            break;
        }
        let worst = heap.pop().expect("nonempty");
        let m = 0.5 * (worst.a + worst.b);
        // estimates at roundoff level cannot be improved by bisection
        if m <= worst.a || m >= worst.b || worst.error <= 1e-15 * worst.value.abs() {
            heap.push(worst);
            break;
        }
        total -= worst.value;
        err -= worst.error;
        for (lo, hi) in [(worst.a, m), (m, worst.b)] {
            let (value, error) = gk15(f, lo, hi);
            total += value;
            err += error;
            heap.push(Piece { a: lo, b: hi, value, error });
        }
    }
    heap.iter().map(|p| p.value).sum()
}

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `_0D_x^{-alpha} f (x)` for `f` smooth between `knots`, via `u = (x - ξ)^alpha`.
pub fn frac_left(alpha: f64, f: &dyn Fn(f64) -> f64, knots: &[f64], x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let inv = 1.0 / alpha;
    let g = |u: f64| f(x - u.powf(inv));
    let breaks: Vec<f64> = knots.iter().filter(|&&k| k > 0.0 && k < x).map(|&k| (x - k).powf(alpha)).collect();
    integrate(&g, 0.0, x.powf(alpha), &breaks, 1e-300, 1e-13) / gamma(alpha + 1.0)
}

/// `_xD_1^{-alpha} f (x)` via `u = (ξ - x)^alpha`.
pub fn frac_right(alpha: f64, f: &dyn Fn(f64) -> f64, knots: &[f64], x: f64) -> f64 {
    if x >= 1.0 {
        return 0.0;
    }
    let inv = 1.0 / alpha;
    let g = |u: f64| f(x + u.powf(inv));
    let breaks: Vec<f64> = knots.iter().filter(|&&k| k > x && k < 1.0).map(|&k| (k - x).powf(alpha)).collect();
    integrate(&g, 0.0, (1.0 - x).powf(alpha), &breaks, 1e-300, 1e-13) / gamma(alpha + 1.0)
}

/// `∫ test(x) I[trial](x) dx` over the support of `test`, with `I` the left or
/// right fractional integral of order `alpha`.
pub fn fractional_pairing(
    alpha: f64,
    trial: &dyn Fn(f64) -> f64,
    trial_knots: &[f64],
    test: &dyn Fn(f64) -> f64,
    test_knots: &[f64],
    right_sided: bool,
) -> f64 {
    let inner = |x: f64| {
        if right_sided {
            frac_right(alpha, trial, trial_knots, x)
        } else {
            frac_left(alpha, trial, trial_knots, x)
        }
    };
    let outer = |x: f64| test(x) * inner(x);
    let mut breaks = trial_knots.to_vec();
    breaks.extend_from_slice(test_knots);
    let lo = test_knots[0];
    let hi = *test_knots.last().unwrap();
    integrate(&outer, lo, hi, &breaks, 1e-300, 1e-12)
}

/// 1D stiffness entry `a [p <_0D^{-beta} phi_j', phi_i'> + q <_xD_1^{-beta} phi_j', phi_i'>]`.
pub fn stiffness_1d(r: usize, n: u32, beta: f64, a: f64, p: f64, q: f64, i: usize, j: usize) -> f64 {
    let trial = |x: f64| phi(r, n, j, 1, x);
    let test = |x: f64| phi(r, n, i, 1, x);
    let (tk, sk) = (phi_knots(r, n, j), phi_knots(r, n, i));
    let mut v = 0.0;
    if p != 0.0 {
        v += p * fractional_pairing(beta, &trial, &tk, &test, &sk, false);
    }
    if q != 0.0 {
        v += q * fractional_pairing(beta, &trial, &tk, &test, &sk, true);
    }
    a * v
}

/// `<D^{s-1} _0D^{-alpha} D phi_j, D phi_i>` for `r = 3` moved onto second
/// derivatives: `<_0D^{-alpha} phi_j'', phi_i'>` (s = 2) and
/// `-<_0D^{-alpha} phi_j'', phi_i''>` (s = 3).
pub fn highorder_entry(s: u32, n: u32, alpha: f64, i: usize, j: usize) -> f64 {
    let r = 3;
    let trial = |x: f64| phi(r, n, j, 2, x);
    let test_order = (s - 1) as usize;
    let test = move |x: f64| phi(r, n, i, test_order, x);
    let v = fractional_pairing(alpha, &trial, &phi_knots(r, n, j), &test, &phi_knots(r, n, i), false);
    if s == 3 {
        -v
    } else {
        v
    }
}

/// `<phi_j, phi_i>` by quadrature.
pub fn mass_entry(r: usize, n: u32, i: usize, j: usize) -> f64 {
    let f = |x: f64| phi(r, n, i, 0, x) * phi(r, n, j, 0, x);
    let mut k = phi_knots(r, n, i);
    k.extend(phi_knots(r, n, j));
    integrate(&f, 0.0, 1.0, &k, 1e-300, 1e-14)
}

/// Relative difference scaled by `scale`.
pub fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.abs().max(f64::MIN_POSITIVE)
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}
