//! Stiffness matrix-vector products through circulant embedding, compared
//! with the dense product.

use fracwave::assembly::{assemble_a, stiffness_generators_1d, FractionalForm1D};
use fracwave::linalg::toeplitz_matvec_fft;

fn main() -> fracwave::Result<()> {
    let form = FractionalForm1D::new(1.0, 0.7, 0.3, 0.6, 3, 10)?;
    let a = assemble_a(&form)?;
    let y: Vec<f64> = (0..form.dim()).map(|i| (i as f64 * 0.37).sin()).collect();
    let fast = a.apply_fft(&y);
    let (a1, q1) = stiffness_generators_1d(&form);
    let embedded = toeplitz_matvec_fft(&a1, &q1, &y, form.a, form.p, form.q)?;
    let dense = a.to_dense().matvec(&y);
    let diff = |u: &[f64]| u.iter().zip(&dense).map(|(s, t)| (s - t).abs()).fold(0.0, f64::max);
    println!("dim {}", form.dim());
    println!("max |fft - dense|       {:.3e}", diff(&fast));
    println!("max |embedding - dense| {:.3e}", diff(&embedded));
    Ok(())
}
