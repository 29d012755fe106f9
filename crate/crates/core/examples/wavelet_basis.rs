//! Spline wavelets with boundary conditions and the multilevel transform:
//! prints a few wavelet values and checks `S_n Phi_n = Psi_n` at one point.

use fracwave::spline::{scaled_basis_function, wavelet_function, WaveletBasisSpec};
use fracwave::transform::multilevel_1d;

fn main() -> fracwave::Result<()> {
    let spec = WaveletBasisSpec::for_1d(3, 0.5)?;
    let n = 5;
    println!("r = {}, t = {}, n0 = {}, mu = {}", spec.r(), spec.t(), spec.n0(), spec.mu());
    for j in [1, 2, 8] {
        let psi = wavelet_function(&spec, 3, j)?;
        let (lo, hi) = psi.support();
        println!("psi_(3,{j}) support [{lo}, {hi}], value at 0.2: {:.6}", psi.eval(0.2));
    }

    let s = multilevel_1d(&spec, n)?;
    let x = 0.4321;
    let phi = (0..spec.dim(n))
        .map(|j| scaled_basis_function(&spec, n, j).map(|f| f.eval(x)))
        .collect::<fracwave::Result<Vec<_>>>()?;
    let psi = s.apply(&phi);
    let coarse = scaled_basis_function(&spec, spec.n0(), 0)?.eval(x) * 2f64.powf(-(spec.n0() as f64) * spec.mu());
    println!("S_n has {} nonzeros in factored form for dim {}", s.nnz(), s.dim());
    println!("first multilevel function at {x}: {:.12} (direct {:.12})", psi[0], coarse);
    Ok(())
}
