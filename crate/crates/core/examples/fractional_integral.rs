//! Riemann-Liouville integral of a B-spline in closed form and the load
//! vector of a singular forcing term.

use fracwave::assembly::{frac_integral_piecewise, load_vector_1d, PowerTerm};
use fracwave::spline::{bspline, WaveletBasisSpec};

fn main() -> fracwave::Result<()> {
    let m3 = bspline(3)?;
    let profile = frac_integral_piecewise(0.5, &m3)?;
    for x in [0.5, 1.5, 2.5, 4.0] {
        println!("(_0D^(-1/2) M_3)({x}) = {:.10}", profile.eval(x));
    }

    let spec = WaveletBasisSpec::for_1d(2, 0.75)?;
    let f = [PowerTerm::new(1.0, -0.25), PowerTerm::right(2.0, 0.5, 1.0)];
    let b = load_vector_1d(&f, &spec, 4)?;
    println!("<x^(-1/4) + 2 (1-x)^(1/2), phi_(4,j)> = {b:.6?}");
    Ok(())
}
