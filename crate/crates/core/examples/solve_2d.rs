//! Matrix-free solve of the two-dimensional problem with `s = 2`: Toeplitz
//! factors applied by FFT, wavelet transform applied in factored form.

use fracwave::assembly::{assemble_c2d, load_vector_2d};
use fracwave::experiments::{l2_error_2d, make_fs};
use fracwave::krylov::{bicgstab, SolverConfig};
use fracwave::transform::multilevel_2d;

fn main() -> fracwave::Result<()> {
    let problem = make_fs(2)?;
    for n in 4..=6 {
        let form = problem.form(3, n)?;
        let spec = form.basis()?;
        let c = assemble_c2d(&form)?;
        let b = load_vector_2d(&problem.forcing, &spec, n)?;
        let s = multilevel_2d(&spec, n)?;
        for (name, cfg) in [
            ("bicgstab", SolverConfig::default()),
            ("pre-bicgstab", SolverConfig::default().with_preconditioner(&s)),
        ] {
            let rep = bicgstab(&c, &b, &cfg)?;
            let err = l2_error_2d(&rep.solution, &problem.exact, &spec, n)?;
            println!("n={n} dim={:5} {name:13} iter={:>7} L2 error={err:.4e}", form.dim(), rep.label);
        }
    }
    Ok(())
}
