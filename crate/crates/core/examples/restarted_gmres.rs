//! Restarted GMRES with and without the wavelet preconditioner (s = 3).

use fracwave::assembly::{assemble_c2d, load_vector_2d};
use fracwave::experiments::make_fs;
use fracwave::krylov::{gmres, SolverConfig};
use fracwave::transform::multilevel_2d;

fn main() -> fracwave::Result<()> {
    let problem = make_fs(3)?;
    for n in 4..=6 {
        let form = problem.form(3, n)?;
        let spec = form.basis()?;
        let c = assemble_c2d(&form)?;
        let b = load_vector_2d(&problem.forcing, &spec, n)?;
        let s = multilevel_2d(&spec, n)?;
        let plain = gmres(&c, &b, &SolverConfig::default().with_restart(50))?;
        let pre = gmres(&c, &b, &SolverConfig::default().with_restart(50).with_preconditioner(&s))?;
        println!("n={n} GMRES(50) {:>10}  pre-GMRES(50) {:>8}", plain.label, pre.label);
    }
    Ok(())
}
