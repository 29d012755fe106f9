//! Solve `-D _0D^{-1/2} D u = f` with exact solution `x^2 - x^3` by LU, Bi-CGSTAB
//! and wavelet-preconditioned Bi-CGSTAB.

use fracwave::experiments::{make_f1, run_convergence_table_1d};

fn main() -> fracwave::Result<()> {
    let problem = make_f1(0.5)?;
    print!("{}", run_convergence_table_1d(&problem, 2, 5, 9)?.to_text());
    Ok(())
}
