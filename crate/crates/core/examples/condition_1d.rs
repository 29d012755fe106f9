//! Condition numbers of the single-scale and wavelet stiffness matrices in 1D.

use fracwave::experiments::{run_condition_table_1d, Condition1DConfig};

fn main() -> fracwave::Result<()> {
    let cfg = Condition1DConfig {
        a: 1.0,
        p: 0.5,
        q: 0.5,
        beta: 0.5,
        r: 2,
        nmin: 3,
        nmax: 8,
    };
    print!("{}", run_condition_table_1d(&cfg)?.to_text());
    Ok(())
}
