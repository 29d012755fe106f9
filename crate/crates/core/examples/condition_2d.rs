//! Condition numbers of `C_n^s` and its wavelet form on the unit square.

use fracwave::experiments::{run_condition_table_2d, Condition2DConfig};

fn main() -> fracwave::Result<()> {
    let cfg = Condition2DConfig {
        s: 2,
        a: (1.0, 1.0),
        p1: 1.0,
        p2: 1.0,
        alpha: 0.75,
        beta: 0.75,
        r: 3,
        nmin: 3,
        nmax: 5,
    };
    print!("{}", run_condition_table_2d(&cfg)?.to_text());
    Ok(())
}
