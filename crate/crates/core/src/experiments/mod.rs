//! Test problems, error norms and the table drivers behind the command line.

pub mod norms;
pub mod problems;
pub mod report;
pub mod tables;

pub use norms::{l2_error_1d, l2_error_2d};
pub use problems::{make_f1, make_f2, make_fs, make_fs_with_alpha, Problem1D, Problem2D};
pub use report::{BenchRow, ConditionRow, ReportDocument};
pub use tables::{
    condition_pair, condition_row_1d, condition_row_2d, run_benchmark_1d, run_benchmark_2d, run_condition_table_1d,
    run_condition_table_2d, run_convergence_table_1d, run_convergence_table_2d, solve_with, BenchConfig,
    Condition1DConfig, Condition2DConfig, SolveOutcome, SolverKind,
};
