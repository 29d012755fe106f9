use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracwave::experiments::{
    make_f1, make_f2, make_fs_with_alpha, run_benchmark_1d, run_benchmark_2d, run_condition_table_1d,
    run_condition_table_2d, BenchConfig, Condition1DConfig, Condition2DConfig, Problem1D, ReportDocument, SolverKind,
};
use fracwave::Error;

#[derive(Parser)]
#[command(name = "fracwave", version, about = "Wavelet-Galerkin solver for fractional elliptic equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Condition numbers of A_n and B_n = S_n A_n S_n^T
    Cond1d(Cond1d),
    /// Condition numbers of C_n^s and D_n^s
    Cond2d(Cond2d),
    /// Solve one 1D problem at a single level
    Solve1d(Solve1d),
    /// Solve the 2D problem at a single level
    Solve2d(Solve2d),
    /// Iterations, timings and L2 errors over a range of 1D levels
    Bench1d(Bench1d),
    /// Iterations, timings and L2 errors over a range of 2D levels
    Bench2d(Bench2d),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    F1,
    F2,
    Fs,
}

#[derive(Args)]
struct Output {
    /// Write CSV to this file (the table is still printed)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct Levels {
    /// Single level; overrides --nmin/--nmax
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    nmin: Option<u32>,
    #[arg(long)]
    nmax: Option<u32>,
}

impl Levels {
    fn range(&self, lo: u32, hi: u32) -> (u32, u32) {
        match self.n {
            Some(n) => (n, n),
            None => (self.nmin.unwrap_or(lo), self.nmax.unwrap_or(hi)),
        }
    }
}

#[derive(Args)]
struct Cond1d {
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Defaults to 1 - p
    #[arg(long)]
    q: Option<f64>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    r: u8,
    #[command(flatten)]
    levels: Levels,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Cond2d {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    s: u8,
    #[arg(long, default_value_t = 0.75)]
    alpha: f64,
    /// Defaults to alpha
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    a1: f64,
    #[arg(long, default_value_t = 1.0)]
    a2: f64,
    #[arg(long, default_value_t = 1.0)]
    p1: f64,
    #[arg(long)]
    q1: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    p2: f64,
    #[arg(long)]
    q2: Option<f64>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=3))]
    r: u8,
    #[command(flatten)]
    levels: Levels,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SolverArgs {
    /// Comma-separated: lu, bicgstab, pre-bicgstab, gmres, pre-gmres
    #[arg(long, value_delimiter = ',')]
    solver: Vec<SolverKind>,
    /// GMRES restart length (0 = full GMRES)
    #[arg(long, default_value_t = 0)]
    restart: usize,
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
    #[arg(long, default_value_t = 200_000)]
    max_iter: usize,
}

#[derive(Args)]
struct Problem1dArgs {
    #[arg(long, value_enum, default_value = "f1")]
    problem: Problem,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, default_value_t = 1.1)]
    lambda: f64,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    r: u8,
}

#[derive(Args)]
struct Problem2dArgs {
    #[arg(long, value_enum, default_value = "fs")]
    problem: Problem,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    s: u8,
    #[arg(long, default_value_t = 0.75)]
    alpha: f64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=3))]
    r: u8,
}

#[derive(Args)]
struct Solve1d {
    #[command(flatten)]
    problem: Problem1dArgs,
    #[arg(long, default_value_t = 6)]
    n: u32,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Solve2d {
    #[command(flatten)]
    problem: Problem2dArgs,
    #[arg(long, default_value_t = 4)]
    n: u32,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Bench1d {
    #[command(flatten)]
    problem: Problem1dArgs,
    #[command(flatten)]
    levels: Levels,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Bench2d {
    #[command(flatten)]
    problem: Problem2dArgs,
    #[command(flatten)]
    levels: Levels,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Solver(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Breakdown { .. } | Error::Singular(_) | Error::Svd => Failure::Solver(e.to_string()),
            Error::Report(_) => Failure::Solver(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn problem_1d(args: &Problem1dArgs) -> Result<Problem1D, Failure> {
    Ok(match args.problem {
        Problem::F1 => make_f1(args.beta)?,
        Problem::F2 => make_f2(args.beta, args.lambda)?,
        Problem::Fs => return Err(Failure::Usage("problem fs is two-dimensional".into())),
    })
}

fn bench_config(args: &SolverArgs, r: u8, lo: u32, hi: u32, default: &[SolverKind]) -> BenchConfig {
    let solvers = if args.solver.is_empty() {
        default.to_vec()
    } else {
        args.solver.clone()
    };
    let mut cfg = BenchConfig::new(r as usize, lo, hi, solvers);
    cfg.tol = args.tol;
    cfg.restart = args.restart;
    cfg.max_iter = args.max_iter;
    cfg
}

fn emit(doc: &ReportDocument, output: &Output) -> Result<(), Failure> {
    let csv = doc.to_csv()?;
    match output.format {
        Format::Csv => print!("{csv}"),
        Format::Text => print!("{}", doc.to_text()),
    }
    if let Some(path) = &output.out {
        std::fs::write(path, &csv).map_err(|e| Failure::Solver(format!("{}: {e}", path.display())))?;
    }
    if let ReportDocument::Bench { rows, .. } = doc {
        if let Some(row) = rows.iter().find(|r| !r.converged) {
            return Err(Failure::Solver(format!(
                "{} did not converge at n = {} ({} iterations)",
                row.solver, row.n, row.iterations
            )));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    const SOLVE_DEFAULT: &[SolverKind] = &[SolverKind::PreBicgstab];
    const BENCH_DEFAULT: &[SolverKind] = &[SolverKind::Bicgstab, SolverKind::Lu, SolverKind::PreBicgstab];
    const BENCH2_DEFAULT: &[SolverKind] = &[SolverKind::Bicgstab, SolverKind::PreBicgstab];
    match cli.command {
        Command::Cond1d(c) => {
            let (nmin, nmax) = c.levels.range(3, 10);
            let cfg = Condition1DConfig {
                a: c.a,
                p: c.p,
                q: c.q.unwrap_or(1.0 - c.p),
                beta: c.beta,
                r: c.r as usize,
                nmin,
                nmax,
            };
            emit(&run_condition_table_1d(&cfg)?, &c.output)
        }
        Command::Cond2d(c) => {
            let (nmin, nmax) = c.levels.range(4, 5);
            for (name, p, q) in [("q1", c.p1, c.q1), ("q2", c.p2, c.q2)] {
                if let Some(q) = q {
                    if (p + q - 1.0).abs() > 1e-12 {
                        return Err(Failure::Usage(format!("{name} must equal 1 - p")));
                    }
                }
            }
            let cfg = Condition2DConfig {
                s: c.s as u32,
                a: (c.a1, c.a2),
                p1: c.p1,
                p2: c.p2,
                alpha: c.alpha,
                beta: c.beta.unwrap_or(c.alpha),
                r: c.r as usize,
                nmin,
                nmax,
            };
            emit(&run_condition_table_2d(&cfg)?, &c.output)
        }
        Command::Solve1d(c) => {
            let p = problem_1d(&c.problem)?;
            let cfg = bench_config(&c.solver, c.problem.r, c.n, c.n, SOLVE_DEFAULT);
            emit(&run_benchmark_1d(&p, &cfg)?, &c.output)
        }
        Command::Bench1d(c) => {
            let p = problem_1d(&c.problem)?;
            let (lo, hi) = c.levels.range(5, 10);
            let cfg = bench_config(&c.solver, c.problem.r, lo, hi, BENCH_DEFAULT);
            emit(&run_benchmark_1d(&p, &cfg)?, &c.output)
        }
        Command::Solve2d(c) => {
            if !matches!(c.problem.problem, Problem::Fs) {
                return Err(Failure::Usage("two-dimensional runs use --problem fs".into()));
            }
            let p = make_fs_with_alpha(c.problem.s as u32, c.problem.alpha)?;
            let cfg = bench_config(&c.solver, c.problem.r, c.n, c.n, SOLVE_DEFAULT);
            emit(&run_benchmark_2d(&p, &cfg)?, &c.output)
        }
        Command::Bench2d(c) => {
            if !matches!(c.problem.problem, Problem::Fs) {
                return Err(Failure::Usage("two-dimensional runs use --problem fs".into()));
            }
            let p = make_fs_with_alpha(c.problem.s as u32, c.problem.alpha)?;
            let (lo, hi) = c.levels.range(4, 6);
            let cfg = bench_config(&c.solver, c.problem.r, lo, hi, BENCH2_DEFAULT);
            emit(&run_benchmark_2d(&p, &cfg)?, &c.output)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Solver(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
