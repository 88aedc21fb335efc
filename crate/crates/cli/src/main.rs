mod bench;
mod commands;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "locpart", version, about = "Exact and FPT solvers for fixed-size local graph partitioning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimize a spec over k-subsets, or decide it against a threshold.
    Solve(SolveArgs),
    /// Approximate max (k, n-k)-cut, or solve min (k, n-k)-cut exhaustively.
    Approx(ApproxArgs),
    /// Count connected vertex sets whose smallest member is the root.
    Enum(EnumArgs),
    /// Check a tree decomposition against a graph.
    ValidateTd(ValidateArgs),
    /// Run a fixed instance/method matrix and emit CSV rows.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Alg1,
    Alg2,
    /// ALG2 branching on closed neighborhoods of the greedy sets.
    Alg2Nbhd,
    Tw,
    Vc,
    Oracle,
    /// Min (k, n-k)-cut in O*(n^p), requires p <= k.
    Np,
    /// Min (k, n-k)-cut, FPT in p + k.
    Pk,
    /// Max (k, n-k)-cut: constructions first, then ALG1.
    Standard,
}

#[derive(clap::Args)]
pub struct SolveArgs {
    /// Edge list (`n m` header) or DIMACS graph file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Preset (densest, sparsest, max-cut, min-cut, coverage) or `goal=max,a1=1,a2=1/2`.
    #[arg(long)]
    pub spec: String,
    #[arg(long)]
    pub k: usize,
    /// Threshold; turns the run into a yes/no decision.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Tree decomposition in PACE `.td` format.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Maximum number of subsets the oracle may examine.
    #[arg(long)]
    pub budget: Option<u128>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CutObjective {
    MaxCut,
    MinCut,
}

#[derive(clap::Args)]
pub struct ApproxArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Rational in (0, 1), e.g. `1/4`.
    #[arg(long, default_value = "1/2")]
    pub epsilon: String,
    #[arg(long, value_enum, default_value_t = CutObjective::MaxCut)]
    pub objective: CutObjective,
    #[arg(long)]
    pub budget: Option<u128>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(clap::Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub root: usize,
    #[arg(long)]
    pub max_size: usize,
    /// Also print every set.
    #[arg(long)]
    pub list: bool,
}

#[derive(clap::Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub td: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Smoke,
    Standard,
}

#[derive(clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Suite::Smoke)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => commands::solve(&args),
        Command::Approx(args) => commands::approx(&args),
        Command::Enum(args) => commands::enumerate(&args),
        Command::ValidateTd(args) => commands::validate_td(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit::code_for(&err))
        }
    }
}
