mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::{render, Format};

/// Exact and constructive total transversals in uniform hypergraphs.
#[derive(Parser, Serialize)]
#[command(name = "hypercover", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Serialize)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for Monte-Carlo trials.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    /// Leave the timestamp out of the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Standard errors allowed between a Monte-Carlo mean and its expectation.
    #[arg(long, default_value_t = 3.0, global = true)]
    pub se_multiplier: f64,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Exact value of one invariant.
    Solve(SolveArgs),
    /// Polynomial-time construction with its guarantee.
    Construct(ConstructArgs),
    /// Transform an instance.
    Xform(XformArgs),
    /// Generate instances.
    Gen(GenArgs),
    /// Search for the largest τ_t/(n+m) in the class.
    Search(SearchArgs),
    /// Check the theorem inequalities.
    Verify(VerifyArgs),
    /// Compare the strong-transversal upper side with search results against ln(k)/k.
    Sweep(SweepArgs),
}

#[derive(Args, Serialize)]
pub struct SolveArgs {
    /// tau, tau_t, tau_strong, gamma, gamma_t or ec_t.
    #[arg(long)]
    pub invariant: String,
    /// Use the exhaustive oracle instead of branch and bound.
    #[arg(long)]
    pub oracle: bool,
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructMethod {
    Tt2,
    Ttk,
    P3,
    Forest,
    Strong,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingArg {
    Exact,
    Greedy,
}

#[derive(Args, Serialize)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub method: ConstructMethod,
    /// Packing mode for `p3`.
    #[arg(long, value_enum, default_value_t = PackingArg::Exact)]
    pub packing: PackingArg,
    /// Multiplier for `strong`.
    #[arg(long, default_value_t = 2.0)]
    pub c: f64,
    /// Trials for `strong`; one trial reports the set itself.
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XformOp {
    Onh,
    TwoSection,
    Dual,
    Incidence,
    Shrink,
    Fk,
    FkStar,
}

#[derive(Args, Serialize)]
pub struct XformArgs {
    #[arg(long, value_enum)]
    pub op: XformOp,
    /// Uniformity for `fk` and `fk-star`.
    #[arg(long)]
    pub k: Option<usize>,
    pub input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    /// `m` random `k`-subsets of `n` vertices.
    Hypergraph,
    /// Random `k`-regular graph on `n` vertices.
    Regular,
    /// Random linear 2-regular `k`-uniform hypergraph with `m` edges.
    Linear2,
    /// G(n, p).
    Graph,
    /// Every class member with `k < n ≤ n-max` and at most `m-max` edges.
    Enumerate,
}

#[derive(Args, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Redraw until the instance lies in the class.
    #[arg(long)]
    pub require_class: bool,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub m_max: usize,
}

#[derive(Args, Serialize)]
pub struct SearchArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest order of the exhaustive phase.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Largest edge count of the exhaustive phase.
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub random_n_max: Option<usize>,
    #[arg(long)]
    pub random_m_max: Option<usize>,
    /// Skip the exhaustive phase.
    #[arg(long)]
    pub random_only: bool,
}

#[derive(Args, Serialize)]
pub struct VerifyArgs {
    /// `all`, or a comma list of theorem ids and groups such as `T_b2,O2`.
    #[arg(long, default_value = "all")]
    pub theorems: String,
    /// Check every enumerated class member of uniformity `k` instead of files.
    #[arg(long)]
    pub enumerate: Option<usize>,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub m_max: usize,
    pub inputs: Vec<String>,
}

#[derive(Args, Serialize)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_values_t = vec![10, 20, 50])]
    pub k_list: Vec<usize>,
    /// A number above 1, or `auto` for the grid choice minimizing the upper coefficient.
    #[arg(long, default_value = "auto")]
    pub c: String,
    #[arg(long, default_value_t = 200)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Monte-Carlo instances have n = m = factor·k.
    #[arg(long, default_value_t = 20)]
    pub mc_n_factor: usize,
    #[arg(long, default_value_t = 300)]
    pub search_budget: u64,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Solve(_) => "solve",
            Command::Construct(_) => "construct",
            Command::Xform(_) => "xform",
            Command::Gen(_) => "gen",
            Command::Search(_) => "search",
            Command::Verify(_) => "verify",
            Command::Sweep(_) => "sweep",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli) {
        Ok(outcome) => {
            let config = serde_json::to_value(&cli).expect("config serializes");
            print!(
                "{}",
                render(cli.command.name(), &config, !cli.global.no_timestamp, cli.global.format, &outcome)
            );
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
