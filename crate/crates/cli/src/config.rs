use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use isopoly_core::{Caps, Error, Method, SolveOptions};

pub const MAX_N_ENV: &str = "ISOPOLY_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "isopoly", version, about = "Exact optimization over graph-isomorphism permutation polytopes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for enumeration; output is identical for any value.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,
    /// Ceiling for every enumeration cap (overrides ISOPOLY_MAX_N).
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether G has a subgraph isomorphic to H.
    Decide(DecideArgs),
    /// Exhaustively check the face or lift identities.
    Verify(VerifyArgs),
    /// Maximize a tensor objective over psi_n or psi_nn.
    Optimize(OptimizeArgs),
    /// Vertex adjacency and invariants of phi_n.
    Phi(PhiArgs),
    /// Write an objective tensor as JSON.
    Tensor(TensorArgs),
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[arg(long = "g")]
    pub g: PathBuf,
    #[arg(long = "h")]
    pub h: PathBuf,
    #[arg(long, value_enum, default_value_t = DecideMethod::Psi)]
    pub method: DecideMethod,
    /// Append isolated vertices to H to match G.
    #[arg(long)]
    pub pad: bool,
    /// Input format; by default taken from the extension (.g6 / .el).
    #[arg(long, value_enum)]
    pub graph_format: Option<GraphFormat>,
    #[arg(long, value_enum, default_value_t = Solver::Bnb)]
    pub solver: Solver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecideMethod {
    Psi,
    Psinn,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    G6,
    El,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Exhaustive,
    Bnb,
}

impl From<Solver> for Method {
    fn from(s: Solver) -> Method {
        match s {
            Solver::Exhaustive => Method::Exhaustive,
            Solver::Bnb => Method::BranchAndBound,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = ["1", "3"])]
    pub theorem: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 25)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Signed entries are drawn from [-bound, bound].
    #[arg(long, default_value_t = 9)]
    pub entry_bound: i64,
    /// Also search each signed trial for the smallest integer w that works.
    #[arg(long)]
    pub probe_w: bool,
    #[arg(long, value_enum, default_value_t = Solver::Bnb)]
    pub solver: Solver,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub tensor: PathBuf,
    #[arg(long, value_enum)]
    pub polytope: Polytope,
    #[arg(long, value_enum, default_value_t = Solver::Bnb)]
    pub solver: Solver,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Polytope {
    Psi,
    Psinn,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub adjacency: bool,
    #[arg(long)]
    pub compare: bool,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long, value_enum)]
    pub kind: TensorKind,
    #[arg(long)]
    pub n: Option<usize>,
    /// Graphs for `--kind pair` (A_G ⊗ A_H).
    #[arg(long = "g")]
    pub g: Option<PathBuf>,
    #[arg(long = "h")]
    pub h: Option<PathBuf>,
    #[arg(long)]
    pub pad: bool,
    #[arg(long, value_enum)]
    pub graph_format: Option<GraphFormat>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 9)]
    pub entry_bound: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TensorKind {
    Zero,
    Identity,
    Pair,
    Random,
}

/// Everything a run depends on. Two equal configs produce byte-identical
/// output.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub threads: usize,
    pub caps: Caps,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let max_n = match cli.max_n {
            Some(v) => Some(v),
            None => match std::env::var(MAX_N_ENV) {
                Ok(v) => Some(
                    v.trim()
                        .parse()
                        .map_err(|_| CliError::Input(format!("{MAX_N_ENV} must be a nonnegative integer, got {v:?}")))?,
                ),
                Err(_) => None,
            },
        };
        Ok(RunConfig {
            command: cli.command,
            format: cli.format,
            threads: cli.threads.max(1),
            caps: max_n.map_or_else(Caps::default, Caps::uniform),
        })
    }

    pub fn solve_options(&self, solver: Solver) -> SolveOptions {
        SolveOptions { method: solver.into(), threads: self.threads, caps: self.caps }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Cap(String),
}

impl CliError {
    pub fn report(&self) -> ExitCode {
        match self {
            CliError::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Cap(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Cap(e.to_string())
        }
    }
}
