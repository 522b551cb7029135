//! `pathpairs`: exact counts of lattice-path pairs by intersections, the
//! two-to-one bijection, barrier-walk probabilities and verification suites.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{render, Format};

#[derive(Parser, Debug)]
#[command(
    name = "pathpairs",
    version,
    about = "Exact counting of lattice-path pairs by intersections"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Lift the default size bounds. Enumeration keeps its hard limit.
    #[arg(long, global = true)]
    pub unsafe_nmax: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordered pairs on an r x (n-r) rectangle by shared interior vertices.
    Nkr(NkrArgs),
    /// Pairs of paths to (r, n-r) and (s, n-s) by shared vertices past the start.
    Mrs(MrsArgs),
    /// Pairs of free n-step walks by shared vertices past the origin.
    Fnk(TableArgs),
    /// Probability that two walks ending together share k interior vertices.
    Pnk(TableArgs),
    /// Sum over rectangles with n steps of the same-endpoint counts.
    Diag(TableArgs),
    /// Mean number of shared vertices of two free walks.
    Avg(AvgArgs),
    /// Probability that two barrier walkers first meet at the origin.
    Barrier(BarrierArgs),
    /// Correspondence table of the two-to-one map on an r x s rectangle.
    Bijection(BijectionArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NkrMethod {
    FormulaA,
    FormulaB,
    Series,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Series,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BarrierMethod {
    Dp,
    SingleWalker,
    Formula,
    All,
}

#[derive(Args, Debug)]
pub struct NkrArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    /// Omit for the full table over k.
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, value_enum, default_value = "formula-a")]
    pub method: NkrMethod,
}

#[derive(Args, Debug)]
pub struct MrsArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub s: u64,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct AvgArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct BarrierArgs {
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long)]
    pub x: u32,
    /// Constant West-step probability as an exact rational such as 1/3.
    #[arg(
        long,
        conflicts_with = "level_file",
        required_unless_present = "level_file"
    )]
    pub p: Option<String>,
    /// File with one rational per line: the probability at level 1, 2, ...
    #[arg(long)]
    pub level_file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "dp")]
    pub method: BarrierMethod,
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub s: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run every suite (the default when no suite is named).
    #[arg(long, conflicts_with = "suite")]
    pub all: bool,
    /// Suite to run; repeatable. `none` selects nothing.
    #[arg(long)]
    pub suite: Vec<String>,
    /// Override every size bound.
    #[arg(long)]
    pub nmax: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Nkr(a) => commands::nkr(a, &cli.global),
        Command::Mrs(a) => commands::mrs(a, &cli.global),
        Command::Fnk(a) => commands::fnk(a, &cli.global),
        Command::Pnk(a) => commands::pnk(a, &cli.global),
        Command::Diag(a) => commands::diag(a, &cli.global),
        Command::Avg(a) => commands::avg(a, &cli.global),
        Command::Barrier(a) => commands::barrier(a, &cli.global),
        Command::Bijection(a) => commands::bijection(a, &cli.global),
        Command::Verify(a) => commands::verify(a, &cli.global),
    };
    match outcome {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) =
                render(&outcome.record, cli.global.format, &mut stdout).and_then(|_| stdout.flush())
            {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(1);
            }
            if outcome.passed {
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
