use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qdate_core::{ClassicStrategy, GameVariant, MAX_QUBITS};

#[derive(Debug, Parser)]
#[command(
    name = "qdate",
    version,
    about = "Grover-search dating market: traces, matches and sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact target/non-target probabilities per Grover iterate.
    Trace(TraceArgs),
    /// One quantum-vs-classic match; prints a single CSV row.
    Game(GameArgs),
    /// D/T over a (P_c, P_q) grid.
    Sweep(SweepArgs),
    /// Closed-form values: optimal iterations, success probability, expected D/T.
    Analytic(AnalyticArgs),
    /// Regenerate an output from its manifest.
    Rerun(RerunArgs),
}

fn parse_variant(s: &str) -> Result<GameVariant, String> {
    s.parse().map_err(|_| format!("expected 1 or 2, got {s:?}"))
}

fn parse_strategy(s: &str) -> Result<ClassicStrategy, String> {
    s.parse()
        .map_err(|_| format!("expected memoryless or sweep, got {s:?}"))
}

const QUBITS_MAX: u64 = MAX_QUBITS as u64;

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// Register size n (N = 2^n women).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=QUBITS_MAX))]
    pub qubits: u64,
    /// Index of the marked woman.
    #[arg(long)]
    pub target: usize,
    /// Last iteration to record.
    #[arg(long)]
    pub iterations: usize,
    /// CSV destination; standard output when omitted (no manifest then).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GameArgs {
    /// Flat key=value GameConfig file; explicit flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_parser = parse_variant, required_unless_present = "config")]
    pub variant: Option<GameVariant>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=QUBITS_MAX), required_unless_present = "config")]
    pub qubits: Option<u64>,
    /// Probability that the woman accepts the classic player.
    #[arg(long, allow_negative_numbers = true)]
    pub pc: f64,
    /// Probability that the woman accepts the quantum player.
    #[arg(long, allow_negative_numbers = true)]
    pub pq: f64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: Option<u64>,
    /// RNG seed; an entropy seed is drawn (and recorded) when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_parser = parse_strategy)]
    pub classic_strategy: Option<ClassicStrategy>,
    #[arg(long)]
    pub grover_iterations: Option<usize>,
    /// Classic proposals per turn (defaults to 1 in game 1, N/2 in game 2).
    #[arg(long)]
    pub classic_attempts: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub target: usize,
    /// Also write header + row to this file, with a manifest.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_variant)]
    pub variant: GameVariant,
    #[arg(long, value_parser = clap::value_parser!(u64).range(0..=QUBITS_MAX))]
    pub qubits: u64,
    /// Points per axis over [0, 1].
    #[arg(long, default_value_t = 21, value_parser = clap::value_parser!(u64).range(2..=1001))]
    pub grid: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_parser = parse_strategy, default_value = "memoryless")]
    pub classic_strategy: ClassicStrategy,
    #[arg(long, default_value_t = 1)]
    pub grover_iterations: usize,
    #[arg(long, default_value_t = 0)]
    pub target: usize,
    /// Write the D/T = 0 contour of the expected surface here.
    #[arg(long)]
    pub boundary_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyticArgs {
    /// Number of women N (a power of two).
    #[arg(long)]
    pub n: u64,
    /// Print the success probability after this many iterates.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Print the expected D/T of this game instead (needs --pc and --pq).
    #[arg(long, value_parser = parse_variant, requires_all = ["pc", "pq"])]
    pub variant: Option<GameVariant>,
    #[arg(long, allow_negative_numbers = true)]
    pub pc: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub pq: Option<f64>,
    #[arg(long, value_parser = parse_strategy, default_value = "memoryless")]
    pub classic_strategy: ClassicStrategy,
    #[arg(long, default_value_t = 1)]
    pub grover_iterations: usize,
}

#[derive(Debug, Args)]
pub struct RerunArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    /// Write to this path instead of the recorded output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override the recorded boundary path of a sweep.
    #[arg(long)]
    pub boundary_out: Option<PathBuf>,
}
