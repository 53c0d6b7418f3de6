//! `operadic`: verification suites, deformation tables and symbolic
//! reports for the oscillator's operadic Lax pairs.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "operadic", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exit 0 iff every case passes.
    Verify(VerifyArgs),
    /// Deformed structure constants along the flow.
    Deform(DeformArgs),
    /// Phase-space and quasi-canonical coordinates along the flow.
    Trajectory(TrajectoryArgs),
    /// Symbolic Jacobi operator of a quantum Bianchi algebra.
    Jacobi(JacobiArgs),
    /// Determinant values at which beta = 1 for the oscillator levels.
    Spectrum(SpectrumArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Target {
    All,
    Operad,
    Lax,
    Bianchi,
    Quantum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Label {
    #[value(name = "VIIa")]
    VIIa,
    #[value(name = "IIIa1")]
    IIIa1,
    #[value(name = "VIa")]
    VIa,
    #[value(name = "II")]
    II,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ConventionArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum AlphabetArg {
    #[value(name = "pq")]
    Pq,
    #[value(name = "qpPQ")]
    QpPQ,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    target: Target,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Tolerance of finite-difference residuals.
    #[arg(long)]
    tol_fd: Option<f64>,
    /// Tolerance of float comparisons between closed forms.
    #[arg(long)]
    tol_exact_float: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
pub struct FlowArgs {
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, default_value_t = 0.5)]
    energy: f64,
    #[arg(long, default_value_t = 0.0)]
    t0: f64,
    /// End time; defaults to one period of Q and P, 4 pi / omega.
    #[arg(long)]
    t1: Option<f64>,
    /// Number of intervals; `steps + 1` rows are written.
    #[arg(long, default_value_t = 100)]
    steps: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
pub struct DeformArgs {
    #[arg(long, value_enum, default_value = "VIIa")]
    label: Label,
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[command(flatten)]
    flow: FlowArgs,
}

#[derive(Args)]
pub struct TrajectoryArgs {
    #[command(flatten)]
    flow: FlowArgs,
}

#[derive(Args)]
pub struct JacobiArgs {
    #[arg(long, value_enum, default_value = "VIIa")]
    label: Label,
    #[arg(long, value_enum, default_value = "left")]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value = "pq")]
    alphabet: AlphabetArg,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Deform(a) => commands::deform(a),
        Command::Trajectory(a) => commands::trajectory(a),
        Command::Jacobi(a) => commands::jacobi(a),
        Command::Spectrum(a) => commands::spectrum(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
