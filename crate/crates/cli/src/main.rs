//! `synchrony` — batch front end for the synchrony-core library.
//!
//! Five subcommands: `transform` (event relabeling), `lightspeed`
//! (one-way speeds and the invariant round trip), `quantum` (scenario-file
//! verifications), `propagator` (randomized integrand identities), and
//! `sweep` (CSV tables over a tilt range).
//!
//! Exit codes: 0 = all checks passed, 1 = a tolerance check failed,
//! 2 = input error, 3 = degenerate physics input. Output is deterministic
//! given flags, scenario file, and seed, apart from the elapsed-time field.

mod commands;
mod fmt;
mod report;
mod scenario;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::ReportFormat;

/// Command failures that map onto the nonzero exit codes (tolerance
/// failures are an `Ok(false)` verdict, not an error).
pub enum CliError {
    /// Unparseable or inconsistent input: exit code 2.
    Input(String),
    /// Physically degenerate request, e.g. a direction with vanishing
    /// one-way speed denominator: exit code 3.
    Degenerate(String),
}

/// Run-wide settings shared by every subcommand.
pub struct Ctx {
    pub seed: u64,
    pub output: Option<ReportFormat>,
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "synchrony",
    version,
    about = "Clock-synchronization conventions: transforms, light speeds, amplitude checks, and propagator identities"
)]
struct Cli {
    /// RNG seed for randomized checks; recorded in every report record.
    #[arg(long, global = true, env = "SYNCHRONY_SEED", default_value_t = 42)]
    seed: u64,
    /// Report format, overriding any scenario `output.format`.
    #[arg(long, global = true, value_enum)]
    output: Option<FormatArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Relabel an event between synchronization conventions.
    Transform(commands::transform::TransformArgs),
    /// One-way light speeds along a direction, plus the round trip.
    Lightspeed(commands::lightspeed::LightspeedArgs),
    /// Run a named verification from a quantum scenario file.
    Quantum(commands::quantum::QuantumArgs),
    /// Randomized propagator integrand-identity checks.
    Propagator(commands::propagator::PropagatorArgs),
    /// Tabulate an op across a range of tilts as CSV.
    Sweep(commands::sweep::SweepArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        seed: cli.seed,
        output: cli.output.map(|f| match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }),
    };
    let result = match &cli.command {
        Command::Transform(args) => commands::transform::run(args),
        Command::Lightspeed(args) => commands::lightspeed::run(args),
        Command::Quantum(args) => commands::quantum::run(&ctx, args),
        Command::Propagator(args) => commands::propagator::run(&ctx, args),
        Command::Sweep(args) => commands::sweep::run(&ctx, args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Degenerate(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
