//! Command-line front end for the Cayley graph constructions, structure
//! checks, cop-number certificates, and game simulation.

mod commands;
mod instance;

use clap::{Parser, Subcommand};
use meyniel_core::error::Error;

#[derive(Parser)]
#[command(
    name = "meyniel-lab",
    version,
    about = "Builds Cayley graphs with provably large cop number, verifies their structure, and certifies cop-number bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance and write its edge list plus metadata.
    Construct(commands::ConstructArgs),
    /// Verify triangle-, K_{2,t}-, and 4-cycle-freeness; emit a report.
    Check(commands::CheckArgs),
    /// Certify cop-number bounds, running the exact solver under a budget.
    Copnumber(commands::CopnumberArgs),
    /// Play one cops-and-robbers match between named strategies.
    Simulate(commands::SimulateArgs),
    /// Reproduce the bound table across the built-in instance list.
    Table(commands::TableArgs),
}

/// Exit codes: 0 success (inconclusive-with-bracket included), 2 usage or
/// precondition, 3 i/o, 4 internal inconsistency.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Parse(_) => 3,
        Error::Inconsistency(_) => 4,
        _ => 2,
    }
}

fn configure_workers() {
    if let Ok(value) = std::env::var("MEYNIEL_LAB_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    configure_workers();
    let result = match &cli.command {
        Command::Construct(args) => commands::cmd_construct(args),
        Command::Check(args) => commands::cmd_check(args),
        Command::Copnumber(args) => commands::cmd_copnumber(args),
        Command::Simulate(args) => commands::cmd_simulate(args),
        Command::Table(args) => commands::cmd_table(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}
