mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Report;

#[derive(Parser)]
#[command(name = "degenera", version, about = "Non-splitting certificates for conics of totally degenerate curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Accepted for compatibility; every algorithm here is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Upper bound on explicit group-element enumeration.
    #[arg(long, env = "DEGENERA_CAP", global = true, hide_env_values = true)]
    cap: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a dual graph.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Run the non-splitting certification pipeline.
    Certify(GraphSource),
    /// Coset reconstruction of the graph from its stabilizer tower.
    Clutch {
        #[command(subcommand)]
        command: ClutchCommand,
    },
    /// Factorization patterns of an integer polynomial modulo primes.
    Frobenius {
        #[command(subcommand)]
        command: FrobeniusCommand,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Genus, degrees, automorphisms, admissibility.
    Analyze(GraphSource),
}

#[derive(Subcommand)]
enum ClutchCommand {
    /// Rebuild each edge orbit from cosets and check it against the graph.
    Roundtrip(GraphSource),
}

#[derive(Subcommand)]
enum FrobeniusCommand {
    /// Pattern frequencies over all primes up to the bound.
    Census(PolyArgs),
    /// Two smallest unramified primes with all-even patterns.
    Witness(PolyArgs),
    /// Distinct patterns observed, and whether they force a symmetric group.
    Galois(PolyArgs),
}

#[derive(Args, Clone)]
pub struct GraphSource {
    /// Graph file (`vertices N` then `edge u v` lines).
    #[arg(conflicts_with_all = ["file", "family"])]
    pub path: Option<PathBuf>,
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// k5, circulant, double-cycle, theta-loops, kN or kA,B.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub genus: Option<usize>,
}

#[derive(Args, Clone)]
pub struct PolyArgs {
    /// Coefficients "a0,a1,...,an" or an expression such as "x^4-x-1".
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long)]
    pub bound: Option<u64>,
}

/// Completed runs map to 0 or 1; errors to 2.
pub enum Outcome {
    Success,
    NotCertified,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cap = match cli.cap {
        Some(0) => {
            eprintln!("error: the enumeration cap must be positive");
            return ExitCode::from(2);
        }
        Some(c) => c,
        None => degenera::DEFAULT_ENUMERATION_CAP,
    };
    let result = match &cli.command {
        Command::Graph { command: GraphCommand::Analyze(src) } => commands::graph_analyze(src),
        Command::Certify(src) => commands::certify(src, cap),
        Command::Clutch { command: ClutchCommand::Roundtrip(src) } => commands::clutch_roundtrip(src),
        Command::Frobenius { command } => match command {
            FrobeniusCommand::Census(p) => commands::frobenius_census(p),
            FrobeniusCommand::Witness(p) => commands::frobenius_witness(p),
            FrobeniusCommand::Galois(p) => commands::frobenius_galois(p),
        },
    };
    match result {
        Ok((report, outcome)) => {
            emit(&report, cli.format);
            match outcome {
                Outcome::Success => ExitCode::SUCCESS,
                Outcome::NotCertified => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Structured => println!("{}", serde_json::to_string_pretty(report).expect("report serializes")),
        Format::Text => print!("{}", report.text),
    }
}
