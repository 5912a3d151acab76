//! `nilsplit` command-line front end.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::CliError;

#[derive(Parser)]
#[command(name = "nilsplit", version, about = "Exact nilpotent, sl(2) and P^1 bundle computations")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting type of a bundle given by its transition matrix.
    SplittingType {
        #[arg(long)]
        input: PathBuf,
    },
    /// Factor a transition as T+(z)·diag(z^a)·T-(1/z).
    BirkhoffFactorize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension of global sections of E(n).
    H0 {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
    },
    /// Kernel filtration, partition and Jordan chains.
    NilpotentAnalyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Orbit closure of a vector under exp(tA).
    OrbitCurve {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated rationals or a JSON array.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Complementarity and refinement of an ascending/descending flag pair.
    FlagsCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Complete a nilpotent to an sl(2)-triple.
    Sl2Complete {
        #[arg(long)]
        input: PathBuf,
    },
    /// Flags and projection of a nilpotent pair generating sl(2).
    Sl2Projection {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        lowering: PathBuf,
    },
    /// Decompose U_m ⊗ U_n.
    ClebschGordan {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Recognize weights as U_n ⊗ O(m).
    IdentifyIrrep {
        /// Comma-separated integer weights.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// A neutral element whose eigenvalues are the weights.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Normal bundle of the degree-n rational normal curve.
    VeroneseNormal {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Closure, structure and representation data of a matrix Lie algebra.
    LieAnalyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zeros of the vector field induced by A on projective space.
    FieldZeros {
        #[arg(long)]
        input: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::SplittingType { .. } => "splitting-type",
            Command::BirkhoffFactorize { .. } => "birkhoff-factorize",
            Command::H0 { .. } => "h0",
            Command::NilpotentAnalyze { .. } => "nilpotent-analyze",
            Command::OrbitCurve { .. } => "orbit-curve",
            Command::FlagsCheck { .. } => "flags-check",
            Command::Sl2Complete { .. } => "sl2-complete",
            Command::Sl2Projection { .. } => "sl2-projection",
            Command::ClebschGordan { .. } => "clebsch-gordan",
            Command::IdentifyIrrep { .. } => "identify-irrep",
            Command::VeroneseNormal { .. } => "veronese-normal",
            Command::LieAnalyze { .. } => "lie-analyze",
            Command::FieldZeros { .. } => "field-zeros",
        }
    }

    fn run(&self) -> Result<report::Report, CliError> {
        match self {
            Command::SplittingType { input } => commands::splitting_type_cmd(input),
            Command::BirkhoffFactorize { input } => commands::birkhoff_cmd(input),
            Command::H0 { input, n } => commands::h0_cmd(input, *n),
            Command::NilpotentAnalyze { input } => commands::nilpotent_cmd(input),
            Command::OrbitCurve { input, vector } => commands::orbit_cmd(input, vector),
            Command::FlagsCheck { input } => commands::flags_cmd(input),
            Command::Sl2Complete { input } => commands::sl2_complete_cmd(input),
            Command::Sl2Projection { input, lowering } => commands::sl2_projection_cmd(input, lowering),
            Command::ClebschGordan { m, n } => commands::clebsch_cmd(*m, *n),
            Command::IdentifyIrrep { weights, input } => {
                commands::identify_cmd(weights.as_deref(), input.as_deref())
            }
            Command::VeroneseNormal { n } => commands::veronese_cmd(*n),
            Command::LieAnalyze { input, seed } => commands::lie_cmd(input, *seed),
            Command::FieldZeros { input } => commands::field_zeros_cmd(input),
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command.run() {
        Ok(report) => {
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            emit(&text);
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("check failed: {}", c.name);
            }
            ExitCode::from(if report.all_passed() { 0 } else { 1 })
        }
        Err(err) => {
            let name = match &err {
                CliError::Domain(e) => e.name(),
                _ => "ParseError",
            };
            eprintln!("error: {name}: {err}");
            if cli.json {
                let body = json!({
                    "command": cli.command.name(),
                    "error": { "name": name, "message": err.to_string() },
                });
                emit(&(serde_json::to_string_pretty(&body).expect("plain JSON") + "\n"));
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
