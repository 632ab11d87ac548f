//! `phfe`: entropy, distance and TOPSIS computations on PHFEs, reproduction
//! of the published tables, and randomized axiom checks.
//!
//! Exit codes: 0 success, 1 property or acceptance failure, 2 usage or
//! parse error.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use format::Format;

#[derive(Debug, Parser)]
#[command(name = "phfe", version, about = "Entropy measures for probabilistic hesitant fuzzy elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Comprehensive entropy configuration, e.g. `r1:f1:max` or `r2:f3:psum`.
    #[arg(long, default_value = "r1:f1:max")]
    config: String,
    /// Distance generator: id, sq, harm or exp.
    #[arg(long, default_value = "id")]
    psi: String,
    /// Exponent of the R1 kernel (r >= 1).
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate uncertainty measures on a list of PHFEs.
    Entropy {
        /// JSON file with one cell or an array of cells; `-` reads stdin.
        #[arg(long)]
        input: PathBuf,
        /// Measure ids; repeat or separate with commas.
        #[arg(long, value_delimiter = ',', default_value = "r1:f1:max")]
        measure: Vec<String>,
        /// Exponent of the R1 kernel (r >= 1).
        #[arg(long)]
        r: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Pairwise entropy-based distances between PHFEs.
    Distance {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Entropy-weighted TOPSIS on a decision matrix.
    Topsis {
        /// Decision matrix JSON; `-` reads stdin.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute the published tables and compare with the printed values.
    Reproduce {
        /// Treat report-only mismatches as failures.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the seeded randomized axiom suites.
    Axioms {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Inject a fault to confirm the suites can fail.
        #[arg(long, value_parser = ["complement"])]
        mutate: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

pub enum Failure {
    /// Bad flags or unreadable input.
    Usage(String),
    /// A check ran and failed; the report was already printed.
    Checks,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Entropy {
            input,
            measure,
            r,
            common,
        } => commands::entropy(&input, &measure, r, common.format),
        Command::Distance {
            input,
            config,
            common,
        } => commands::distance(&input, &config.config, &config.psi, config.r, common.format),
        Command::Topsis {
            input,
            config,
            common,
        } => commands::topsis(&input, &config.config, &config.psi, config.r, common.format),
        Command::Reproduce { strict, common } => commands::reproduce(strict, common.format),
        Command::Axioms {
            seed,
            samples,
            mutate,
            common,
        } => commands::axioms(seed, samples, mutate.as_deref(), common.format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
