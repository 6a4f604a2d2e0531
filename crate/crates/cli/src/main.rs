//! `hypercc`: clustering coefficients, motif censuses and dataset statistics
//! for hypergraph datasets.

mod commands;
mod render;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypercc::{Definition, Induction};

/// Exit status for malformed or unreadable input.
const EXIT_PARSE: u8 = 3;
/// Exit status for failures after the input was read.
const EXIT_COMPUTE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "hypercc", version, about = "Local clustering coefficients for hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print machine-readable JSON instead of text/CSV.
    #[arg(long, global = true)]
    json: bool,

    /// Directory to write result files into (created if missing).
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Worker threads; 1 runs every kernel sequentially.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<NonZeroUsize>,

    /// Use the brute-force reference implementations (small inputs only).
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Node, hyperedge and incidence counts with preprocessing provenance.
    Stats(InputArgs),
    /// Per-node clustering coefficients and their averages.
    Cc {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        only: OnlyArg,
    },
    /// Order-3 motif census.
    Motifs {
        #[command(flatten)]
        input: InputArgs,
        /// Which hyperedges shape a node triple.
        #[arg(long, value_enum, default_value_t = InductionArg::Subset)]
        motif_induction: InductionArg,
    },
    /// Pearson correlations of each definition with the proposed one.
    Correlate(InputArgs),
    /// Histograms of the coefficients over [0, 1].
    Hist {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        only: OnlyArg,
        /// Number of equal-width bins.
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        bins: u32,
    },
    /// Coefficients of the seven rooted three-node motifs.
    Table1,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Hyperedge-list file, or a simplex dataset given as a directory,
    /// `<dir>/<name>` prefix, or `<name>-nverts.txt` file.
    input: PathBuf,

    /// Input format; guessed from the path when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Drop size-1 hyperedges before deduplication.
    #[arg(long)]
    drop_singletons: bool,

    /// Keep every connected component.
    #[arg(long)]
    no_lcc: bool,
}

#[derive(Args, Debug)]
struct OnlyArg {
    /// Comma-separated subset of proposed, opsahl, zhou, baseline.
    #[arg(long, value_enum, value_delimiter = ',', value_name = "DEFS")]
    only: Vec<DefinitionArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Benson,
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum InductionArg {
    Subset,
    Intersect,
}

impl From<InductionArg> for Induction {
    fn from(a: InductionArg) -> Self {
        match a {
            InductionArg::Subset => Induction::Subset,
            InductionArg::Intersect => Induction::Intersect,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DefinitionArg {
    Proposed,
    Opsahl,
    Zhou,
    Baseline,
}

impl From<DefinitionArg> for Definition {
    fn from(a: DefinitionArg) -> Self {
        match a {
            DefinitionArg::Proposed => Definition::Proposed,
            DefinitionArg::Opsahl => Definition::Opsahl,
            DefinitionArg::Zhou => Definition::Zhou,
            DefinitionArg::Baseline => Definition::Baseline,
        }
    }
}

/// A failure with its process exit status.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn compute(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_COMPUTE,
            message: message.into(),
        }
    }
}

impl From<hypercc::Error> for Failure {
    fn from(e: hypercc::Error) -> Self {
        Failure {
            code: if e.is_input_error() { EXIT_PARSE } else { EXIT_COMPUTE },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::compute(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::compute(format!("serialization failed: {e}"))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.get()).build() {
            Ok(pool) => pool.install(|| commands::run(&cli)),
            Err(e) => Err(Failure::compute(format!("cannot start thread pool: {e}"))),
        },
        None => commands::run(&cli),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hypercc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
