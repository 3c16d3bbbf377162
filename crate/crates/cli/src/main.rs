//! `posetprob`: exact probabilities that one element of a finite poset
//! precedes another in a uniformly random linear extension.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use commands::{Engine, ExtensionQuery};
use input::{Element, Input};
use render::{Format, Renderer};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("bad poset file: {0}")]
    PosetFile(String),

    #[error(transparent)]
    Domain(#[from] posetprob::Error),

    #[error("engine {engine} does not apply: {reason}")]
    EngineNotApplicable { engine: &'static str, reason: String },

    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } | CliError::PosetFile(_) => 2,
            CliError::Domain(_) | CliError::EngineNotApplicable { .. } => 3,
        }
    }
}

#[derive(Parser)]
#[command(name = "posetprob", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Print decimals instead of exact fractions.
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Partition whose cell poset to use, e.g. `4,3,3`.
    #[arg(long, value_name = "PARTS")]
    partition: Option<String>,

    /// Poset file: `n` then one `u v` cover per line, or JSON.
    #[arg(long, value_name = "FILE")]
    poset: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Input, CliError> {
        Input::load(self.partition.as_deref(), self.poset.as_deref())
    }
}

#[derive(Args)]
struct Pair {
    /// First element: a label for posets, a cell `r,c` for partitions.
    #[arg(long)]
    alpha: String,

    /// Second element.
    #[arg(long)]
    beta: String,

    /// Read cells as 0-based.
    #[arg(long)]
    zero_indexed: bool,
}

impl Pair {
    fn resolve(&self, input: &Input) -> Result<(Element, Element), CliError> {
        Ok((
            input.element(&self.alpha, self.zero_indexed)?,
            input.element(&self.beta, self.zero_indexed)?,
        ))
    }
}

#[derive(Subcommand)]
enum Command {
    /// P(alpha < beta) in a uniformly random linear extension.
    Probability {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
    /// Blocking ideals of an incomparable pair.
    Blocking {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        pair: Pair,
    },
    /// The incomparable pair whose probability is closest to 1/2.
    Scan {
        #[command(flatten)]
        source: Source,
        /// Also list P(x < y) for every incomparable pair.
        #[arg(long)]
        all_pairs: bool,
    },
    /// Tables for two-row shapes.
    Table {
        #[command(subcommand)]
        kind: TableKind,
    },
    /// Cross-check the engines against each other.
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
    },
    /// List or count linear extensions.
    Extensions {
        #[command(flatten)]
        source: Source,
        /// Keep only extensions with this element before --beta.
        #[arg(long, requires = "beta")]
        alpha: Option<String>,
        #[arg(long, requires = "alpha")]
        beta: Option<String>,
        #[arg(long)]
        zero_indexed: bool,
        /// Print only the number of extensions.
        #[arg(long)]
        count: bool,
        /// Stop after this many extensions.
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Subcommand)]
enum TableKind {
    /// Limits for b = 1 and a = 2..=amax.
    LimitB1 {
        #[arg(long, default_value_t = 10)]
        amax: usize,
    },
    /// Limits for a = 2..=amax, one row per a with b = 1..a-1.
    LimitMatrix {
        #[arg(long, default_value_t = 10)]
        amax: usize,
    },
    /// P((1,a) < (2,b)) for lambda = (a+i, a+j), lower triangle.
    FiniteMatrix { a: usize, b: usize, size: usize },
}

#[derive(Subcommand)]
enum VerifyScope {
    /// Every poset up to isomorphism.
    SmallPosets {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Every partition and skew shape up to a weight.
    Partitions {
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
    },
    /// Every two-row shape up to a total size.
    TwoRow {
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let r = Renderer {
        format: cli.format,
        float: cli.float,
    };
    let limits = input::limits()?;
    match cli.command {
        Command::Probability { source, pair, engine } => {
            let input = source.load()?;
            let (a, b) = pair.resolve(&input)?;
            commands::probability(&input, a, b, engine, &limits, r)
        }
        Command::Blocking { source, pair } => {
            let input = source.load()?;
            let (a, b) = pair.resolve(&input)?;
            commands::blocking(&input, a, b, r)
        }
        Command::Scan { source, all_pairs } => commands::scan(&source.load()?, all_pairs, &limits, r),
        Command::Table { kind } => match kind {
            TableKind::LimitB1 { amax } => commands::table_limit_b1(amax, r),
            TableKind::LimitMatrix { amax } => commands::table_limit_matrix(amax, r),
            TableKind::FiniteMatrix { a, b, size } => commands::table_finite_matrix(a, b, size, r),
        },
        Command::Verify { scope } => {
            let (name, n) = match scope {
                VerifyScope::SmallPosets { max_size } => ("small-posets", commands::verify_small_posets(max_size, &limits)?),
                VerifyScope::Partitions { max_weight } => ("partitions", commands::verify_partitions(max_weight, &limits)?),
                VerifyScope::TwoRow { max } => ("two-row", commands::verify_two_row(max, &limits)?),
            };
            Ok(commands::verify_report(name, n, r))
        }
        Command::Extensions {
            source,
            alpha,
            beta,
            zero_indexed,
            count,
            limit,
        } => {
            let input = source.load()?;
            let pair = match (alpha, beta) {
                (Some(a), Some(b)) => Some((input.element(&a, zero_indexed)?, input.element(&b, zero_indexed)?)),
                _ => None,
            };
            let q = ExtensionQuery {
                pair,
                count_only: count,
                limit,
            };
            commands::extensions(&input, &q, &limits, r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("posetprob: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
