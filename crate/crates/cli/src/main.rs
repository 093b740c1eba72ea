//! `szlab`: Wiener/Szeged index computations from the command line.

mod input;
mod output;

use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::{parse_range, GraphSource};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  I/O or internal error
  2  malformed input or invalid arguments
  3  input graph is disconnected
  4  a hypothesis of the requested check is violated (named on stderr)
  5  request exceeds a built-in size limit
  6  verification found a graph below the bound";

#[derive(Debug, Parser)]
#[command(name = "szlab", version, about = "Szeged and Wiener index laboratory for bipartite graphs", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel stages (default: all cores)
    #[arg(long, global = true, env = "SZLAB_WORKERS", value_name = "N")]
    workers: Option<usize>,
    /// Output format (default: json; human for extremal)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// More detail: per-pair rows for decompose, timings for enumerate
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// W, Sz, Sz* and per-edge partitions of one connected graph
    Compute(GraphSource),
    /// Split Sz − W into block-level parts and check each lower bound
    Decompose(GraphSource),
    /// Check Sz − W ≥ 4n − 8 on a graph6 stream (file or stdin)
    Verify {
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Generate every connected bipartite class and verify the bound
    Enumerate {
        /// Vertex counts, e.g. 4..8 or 6
        #[arg(long = "n", value_name = "A..B", value_parser = parse_range)]
        range: (usize, usize),
        /// Edge floor (default: n)
        #[arg(long, value_name = "M")]
        min_edges: Option<usize>,
        /// Print the generated graph6 records instead of reports
        #[arg(long)]
        list: bool,
    },
    /// Members of the extremal family (4-cycle with a hanging tree)
    Extremal {
        #[arg(long = "n", value_name = "A..B", value_parser = parse_range)]
        range: (usize, usize),
    },
    /// Canonical graph6 code of one graph
    Canon(GraphSource),
}

/// An error with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn io(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }

    pub fn violation(message: impl Into<String>) -> Self {
        Failure {
            code: 6,
            message: message.into(),
        }
    }
}

impl From<szlab::Error> for Failure {
    fn from(e: szlab::Error) -> Self {
        use szlab::Error::*;
        let code = match &e {
            VertexOutOfRange { .. }
            | Loop(_)
            | NotAnEdge(..)
            | SamePairVertex(_)
            | Graph6(_)
            | EdgeList(_)
            | InvalidArgument(_) => 2,
            Disconnected => 3,
            Hypothesis(_) => 4,
            OverLimit { .. } => 5,
            Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Failure::usage("--workers must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Failure {
                code: 1,
                message: e.to_string(),
            })?;
    }
    let format = cli.format;
    let out = &mut io::stdout().lock();
    match &cli.command {
        Command::Compute(src) => output::compute(out, &src.read()?, format.unwrap_or(Format::Json)),
        Command::Decompose(src) => output::decompose(out, &src.read()?, format.unwrap_or(Format::Json), cli.verbose),
        Command::Verify { file } => {
            let stream = input::open_stream(file.as_ref())?;
            output::verify(out, stream, format.unwrap_or(Format::Json))
        }
        Command::Enumerate { range, min_edges, list } => output::enumerate(
            out,
            *range,
            *min_edges,
            *list,
            format.unwrap_or(Format::Json),
            cli.verbose,
        ),
        Command::Extremal { range } => output::extremal(out, *range, format.unwrap_or(Format::Human)),
        Command::Canon(src) => output::canon(out, &src.read()?, format.unwrap_or(Format::Json)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("szlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
