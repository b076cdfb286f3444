//! `eulerec`: compute sequences, verify the identity catalog, and benchmark
//! the recurrence solvers.
//!
//! Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error.

mod bench;
mod compute;
mod output;
mod sequences;
mod verify;

use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eulerec::identities::Params;

use sequences::Sequence;

#[derive(Parser)]
#[command(
    name = "eulerec",
    version,
    about = "Exact pentagonal-number recurrences and divisor-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence for every n up to --max-n.
    Compute {
        /// Sequence name, e.g. p, sigma, r_k, Phi_tau_r.
        sequence: Sequence,
        /// Number of squares, for r_k.
        #[arg(long)]
        k: Option<u64>,
        /// Part count or subset size, for the `_r` sequences.
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check catalog identities from their domain start to --max-n.
    Verify {
        /// A catalog key, or `all`.
        id: String,
        #[arg(long)]
        max_n: u64,
        /// Evaluate thm4b in its literal printed form.
        #[arg(long)]
        literal: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Parameter r for the `-r` entries (default 2 with `all`).
        #[arg(long)]
        r: Option<u64>,
        /// Parameter k for thm-rk and cor-rk-cong (default 3 with `all`).
        #[arg(long)]
        k: Option<u64>,
        /// Ignore the per-identity cost ceilings.
        #[arg(long)]
        no_cap: bool,
    },
    /// Time a recurrence solver against its oracle and confirm the tables agree.
    Bench {
        /// One of p, q, sigma, r_k.
        sequence: Sequence,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        max_n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Recurrence,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Worker count from `EULEREC_THREADS`, defaulting to the available parallelism.
fn thread_count() -> Result<usize, CliError> {
    let default = || std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("EULEREC_THREADS") {
        Err(_) => Ok(default()),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(0) => Ok(default()),
            Ok(n) => Ok(n),
            Err(_) => Err(CliError::Usage(format!(
                "EULEREC_THREADS must be a non-negative integer, got '{v}'"
            ))),
        },
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Compute {
            sequence,
            k,
            r,
            max_n,
            method,
            format,
        } => {
            let seq = sequence.resolve(k, r).map_err(CliError::Usage)?;
            compute::run(seq, max_n, method, format, stdout)
        }
        Command::Verify {
            id,
            max_n,
            literal,
            format,
            r,
            k,
            no_cap,
        } => {
            let params = Params { r, k, literal };
            let ids = verify::select(&id, params)?;
            let opts = verify::Options {
                max_n,
                no_cap,
                threads: thread_count()?,
            };
            verify::run(ids, &opts, format, stdout)
        }
        Command::Bench { sequence, k, max_n } => {
            let seq = sequence.resolve(k, None).map_err(CliError::Usage)?;
            bench::run(seq, max_n, stdout)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
