//! The `equisig` binary: exact representation-ring computations, prime
//! ideals and localization, induction certificates, fixed-point
//! signatures, lens-space classification, Dedekind sums, and a
//! self-test battery.
//!
//! Every result is exact; an optional flag adds decimal renderings for
//! human readers.  Exit status is 0 exactly when all requested
//! verifications pass; malformed inputs exit 2 with the offending JSON
//! path.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::Value;

use equisig::commands::{self, CommandOutput, RingOp};
use equisig::error::CliError;
use equisig::report::{sha256_hex, RunReport};

#[derive(Parser)]
#[command(
    name = "equisig",
    version,
    about = "Exact equivariant signature computations for finite abelian group actions"
)]
struct Cli {
    /// Write the machine-readable run report to this file.
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,

    /// Add decimal approximations for human readers (results stay
    /// exact).
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Representation-ring operations on serialized inputs.
    Ring {
        #[arg(value_enum)]
        op: RingOp,
        /// JSON input file.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Group element as comma-joined residues, e.g. "1,0".
        #[arg(long, value_name = "g1,g2,...")]
        element: Option<String>,
    },
    /// Describe a prime ideal: support, descent certificate, spot
    /// checks.
    Prime {
        /// JSON input file (at least {"group": [...]}).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Prime as "g1,g2,...;p", overriding the file's element and
        /// characteristic.
        #[arg(long, value_name = "g;p")]
        prime: Option<String>,
    },
    /// Compute and verify the cyclic induction certificate of a group.
    Artin {
        /// JSON input file ({"group": [...]}).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
    /// Signature of a group element from fixed-point data.
    Gsign {
        /// JSON fixed-point data file.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Group element as comma-joined residues.
        #[arg(long, value_name = "g1,g2,...")]
        element: String,
    },
    /// Decompose the localized signature class at a prime.
    Localize {
        /// JSON fixed-point data file.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Prime as "g1,g2,...;p".
        #[arg(long, value_name = "g;p")]
        prime: String,
        /// Optional evaluation element for per-orbit pairings.
        #[arg(long, value_name = "g1,g2,...")]
        element: Option<String>,
    },
    /// Lens spaces: pair search, comparison, or rho vectors.
    Lens {
        /// JSON request file ({"search": ...}, {"compare": ...}, or
        /// {"rho": ...}).
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
    /// The exact Dedekind sum s(q, n) with its reciprocity check.
    Dedekind { q: u64, n: u64 },
    /// Run the built-in exact verification battery.
    Selftest {
        /// Truncation depth for the series identity checks.
        #[arg(long, default_value_t = 4, value_name = "D")]
        truncation: u32,
    },
}

fn read_input(path: &PathBuf) -> Result<(Value, String), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|source| CliError::Io { path: path.clone(), source })?;
    let digest = sha256_hex(&bytes);
    let value: Value = serde_json::from_slice(&bytes).map_err(|e| CliError::Json {
        path: path.clone(),
        message: e.to_string(),
    })?;
    Ok((value, digest))
}

fn dispatch(cli: &Cli) -> Result<(Option<String>, CommandOutput), CliError> {
    let decimal = cli.decimal;
    match &cli.cmd {
        Cmd::Ring { op, input, element } => {
            let (value, digest) = read_input(input)?;
            let out = commands::ring(*op, &value, element.as_deref(), decimal)?;
            Ok((Some(digest), out))
        }
        Cmd::Prime { input, prime } => {
            let (value, digest) = read_input(input)?;
            let out = commands::prime(&value, prime.as_deref())?;
            Ok((Some(digest), out))
        }
        Cmd::Artin { input } => {
            let (value, digest) = read_input(input)?;
            let out = commands::artin(&value)?;
            Ok((Some(digest), out))
        }
        Cmd::Gsign { input, element } => {
            let (value, digest) = read_input(input)?;
            let out = commands::gsign(&value, element, decimal)?;
            Ok((Some(digest), out))
        }
        Cmd::Localize { input, prime, element } => {
            let (value, digest) = read_input(input)?;
            let out = commands::localize(&value, prime, element.as_deref(), decimal)?;
            Ok((Some(digest), out))
        }
        Cmd::Lens { input } => {
            let (value, digest) = read_input(input)?;
            let out = commands::lens(&value, decimal)?;
            Ok((Some(digest), out))
        }
        Cmd::Dedekind { q, n } => Ok((None, commands::dedekind(*q, *n, decimal)?)),
        Cmd::Selftest { truncation } => Ok((None, commands::selftest(*truncation)?)),
    }
}

fn run() -> i32 {
    let cli = Cli::parse();
    let started = Instant::now();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(&cli) {
        Ok((digest, out)) => {
            for line in &out.human {
                println!("{line}");
            }
            let report = RunReport::new(echo, digest, out.results);
            if let Some(path) = &cli.json {
                if let Err(e) = report.write_to(path) {
                    eprintln!("error: {e}");
                    return e.exit_code();
                }
            }
            let elapsed = started.elapsed();
            eprintln!("completed in {}.{:03} s", elapsed.as_secs(), elapsed.subsec_millis());
            match out.failure {
                None => 0,
                Some(msg) => {
                    eprintln!("error: verification failed: {msg}");
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run());
}
