//! Command-line front end: reads a category description, runs one check and
//! prints a report.
//!
//! Exit codes: 0 pass (or vacuous pass), 1 fail with a counterexample,
//! 2 usage or parse error, 3 resource guard.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fincat::dsl::DslError;
use fincat::error::{GalleryError, VerifyError};
use serde::Serialize;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(
    name = "fincat",
    version,
    about = "Decide products, coproducts and biproducts in finite categories"
)]
struct Cli {
    /// Print the report as JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Category description; `-` reads standard input.
    pub file: PathBuf,
    /// Derive missing composites when the derivation is unambiguous.
    #[arg(long)]
    pub free_compose: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the category axioms (and the addition tables, if any).
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Report which morphisms are constant, coconstant, zero or invertible.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        morphism: Option<String>,
    },
    /// Look for a zero morphism in every homset.
    Zeros {
        #[command(flatten)]
        input: Input,
    },
    /// All products of a pair, in search order.
    Products {
        #[command(flatten)]
        input: Input,
        /// Two object names, `A,B`.
        #[arg(long, value_parser = parse_pair)]
        pair: (String, String),
    },
    /// All coproducts of a pair, in search order.
    Coproducts {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_pair)]
        pair: (String, String),
    },
    /// Biproducts of one pair (fails when there is none) or of all pairs.
    Biproducts {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_pair, required_unless_present = "all_pairs")]
        pair: Option<(String, String)>,
        #[arg(long, conflicts_with = "pair")]
        all_pairs: bool,
        /// Also run the brute-force enumeration of all 5-tuples and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a witness declared in the file against one definition.
    CheckWitness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        witness: String,
        #[arg(long, value_enum, default_value_t = Definition::New)]
        definition: Definition,
    },
    /// Check one of the structural results; exhaustive unless witnesses are named.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Witness declared in the file; repeat for theorems that take two.
        #[arg(long)]
        witness: Vec<String>,
        /// `f: A -> C` for sum-eq-prod.
        #[arg(long)]
        f: Option<String>,
        /// `g: B -> D` for sum-eq-prod.
        #[arg(long)]
        g: Option<String>,
    },
    /// Build an example category and optionally write it out.
    Gallery {
        /// finset, pointed, preorder, ab, semigroup, con, random, or a
        /// standard gallery entry such as indiscrete-2.
        name: String,
        #[arg(long)]
        max_size: Option<usize>,
        /// Preorder shape: chain, discrete, indiscrete, diamond, cluster.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        size: Option<usize>,
        /// Elementary abelian 2-groups up to this rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Abelian groups as cyclic factors, e.g. `2x2,3`.
        #[arg(long)]
        groups: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Builder parameters as JSON, inline or a file path.
        #[arg(long)]
        spec: Option<String>,
        /// Write the category in the text format.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Definition {
    /// Products, coproducts, retractions and commuting idempotents.
    New,
    /// Products, coproducts, retractions and zero cross-composites.
    Zero,
    /// Addition-based definition; needs `cmon` blocks.
    Cmon,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Theorem {
    Lemma,
    Corollary,
    Uniqueness,
    Nary,
    SumEqProd,
    Ambiadjunction,
}

fn parse_pair(s: &str) -> Result<(String, String), String> {
    match s.split_once(',') {
        Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => {
            Ok((a.trim().to_string(), b.trim().to_string()))
        }
        _ => Err(format!("expected two object names `A,B`, got `{s}`")),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: DslError },
    #[error(transparent)]
    Gallery(#[from] GalleryError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("resource guard: {0}")]
    Guard(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let guard = match self {
            CliError::Parse { source, .. } => source.is_resource_guard(),
            CliError::Gallery(e) => e.is_resource_guard(),
            CliError::Guard(_) => true,
            _ => false,
        };
        if guard {
            3
        } else {
            2
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            _ if self.exit_code() == 3 => "resource_guard",
            CliError::Usage(_) | CliError::Io { .. } => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Gallery(_) => "gallery",
            CliError::Verify(_) => "precondition",
            CliError::Guard(_) => "resource_guard",
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    schema_version: u32,
    command: &'a [String],
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    match commands::run(&cli.command, command.clone()) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                let body = ErrorReport {
                    schema_version: fincat::report::SCHEMA_VERSION,
                    command: &command,
                    error: ErrorBody {
                        kind: e.kind(),
                        message: e.to_string(),
                    },
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&body).expect("serializable")
                );
            }
            ExitCode::from(e.exit_code())
        }
    }
}
