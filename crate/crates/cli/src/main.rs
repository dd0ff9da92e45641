//! `centrex`: command-line front end.
//!
//! Exit codes: 0 success, 1 a checked expectation failed, 2 bad input or an
//! unmet precondition. Errors are reported on stderr as a single line
//! `error[<kind>]: <message>`.

mod commands;
mod field;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use centrex::Error;

#[derive(Parser)]
#[command(
    name = "centrex",
    version,
    about = "Central extensions of finite-dimensional algebras, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Property checks on an extension.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Quotient of an extension by its relative commutator.
    Centralise(CentraliseArgs),
    /// Universal central extension of a perfect algebra.
    Uce(UceArgs),
    /// Dimension of the second homology of a perfect algebra.
    H2(AlgebraVarietyArgs),
    /// Whether an algebra equals its verbal subobject.
    Perfect(PerfectArgs),
    /// Reproduces the bundled non-associative counterexample and the Prüfer module checks.
    PaperExamples,
    /// Random search for composites of central extensions that fail to be central.
    SearchUceViolation(SearchArgs),
    /// Compares Leibniz and Lie universal central extensions of a perfect Lie algebra.
    NestedCompare(NestedArgs),
    /// Finitary checks on the Prüfer module.
    Pruefer(PrueferArgs),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// CENTRAL or NOT-CENTRAL, with the dimension of the relative commutator.
    Central(CentralArgs),
}

#[derive(Args)]
struct CentralArgs {
    /// Morphism file of the extension.
    #[arg(long)]
    ext: PathBuf,
    /// Coefficient variety: a built-in name or `;`-separated laws.
    #[arg(long)]
    coeff: String,
}

#[derive(Args)]
struct CentraliseArgs {
    #[arg(long)]
    ext: PathBuf,
    #[arg(long)]
    coeff: String,
    /// Output morphism file; the algebras are written beside it.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AlgebraVarietyArgs {
    #[arg(long)]
    algebra: PathBuf,
    /// Defaults to the variety declared in the algebra file.
    #[arg(long)]
    variety: Option<String>,
}

#[derive(Args)]
struct UceArgs {
    #[command(flatten)]
    input: AlgebraVarietyArgs,
    /// Write `u : U → A` as a morphism file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PerfectArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    coeff: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    ambient: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Largest dimension of the perfect middle object.
    #[arg(long = "dim", default_value_t = 6)]
    dim_bound: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `Q` or a prime below 50.
    #[arg(long, default_value = "Q")]
    field: String,
    /// Prepend the bundled non-associative counterexample as trial 0.
    #[arg(long = "inject-paper")]
    inject_counterexample: bool,
    /// Write the violations as JSON for replay.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NestedArgs {
    #[arg(long)]
    algebra: PathBuf,
}

#[derive(Args)]
struct PrueferArgs {
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long = "k-max", default_value_t = 6)]
    k_max: u32,
}

/// Text produced by a command and whether all of its expectations held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn run(cli: Cli) -> centrex::Result<Outcome> {
    match cli.command {
        Command::Check {
            check: CheckCommand::Central(a),
        } => commands::check_central(&a.ext, &a.coeff),
        Command::Centralise(a) => commands::centralise(&a.ext, &a.coeff, &a.out),
        Command::Uce(a) => commands::uce(&a.input.algebra, a.input.variety.as_deref(), a.out.as_deref()),
        Command::H2(a) => commands::h2(&a.algebra, a.variety.as_deref()),
        Command::Perfect(a) => commands::perfect(&a.algebra, &a.coeff),
        Command::PaperExamples => commands::paper_examples(),
        Command::SearchUceViolation(a) => commands::search(
            &a.ambient,
            &a.field,
            centrex::uce::SearchConfig {
                trials: a.trials,
                dim_bound: a.dim_bound,
                seed: a.seed,
                inject_counterexample: a.inject_counterexample,
            },
            a.out.as_deref(),
        ),
        Command::NestedCompare(a) => commands::nested(&a.algebra),
        Command::Pruefer(a) => commands::pruefer(a.p, a.k_max),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Assertion(_) => "assertion",
        Error::UceViolation(_) => "uce-violation",
        Error::NotPerfect(_) => "not-perfect",
        Error::NotCentral(_) => "not-central",
        Error::LawViolation(_) => "law-violation",
        Error::Parse { .. } | Error::Json(_) | Error::Format(_) | Error::Scalar(_) => "parse",
        Error::Io(_) => "io",
        Error::FieldMismatch(..) | Error::UnsupportedField(_) => "field",
        Error::NotMorphism { .. } => "not-morphism",
        Error::NotSurjective { .. } => "not-surjective",
        Error::InvalidPrime(_) | Error::PrimeMismatch { .. } => "prime",
        _ => "precondition",
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Assertion(_) | Error::UceViolation(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.text.as_bytes());
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            eprintln!("error[{}]: {}", error_kind(&e), message);
            ExitCode::from(exit_code(&e))
        }
    }
}
