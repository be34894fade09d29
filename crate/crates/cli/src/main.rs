//! `chowcalc`: batch front end for the intersection-theory engine.
//!
//! Exit codes: 0 success, 1 check failure or runtime error, 2 usage error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use chowcalc::classify::PipelineOptions;
use chowcalc::verify::VerifyOptions;
use chowcalc::{Execution, Rational};
use clap::{Parser, Subcommand};

use commands::Failure;
use report::Format;

#[derive(Debug, Parser)]
#[command(name = "chowcalc", version, about = "Exact intersection theory on projectivized bundles")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest family parameter k searched by the enumeration.
    #[arg(long, global = true, default_value_t = 2)]
    k_bound: i64,
    /// Ignore external exclusion results.
    #[arg(long, global = true)]
    no_external: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[arg(long, global = true, hide = true)]
    inject_sign_flip: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Segre, d and Delta classes of a bundle.
    DClasses {
        /// Base variety: P5, Q5, KG2 or P4.
        #[arg(long)]
        base: String,
        #[arg(long)]
        rank: usize,
        /// Chern classes in generator units, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chern: Vec<i64>,
        /// Highest index printed.
        #[arg(long = "max", default_value_t = 5)]
        max: usize,
    },
    /// (-K + tau H)^power . H^hpower on P(E).
    Intersect {
        /// Base variety: P5, Q5, KG2 or P4.
        #[arg(long)]
        base: String,
        #[arg(long)]
        rank: usize,
        /// Chern classes in generator units, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chern: Vec<i64>,
        /// Rational slope, e.g. 2 or 3/2.
        #[arg(long, allow_hyphen_values = true)]
        tau: Rational,
        /// Exponent of the twisted anticanonical class.
        #[arg(long)]
        power: usize,
        /// Exponent of H; power + hpower must equal dim P(E).
        #[arg(long)]
        hpower: usize,
    },
    /// Slope polynomials, symbolic or for given Chern classes.
    SlopeSystem {
        #[arg(long, default_value = "Q5")]
        base: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 5)]
        dim_bound: usize,
        /// Numeric Chern classes in generator units; symbolic when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chern: Option<Vec<i64>>,
    },
    /// Resultant of the two slope polynomials and its factorization.
    Resultant {
        #[arg(long, default_value = "Q5")]
        base: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 5)]
        dim_bound: usize,
        /// Evaluate the resultant at this d_2 coefficient (with --b).
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<Rational>,
    },
    /// The full candidate enumeration.
    Enumerate {
        #[arg(long, default_value_t = 7)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        rho: usize,
    },
    /// Re-run every reproduction check.
    VerifyPaper {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 120)]
        samples: usize,
    },
}

fn run(cli: &Cli) -> commands::Outcome {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match &cli.command {
        Command::DClasses { base, rank, chern, max } => commands::d_classes(base, *rank, chern, *max),
        Command::Intersect {
            base,
            rank,
            chern,
            tau,
            power,
            hpower,
        } => commands::intersect(base, *rank, chern, tau, *power, *hpower),
        Command::SlopeSystem {
            base,
            rank,
            dim_bound,
            chern,
        } => commands::slope_system(base, *rank, *dim_bound, chern.as_deref()),
        Command::Resultant {
            base,
            rank,
            dim_bound,
            a,
            b,
        } => commands::resultant(base, *rank, *dim_bound, a.clone().zip(b.clone())),
        Command::Enumerate { dim, rho } => commands::enumerate(
            *dim,
            *rho,
            PipelineOptions {
                k_bound: cli.k_bound,
                external_exclusions: !cli.no_external,
                exec,
            },
        ),
        Command::VerifyPaper { seed, samples } => commands::verify_paper(VerifyOptions {
            seed: *seed,
            samples: *samples,
            k_bound: cli.k_bound,
            exec,
            flip_grothendieck: cli.inject_sign_flip,
        }),
    }
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
    match run(&cli) {
        Ok(report) => {
            let text = report.render(cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            if report.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
