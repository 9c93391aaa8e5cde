//! `stringy` — stringy invariants of symmetric products from the command
//! line. All real work happens in `stringy_motives::cli`; this file only
//! parses flags and maps outcomes to exit codes (0 success, 1 input error,
//! 2 internal invariant violation).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use stringy_motives::cli::{self, CliCommand, Format, RunConfig};
use stringy_motives::Realization;

#[derive(Parser)]
#[command(
    name = "stringy",
    version,
    about = "Exact stringy invariants of symmetric products",
    long_about = "Computes stringy series of symmetric products, Hilbert-scheme series of \
surfaces, Euler products, and plethystic Exp/Log — all in exact rational arithmetic."
)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Output format: text, json or latex.
    #[arg(long, global = true, default_value = "text")]
    format: Format,

    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Stringy series of symmetric products up to t^ORDER.
    Series {
        /// Class of the variety in the realization's variables.
        #[arg(long)]
        poly: String,
        /// euler, poincare or hodge.
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        /// Dimension of the variety (>= 2).
        #[arg(long)]
        dim: u32,
        /// Truncation order.
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// One stringy coefficient via the partition sum, with an audit table.
    #[command(name = "stringy-n")]
    StringyN {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        /// Dimension of the variety (>= 2).
        #[arg(long)]
        dim: u32,
        /// Which symmetric product.
        #[arg(long)]
        n: u32,
    },
    /// Class of the plain symmetric product X^(n) (no stringy correction).
    Symprod {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        /// Dimension of the variety (>= 1; defaults to 1).
        #[arg(long, default_value_t = 1)]
        dim: u32,
        /// Which symmetric product.
        #[arg(long)]
        n: u32,
    },
    /// Hilbert-scheme-of-points series of a surface.
    Hilbert {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        /// Dimension; must be 2.
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Normalized stringy series (class divided by L^(d/2) first).
    Normalized {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        /// Dimension of the variety (>= 2).
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// The product over k >= 1 of (1 - t^k)^(-e).
    #[command(name = "euler-product")]
    EulerProduct {
        /// Euler number of the variety.
        #[arg(long)]
        e: i64,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Plethystic Exp of a series given as comma-separated coefficients.
    Exp {
        /// Coefficients c_0,c_1,… as canonical polynomial strings.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        coeffs: Vec<String>,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Plethystic Log of a series given as comma-separated coefficients.
    Log {
        /// Coefficients c_0,c_1,… as canonical polynomial strings.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        coeffs: Vec<String>,
        #[arg(long, default_value = "poincare")]
        realization: Realization,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Cross-validate the series formula against the partition sum on
    /// random inputs (exits 2 on any mismatch).
    Check {
        /// Dimensions to test (each >= 2).
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        dims: Vec<u32>,
        /// Random classes per dimension.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Check all coefficients up to t^MAX_N.
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// RNG seed (fixed seed ⇒ byte-identical run).
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

impl From<Command> for CliCommand {
    fn from(command: Command) -> CliCommand {
        match command {
            Command::Series {
                poly,
                realization,
                dim,
                order,
            } => CliCommand::Series {
                poly,
                realization,
                dim,
                order,
            },
            Command::StringyN {
                poly,
                realization,
                dim,
                n,
            } => CliCommand::StringyN {
                poly,
                realization,
                dim,
                n,
            },
            Command::Symprod {
                poly,
                realization,
                dim,
                n,
            } => CliCommand::SymProd {
                poly,
                realization,
                dim,
                n,
            },
            Command::Hilbert {
                poly,
                realization,
                dim,
                order,
            } => CliCommand::Hilbert {
                poly,
                realization,
                dim,
                order,
            },
            Command::Normalized {
                poly,
                realization,
                dim,
                order,
            } => CliCommand::Normalized {
                poly,
                realization,
                dim,
                order,
            },
            Command::EulerProduct { e, order } => CliCommand::EulerProduct { e, order },
            Command::Exp {
                coeffs,
                realization,
                order,
            } => CliCommand::Exp {
                coeffs,
                realization,
                order,
            },
            Command::Log {
                coeffs,
                realization,
                order,
            } => CliCommand::Log {
                coeffs,
                realization,
                order,
            },
            Command::Check {
                dims,
                count,
                max_n,
                seed,
            } => CliCommand::Check {
                dims,
                count,
                max_n,
                seed,
            },
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err) => {
            // --help/--version are successes; every other parse failure is
            // an input error (exit 1), not clap's default exit 2 — code 2 is
            // reserved for internal invariant violations.
            use clap::error::ErrorKind;
            let success = matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            );
            let _ = err.print();
            return if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };

    let config = RunConfig {
        command: args.command.into(),
        format: args.format,
    };
    match cli::run(&config) {
        Ok(outcome) => {
            if let Some(path) = &args.output {
                if let Err(err) = std::fs::write(path, &outcome.stdout) {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", outcome.stdout);
            }
            ExitCode::from(outcome.exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
