//! `nfe` — golden-ratio sequence toolkit.
//!
//! Subcommands: `table` (powers of φ in negaFibonacci form), `eval`
//! (closed-form evaluation, exact or complex), `solve` (coefficients from
//! initial values), `verify` (numerical verification suites), and
//! `spiral` (golden-spiral geometry as CSV or SVG).

mod eval;
mod format;
mod solve;
mod spiral;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use format::OutputFormat;

#[derive(Parser)]
#[command(
    name = "nfe",
    version,
    about = "Golden-ratio sequence toolkit: exact arithmetic in Q(sqrt 5), \
             sequences with the subtractive recurrence w(n) = w(n-2) - w(n-1), \
             their complex closed form, and golden-spiral geometry"
)]
struct Cli {
    /// Output format: text, csv or json (spiral: csv or svg)
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print phi powers in negaFibonacci form for positions min..=max
    Table {
        /// First sequence position (phi exponent is 1 - n)
        #[arg(long, default_value_t = -8, allow_negative_numbers = true)]
        min: i64,
        /// Last sequence position
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        max: i64,
    },
    /// Evaluate the closed form: exact for integer n, complex otherwise
    Eval {
        /// Coefficient eta: golden literal like "-3/2 + 2*phi", or "a+bi"
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        /// Coefficient gamma, same grammar as --eta
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Argument n: integer for the exact path, or "a+bi"
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Derive the coefficients (eta, gamma) from two initial values
    Solve {
        /// First term, golden literal
        #[arg(long, allow_hyphen_values = true)]
        omega1: String,
        /// Second term, golden literal
        #[arg(long, allow_hyphen_values = true)]
        omega2: String,
    },
    /// Run verification suites; exits nonzero when any check fails
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Real-axis range as lo:hi (default -8:8; binet: -70:70)
        #[arg(long, value_parser = format::parse_range, allow_hyphen_values = true)]
        re_range: Option<(f64, f64)>,
        /// Imaginary-axis range as lo:hi (default -2:2)
        #[arg(long, value_parser = format::parse_range, allow_hyphen_values = true)]
        im_range: Option<(f64, f64)>,
        /// Grid step along both axes
        #[arg(long, default_value_t = 0.5)]
        step: f64,
        /// Relative tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Emit golden-spiral geometry (csv by default, or svg)
    Spiral {
        /// Number of quarter-turn segments
        #[arg(long)]
        segments: u32,
        /// Polyline samples per arc
        #[arg(long, default_value_t = 32)]
        points_per_arc: usize,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Table { min, max } => {
            print!("{}", table::run(min, max, cli.format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { eta, gamma, n } => {
            print!("{}", eval::run(&eta, &gamma, &n, cli.format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { omega1, omega2 } => {
            let (output, consistent) = solve::run(&omega1, &omega2, cli.format)?;
            print!("{output}");
            Ok(if consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Verify {
            suite,
            re_range,
            im_range,
            step,
            tol,
        } => {
            let grid = verify::GridArgs {
                re_range,
                im_range,
                step,
                tol,
            };
            let (output, passed) = verify::run(suite, grid, cli.format)?;
            print!("{output}");
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Spiral {
            segments,
            points_per_arc,
            out,
        } => {
            if let Some(content) = spiral::run(segments, points_per_arc, cli.format, out.as_deref())? {
                print!("{content}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
