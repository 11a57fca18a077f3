//! `toricarr`: invariants of central toric arrangements from the command line.

mod commands;
mod error;
mod input;
mod report;
mod reproduce;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Coefficients, Limits};
use error::CliResult;
use input::MatrixInput;
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "toricarr", version, about = "Exact invariants of central toric arrangements")]
struct Cli {
    /// Lift the subset and generator guards.
    #[arg(long, global = true)]
    force: bool,

    /// Largest number of column subsets to enumerate.
    #[arg(long, global = true, value_name = "K", default_value_t = 1 << 20)]
    max_subsets: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, multiplicity and module tables, arithmetic Tutte and Poincare polynomials.
    Matroid {
        /// Matrix file, or a built-in name such as @N or @A(7,1).
        matrix: String,
    },
    /// Poset of layers: rank profile and size.
    Layers {
        matrix: String,
        /// Write the Hasse diagram in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Decide whether two posets of layers are isomorphic.
    PosetCompare { first: String, second: String },
    /// Graded dimensions of the cohomology ring.
    Cohomology {
        matrix: String,
        #[arg(long, value_enum, default_value_t = Coefficients::Q)]
        over: Coefficients,
        /// Divide by the ideal generated by the torus classes.
        #[arg(long)]
        quotient_torus: bool,
        /// Rank of the product map from degrees p and q.
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        mult_rank: Option<Vec<usize>>,
    },
    /// Components of the first resonance variety.
    Resonance {
        matrix: String,
        /// Integral lattices of the degree-n covering with twist a (input must be @A).
        #[arg(long, num_args = 2, value_names = ["N", "A"], allow_negative_numbers = true)]
        integral: Option<Vec<i64>>,
    },
    /// Compare the integral invariants of the coverings with twists 1 and 2.
    Obstruction { n: i64 },
    /// Recompute every headline value and compare it with its golden value.
    Reproduce {
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_golden: bool,
    },
}

fn pair<T: Copy>(v: &Option<Vec<T>>) -> Option<(T, T)> {
    v.as_ref().map(|v| (v[0], v[1]))
}

fn run(cli: &Cli) -> CliResult<(Report, Format, bool)> {
    let limits = Limits::new(cli.force, cli.max_subsets);
    let report = match &cli.command {
        Command::Matroid { matrix } => commands::matroid(&MatrixInput::load(matrix)?, limits)?,
        Command::Layers { matrix, dot } => commands::layers(&MatrixInput::load(matrix)?, limits, dot.as_deref())?,
        Command::PosetCompare { first, second } => {
            commands::poset_compare(&MatrixInput::load(first)?, &MatrixInput::load(second)?, limits)?
        }
        Command::Cohomology { matrix, over, quotient_torus, mult_rank } => {
            commands::cohomology(&MatrixInput::load(matrix)?, limits, *over, *quotient_torus, pair(mult_rank))?
        }
        Command::Resonance { matrix, integral } => {
            commands::resonance(&MatrixInput::load(matrix)?, limits, pair(integral))?
        }
        Command::Obstruction { n } => commands::obstruction(*n)?,
        Command::Reproduce { json, corrupt_golden } => {
            let (report, ok) = reproduce::run(*corrupt_golden);
            let format = if *json { Format::Json } else { cli.format };
            return Ok((report, format, ok));
        }
    };
    Ok((report, cli.format, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, format, ok)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render(format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("toricarr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
