//! Command-line surface: single computations, parameter-space scans, and
//! profile grid export.

mod render;
mod scan;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use twistropy::Error;

#[derive(Parser)]
#[command(
    name = "twistropy",
    version,
    about = "Entropy of compositions of spherical twists: exact values, profiles, and K-theory verdicts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ProfileParams {
    /// Total dimension of V = Hom•(E2, E1)
    #[arg(long, required_unless_present = "single", conflicts_with = "single")]
    dimv: Option<u64>,
    /// Spherical dimension d >= 1
    #[arg(long)]
    d: i64,
    /// Width max V - min V
    #[arg(long, default_value_t = 0)]
    w: i64,
    /// The two objects admit a common orthogonal object
    #[arg(long)]
    orthogonal: bool,
    /// The ambient category is perfect complexes over a smooth compact dg algebra
    #[arg(long)]
    ambient: bool,
    /// Profile of a single spherical twist instead of a composition
    #[arg(long)]
    single: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Piecewise entropy profile of a twist composition (or single twist)
    Entropy {
        #[command(flatten)]
        params: ProfileParams,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Serre-functor entropy of the glued algebra with dim W = N
    Serre {
        /// Total dimension N >= 2 of the gluing bimodule
        #[arg(long)]
        n: i64,
        /// Also list the recurrence values d_-1 .. d_M
        #[arg(long, value_name = "M")]
        dims: Option<i64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verdict on h0 = log rho for one (dim V, lambda, d)
    Kt {
        #[arg(long)]
        dimv: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long)]
        d: i64,
        /// Treat the two classes as linearly dependent
        #[arg(long)]
        dependent_classes: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Report for the Calabi-Yau hypersurface in P^n x P^m
    Cy {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Graded Hom report for a pair of reachable spherical objects
    Braid {
        /// Braid word for E2 (e.g. "s1 s2^-1" or "12'")
        #[arg(long, default_value = "")]
        word: String,
        /// Simple object index for E2
        #[arg(long)]
        i: u8,
        /// Braid word for E1
        #[arg(long, default_value = "")]
        word2: String,
        /// Simple object index for E1
        #[arg(long)]
        j: u8,
        /// Calabi-Yau dimension d >= 2
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// CSV scan over (n, m) hypersurface points or (dimv, lambda, d) triples
    Scan {
        /// Range for n, e.g. "2..4" or "3"
        #[arg(long)]
        n: Option<String>,
        /// Range for m
        #[arg(long)]
        m: Option<String>,
        /// Range for dim V
        #[arg(long)]
        dimv: Option<String>,
        /// Range for lambda
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Range for d
        #[arg(long)]
        d: Option<String>,
        /// Write CSV to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample an entropy profile on a t-grid as CSV rows (t, lower, upper, exact)
    #[command(name = "profile-csv")]
    ProfileCsv {
        #[command(flatten)]
        params: ProfileParams,
        #[arg(long, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long)]
        step: f64,
        /// Write CSV to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Exit-code taxonomy: 1 malformed input, 2 violated mathematical
/// hypotheses, 3 data too ambiguous to answer.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidParameter(_) | Error::InconsistentInput(_) => 1,
        Error::MissingAmbientHypothesis(_) => 2,
        Error::GapConditionFails { .. }
        | Error::AmbiguousConnectingMap { .. }
        | Error::PossiblyIsomorphicPair { .. } => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Entropy { params, out } => render::entropy(&params, &out),
        Command::Serre { n, dims, out } => render::serre(n, dims, &out),
        Command::Kt {
            dimv,
            lambda,
            d,
            dependent_classes,
            out,
        } => render::kt(dimv, lambda, d, !dependent_classes, &out),
        Command::Cy { n, m, out } => render::cy(n, m, &out),
        Command::Braid {
            word,
            i,
            word2,
            j,
            d,
            out,
        } => render::braid(&word, i, &word2, j, d, &out),
        Command::Scan {
            n,
            m,
            dimv,
            lambda,
            d,
            output,
        } => scan::run(n, m, dimv, lambda, d, output.as_deref()),
        Command::ProfileCsv {
            params,
            t_min,
            t_max,
            step,
            output,
        } => scan::profile_csv(&params, t_min, t_max, step, output.as_deref()),
    }
}
