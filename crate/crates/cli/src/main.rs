//! `kgen` — κ-generalized income and wealth distribution toolkit.
//!
//! Subcommands: `fit`, `curves`, `inequality`, `sample`, `compare`,
//! `mixture-fit`. Exit codes: 0 success, 1 input/validation error,
//! 2 numerical non-convergence.

mod commands;
mod config;
mod format;
mod input;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "kgen", version, about = "κ-generalized income and wealth distribution toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model to CSV microdata by weighted maximum likelihood
    Fit(FitArgs),
    /// Emit PDF and CCDF tables over a log-spaced grid, optionally sweeping a parameter
    Curves(CurvesArgs),
    /// Report mean, Gini index, Lorenz curve and top shares
    Inequality(InequalityArgs),
    /// Draw reproducible samples from a model
    Sample(SampleArgs),
    /// Fit several models and rank them by AIC
    Compare(CompareArgs),
    /// Fit the three-component net-wealth mixture on signed data
    MixtureFit(MixtureFitArgs),
}

#[derive(Args)]
struct FitArgs {
    /// Input CSV (header row; a `value` column, optional `weight`)
    input: PathBuf,
    /// Model: kgen, weibull, exponential, singh-maddala, dagum
    #[arg(long)]
    model: Option<String>,
    /// Name of the weight column
    #[arg(long)]
    weights: Option<String>,
    /// Drop rows with value <= 0 and report the dropped mass
    #[arg(long)]
    drop_nonpositive: bool,
    /// Bootstrap replicates for standard errors (0 = off, else >= 50)
    #[arg(long)]
    bootstrap: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CurvesArgs {
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    /// Second shape parameter (q for singh-maddala, p for dagum)
    #[arg(long)]
    shape2: Option<f64>,
    /// Number of grid points
    #[arg(long)]
    grid: Option<usize>,
    /// Sweep one parameter: NAME=v1,v2,... (e.g. alpha=1.0,1.5,2.0,2.5)
    #[arg(long)]
    sweep: Option<String>,
    /// Lower end of the x grid (default: quantile 0.001)
    #[arg(long)]
    x_min: Option<f64>,
    /// Upper end of the x grid (default: quantile 0.999999)
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InequalityArgs {
    /// Empirical mode: CSV input (otherwise parametric mode)
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    #[arg(long)]
    shape2: Option<f64>,
    /// Emit the Lorenz curve on a grid of N segments (N+1 points)
    #[arg(long)]
    lorenz_grid: Option<usize>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    /// Model: kgen, weibull, exponential, singh-maddala, dagum, mixture
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    #[arg(long)]
    shape2: Option<f64>,
    /// Mixture weight of the negative branch
    #[arg(long)]
    theta_neg: Option<f64>,
    /// Mixture weight of the atom at zero
    #[arg(long)]
    theta_zero: Option<f64>,
    /// Weibull shape of the negative branch
    #[arg(long)]
    neg_shape: Option<f64>,
    /// Weibull scale of the negative branch
    #[arg(long)]
    neg_scale: Option<f64>,
    /// Number of draws
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Input CSV (header row; a `value` column, optional `weight`)
    input: PathBuf,
    /// Comma-separated model list
    #[arg(long)]
    models: Option<String>,
    #[arg(long)]
    weights: Option<String>,
    /// Drop rows with value <= 0 and report the dropped mass
    #[arg(long)]
    drop_nonpositive: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MixtureFitArgs {
    /// Input CSV with signed net-wealth values
    input: PathBuf,
    #[arg(long)]
    weights: Option<String>,
    /// Absolute |x| threshold for the zero atom (default: 1e-9 of the
    /// weighted median absolute value)
    #[arg(long)]
    zero_tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                0
            } else {
                1
            };
        }
    };
    let outcome = match cli.command {
        Command::Fit(args) => commands::fit::run(args),
        Command::Curves(args) => commands::curves::run(args),
        Command::Inequality(args) => commands::inequality::run(args),
        Command::Sample(args) => commands::sample::run(args),
        Command::Compare(args) => commands::compare::run(args),
        Command::MixtureFit(args) => commands::mixture_fit::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            classify_error(&err)
        }
    }
}

/// 2 for numerical non-convergence, 1 for input/validation problems.
fn classify_error(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<kgen::Error>() {
            if matches!(
                e,
                kgen::Error::QuadratureFailed { .. } | kgen::Error::BootstrapUnstable { .. }
            ) {
                return 2;
            }
        }
    }
    1
}
