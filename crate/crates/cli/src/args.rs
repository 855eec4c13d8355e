//! Command-line grammar.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::selftest::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "ticf",
    version,
    about = "Convergence factor and logarithmic capacity of two real intervals"
)]
pub struct Cli {
    /// Emit one flat JSON object instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact convergence factor with its elementary bounds.
    Factor(PointArgs),
    /// Exact capacity with its lower and upper bounds.
    Capacity(SetArgs),
    /// Gap point of smallest convergence factor.
    OptimalXi(PairArgs),
    /// Write a figure-reproduction sweep as CSV.
    Sweep(SweepArgs),
    /// Compare the exact factor with an independent numerical oracle.
    Oracle(OracleArgs),
    /// Run the built-in verification suites.
    Selftest(SelftestArgs),
}

/// `[-1, alpha] ∪ [beta, 1]`.
#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: f64,
}

/// A set given either normalized or by its four endpoints.
#[derive(Debug, Clone, Args)]
pub struct SetArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "endpoints")]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "endpoints")]
    pub beta: Option<f64>,
    /// a1,a2,a3,a4 with a1 < a2 < a3 < a4.
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true,
        conflicts_with_all = ["alpha", "beta"]
    )]
    pub endpoints: Option<Vec<f64>>,
}

/// A set plus an evaluation point. With `--endpoints` the point is the
/// origin.
#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "endpoints",
        conflicts_with = "endpoints"
    )]
    pub xi: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    /// kappa over equispaced gap points, fixed alpha and beta.
    FactorOverXi,
    /// Capacity over beta in (alpha, 1), fixed alpha.
    CapacityOverBeta,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: SweepMode,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Required for factor-over-xi.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub points: usize,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMethod {
    /// Green's function by quadrature.
    Quadrature,
    /// Slope of minimal residual norms.
    Polynomial,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value = "quadrature")]
    pub method: OracleMethod,
    /// Degree range `lo:hi` for the polynomial method.
    #[arg(long, default_value = "10:40", value_parser = parse_degrees)]
    pub degrees: RangeInclusive<usize>,
    /// Grid points per interval for the polynomial method.
    #[arg(long, default_value_t = 4001)]
    pub grid_size: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SelftestArgs {
    /// Run only this suite.
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Multiply every deviation tolerance by this factor.
    #[arg(long, default_value_t = 1.0)]
    pub tol_scale: f64,
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("bad lower degree: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("bad upper degree: {e}"))?;
    if lo > hi {
        return Err(format!("empty degree range {lo}:{hi}"));
    }
    Ok(lo..=hi)
}
