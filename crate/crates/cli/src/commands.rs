//! Subcommand bodies. Each returns the text to print on stdout.

use serde::Serialize;
use ticf_core::oracle::{kappa_oracle, kappa_polynomial, ResidualConfig};
use ticf_core::{
    cap_general, cap_normalized, kappa_bounds, kappa_exact, normalize, xi_optimal, CapacityEstimate, IntervalPair,
    NormalizedProblem,
};

use crate::args::{Cli, Command, OracleArgs, OracleMethod, PairArgs, PointArgs, SelftestArgs, SetArgs, SweepArgs};
use crate::error::{CliError, CliResult};
use crate::output::render;
use crate::selftest::{self, Suite};
use crate::sweep::{write_sweep, SweepSpec};

/// Runs the parsed command line.
pub fn run(cli: &Cli) -> CliResult<String> {
    let json = cli.json;
    match &cli.command {
        Command::Factor(args) => factor(args, json),
        Command::Capacity(args) => capacity(args, json),
        Command::OptimalXi(args) => optimal_xi(args, json),
        Command::Sweep(args) => sweep(args, json),
        Command::Oracle(args) => oracle(args, json),
        Command::Selftest(args) => run_selftest(args, json),
    }
}

/// The set as given: normalized parameters, or raw endpoints.
enum Target {
    Normalized { alpha: f64, beta: f64 },
    Raw(IntervalPair),
}

fn target(set: &SetArgs) -> CliResult<Target> {
    match (&set.endpoints, set.alpha, set.beta) {
        (Some(a), None, None) => {
            let [a1, a2, a3, a4] = a[..] else {
                return Err(CliError::Usage(format!("--endpoints takes 4 values, got {}", a.len())));
            };
            Ok(Target::Raw(IntervalPair::new(a1, a2, a3, a4)?))
        }
        (None, Some(alpha), Some(beta)) => Ok(Target::Normalized { alpha, beta }),
        _ => Err(CliError::Usage("give --alpha and --beta, or --endpoints".into())),
    }
}

/// The evaluation problem plus the raw set whose origin is the point.
fn point(args: &PointArgs) -> CliResult<(NormalizedProblem, IntervalPair)> {
    match (target(&args.set)?, args.xi) {
        (Target::Raw(e), None) => Ok((normalize(&e)?, e)),
        (Target::Raw(_), Some(_)) => Err(CliError::Usage("--xi cannot be combined with --endpoints".into())),
        (Target::Normalized { alpha, beta }, Some(xi)) => {
            let p = NormalizedProblem::new(alpha, beta, xi)?;
            Ok((p, IntervalPair::from_normalized(alpha, beta, xi)?))
        }
        (Target::Normalized { .. }, None) => Err(CliError::Usage("--xi is required with --alpha/--beta".into())),
    }
}

#[derive(Debug, Serialize)]
pub struct FactorRecord {
    pub alpha: f64,
    pub beta: f64,
    pub xi: f64,
    pub region: &'static str,
    pub kappa_exact: f64,
    pub kappa_lower: f64,
    pub kappa_upper: f64,
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
    pub k: f64,
    pub k_prime: f64,
    pub q: f64,
}

pub fn factor_record(p: &NormalizedProblem) -> CliResult<FactorRecord> {
    let est = kappa_bounds(p)?;
    let unif = p.uniformize()?;
    let m = unif.modulus();
    Ok(FactorRecord {
        alpha: p.alpha(),
        beta: p.beta(),
        xi: p.xi(),
        region: p.region().as_str(),
        kappa_exact: est.exact,
        kappa_lower: est.lower,
        kappa_upper: est.upper,
        a1: est.a1,
        a2: est.a2,
        b: est.b,
        k: m.k(),
        k_prime: m.k_prime(),
        q: m.nome(),
    })
}

fn factor(args: &PointArgs, json: bool) -> CliResult<String> {
    let (p, _) = point(args)?;
    Ok(render(&factor_record(&p)?, json))
}

#[derive(Debug, Serialize)]
pub struct CapacityRecord {
    pub alpha: f64,
    pub beta: f64,
    pub cap_exact: f64,
    pub cap_lower: f64,
    pub cap_upper: f64,
    pub scale: f64,
}

fn capacity(args: &SetArgs, json: bool) -> CliResult<String> {
    let ((alpha, beta), est): ((f64, f64), CapacityEstimate) = match target(args)? {
        Target::Normalized { alpha, beta } => ((alpha, beta), cap_normalized(alpha, beta)?),
        Target::Raw(e) => {
            let [_, a2, a3, _] = e.endpoints();
            ((e.to_normalized(a2), e.to_normalized(a3)), cap_general(&e)?)
        }
    };
    let record = CapacityRecord {
        alpha,
        beta,
        cap_exact: est.exact,
        cap_lower: est.lower,
        cap_upper: est.upper,
        scale: est.scale,
    };
    Ok(render(&record, json))
}

#[derive(Debug, Serialize)]
pub struct OptimalRecord {
    pub alpha: f64,
    pub beta: f64,
    pub xi_star: f64,
    pub kappa_exact: f64,
}

fn optimal_xi(args: &PairArgs, json: bool) -> CliResult<String> {
    let (alpha, beta) = (args.alpha, args.beta);
    let xi_star = xi_optimal(alpha, beta)?;
    let kappa = kappa_exact(&NormalizedProblem::new(alpha, beta, xi_star)?)?;
    Ok(render(
        &OptimalRecord {
            alpha,
            beta,
            xi_star,
            kappa_exact: kappa,
        },
        json,
    ))
}

#[derive(Debug, Serialize)]
pub struct SweepRecord {
    pub rows: usize,
    pub output: String,
}

fn sweep(args: &SweepArgs, json: bool) -> CliResult<String> {
    let spec = SweepSpec {
        mode: args.mode,
        alpha: args.alpha,
        beta: args.beta,
        point_count: args.points,
        output_path: args.output.clone(),
    };
    let rows = write_sweep(&spec)?;
    Ok(render(
        &SweepRecord {
            rows,
            output: spec.output_path.display().to_string(),
        },
        json,
    ))
}

#[derive(Debug, Serialize)]
pub struct OracleRecord {
    pub alpha: f64,
    pub beta: f64,
    pub xi: f64,
    pub region: &'static str,
    pub method: &'static str,
    pub kappa_exact: f64,
    pub kappa_oracle: f64,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit_residual: Option<f64>,
}

fn oracle(args: &OracleArgs, json: bool) -> CliResult<String> {
    let (p, e) = point(&args.point)?;
    let exact = kappa_exact(&p)?;
    let (method, value, fit_residual) = match args.method {
        OracleMethod::Quadrature => ("quadrature", kappa_oracle(&e, 0.0)?, None),
        OracleMethod::Polynomial => {
            let cfg = ResidualConfig::new(args.grid_size, args.degrees.clone(), ResidualConfig::default().lp_tol)?;
            let fit = kappa_polynomial(&e, &cfg)?;
            ("polynomial", fit.kappa, Some(fit.residual))
        }
    };
    let abs = (value - exact).abs();
    let record = OracleRecord {
        alpha: p.alpha(),
        beta: p.beta(),
        xi: p.xi(),
        region: p.region().as_str(),
        method,
        kappa_exact: exact,
        kappa_oracle: value,
        abs_deviation: abs,
        rel_deviation: abs / exact,
        fit_residual,
    };
    Ok(render(&record, json))
}

#[derive(Debug, Serialize)]
pub struct SelftestRecord {
    pub suites: String,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

/// One line per check, or a JSON summary. On failure the report travels in
/// the error so it still reaches stdout.
fn run_selftest(args: &SelftestArgs, json: bool) -> CliResult<String> {
    let suites: Vec<Suite> = match args.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    if !(args.tol_scale >= 0.0 && args.tol_scale.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol-scale {} must be finite and non-negative",
            args.tol_scale
        )));
    }
    let checks: Vec<selftest::Check> = suites
        .iter()
        .flat_map(|s| selftest::run_scaled(*s, args.tol_scale))
        .collect();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = if json {
        let record = SelftestRecord {
            suites: suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(","),
            checks: checks.len(),
            passed: checks.len() - failed,
            failed,
        };
        render(&record, true)
    } else {
        checks.iter().map(|c| format!("{c}\n")).collect()
    };
    if failed > 0 {
        return Err(CliError::SelfTest {
            failed,
            total: checks.len(),
            report,
        });
    }
    Ok(report)
}
