//! Figure-reproduction sweeps written as CSV.
//!
//! Points are evaluated in parallel and assembled by index, so the bytes do
//! not depend on the thread count. Numbers carry 17 significant digits.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use ticf_core::{cap_normalized, kappa_bounds, NormalizedProblem};

use crate::args::SweepMode;
use crate::error::{CliError, CliResult};

pub const FACTOR_HEADER: &str = "alpha,beta,xi,kappa_exact,kappa_lower,kappa_upper";
pub const CAPACITY_HEADER: &str = "alpha,beta,cap_exact,cap_lower,cap_upper";

/// Distance kept from both ends of the beta range of a capacity sweep.
pub const BETA_MARGIN: f64 = 1e-3;

/// A fully specified sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub point_count: usize,
    pub output_path: PathBuf,
}

impl SweepSpec {
    fn validate(&self) -> CliResult<()> {
        if self.point_count < 2 {
            return Err(CliError::Usage(format!(
                "point count {} must be at least 2",
                self.point_count
            )));
        }
        match (self.mode, self.beta) {
            (SweepMode::FactorOverXi, None) => Err(CliError::Usage("factor-over-xi needs --beta".into())),
            (SweepMode::CapacityOverBeta, Some(_)) => {
                Err(CliError::Usage("capacity-over-beta sweeps beta; drop --beta".into()))
            }
            _ => Ok(()),
        }
    }

    /// Sweep abscissae: interior gap points `alpha + (beta - alpha) j / (N + 1)`
    /// for a factor sweep, `N` equispaced betas from `alpha + 1e-3` to
    /// `1 - 1e-3` for a capacity sweep.
    pub fn abscissae(&self) -> Vec<f64> {
        let n = self.point_count;
        match self.mode {
            SweepMode::FactorOverXi => {
                let beta = self.beta.unwrap_or(f64::NAN);
                let step = (beta - self.alpha) / (n + 1) as f64;
                (1..=n).map(|j| self.alpha + step * j as f64).collect()
            }
            SweepMode::CapacityOverBeta => {
                let (lo, hi) = (self.alpha + BETA_MARGIN, 1.0 - BETA_MARGIN);
                (0..n).map(|j| lo + (hi - lo) * j as f64 / (n - 1) as f64).collect()
            }
        }
    }
}

fn number(out: &mut String, v: f64) {
    write!(out, "{v:.16e}").expect("writing to a String cannot fail");
}

fn row(values: &[f64]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        number(&mut out, *v);
    }
    out.push('\n');
    out
}

/// The whole CSV document, header included.
pub fn render_csv(spec: &SweepSpec) -> CliResult<String> {
    spec.validate()?;
    let alpha = spec.alpha;
    let rows: Vec<String> = match spec.mode {
        SweepMode::FactorOverXi => {
            let beta = spec.beta.expect("validated");
            // Surface geometry errors once, before the parallel section.
            NormalizedProblem::new(alpha, beta, 0.5 * (alpha + beta))?;
            spec.abscissae()
                .par_iter()
                .map(|&xi| {
                    let est = kappa_bounds(&NormalizedProblem::new(alpha, beta, xi)?)?;
                    Ok(row(&[alpha, beta, xi, est.exact, est.lower, est.upper]))
                })
                .collect::<CliResult<_>>()?
        }
        SweepMode::CapacityOverBeta => {
            if !(-1.0 < alpha && alpha + BETA_MARGIN < 1.0 - BETA_MARGIN) {
                return Err(ticf_core::Error::Geometry(format!(
                    "alpha = {alpha} leaves no beta range in ({}, {})",
                    alpha + BETA_MARGIN,
                    1.0 - BETA_MARGIN
                ))
                .into());
            }
            spec.abscissae()
                .par_iter()
                .map(|&beta| {
                    let est = cap_normalized(alpha, beta)?;
                    Ok(row(&[alpha, beta, est.exact, est.lower, est.upper]))
                })
                .collect::<CliResult<_>>()?
        }
    };
    let header = match spec.mode {
        SweepMode::FactorOverXi => FACTOR_HEADER,
        SweepMode::CapacityOverBeta => CAPACITY_HEADER,
    };
    let mut doc = String::with_capacity(rows.iter().map(String::len).sum::<usize>() + header.len() + 1);
    doc.push_str(header);
    doc.push('\n');
    rows.iter().for_each(|r| doc.push_str(r));
    Ok(doc)
}

/// Computes the sweep and writes it to `spec.output_path` through a temporary
/// file in the same directory, so a failed run leaves no partial file.
/// Returns the number of data rows.
pub fn write_sweep(spec: &SweepSpec) -> CliResult<usize> {
    let doc = render_csv(spec)?;
    let path = &spec.output_path;
    let io_err = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(doc.as_bytes()).map_err(io_err)?;
    tmp.flush().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(spec.point_count)
}
