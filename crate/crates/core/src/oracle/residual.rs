//! Minimal residual polynomials on a discretized set, and the slope fit
//! that turns their norms into a convergence factor.
//!
//! The minimax problem `min max_i |1 - x_i q(x_i)|` over `deg q < n` is a
//! discrete Chebyshev approximation of the constant 1 by `x T_j(l(x))`, with
//! `l` the affine map of the hull of `E` onto `[-1, 1]`. It is solved as the
//! dual LP by a revised simplex with `n + 1` rows: each basis is a reference
//! of `n + 1` grid points with signs, and each pivot is one exchange.

use std::ops::{Neg, RangeInclusive};

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::geometry::IntervalPair;

/// Largest accepted slope-fit residual.
pub const MAX_FIT_RESIDUAL: f64 = 0.05;

/// Discretization and solver settings for the residual-polynomial oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualConfig {
    /// Chebyshev–Lobatto points per interval.
    pub grid_size: usize,
    pub degrees: RangeInclusive<usize>,
    /// Relative optimality gap at which the exchange stops. Residuals are
    /// not resolved below roundoff in `1 - x q(x)`, which caps the gap for
    /// high degrees.
    pub lp_tol: f64,
}

impl Default for ResidualConfig {
    fn default() -> Self {
        Self {
            grid_size: 4001,
            degrees: 10..=40,
            lp_tol: 1e-9,
        }
    }
}

impl ResidualConfig {
    pub fn new(grid_size: usize, degrees: RangeInclusive<usize>, lp_tol: f64) -> Result<Self> {
        if grid_size < 101 {
            return Err(Error::Domain(format!("grid_size = {grid_size} must be at least 101")));
        }
        if degrees.is_empty() {
            return Err(Error::Domain("degree range is empty".into()));
        }
        if !(lp_tol > 0.0) {
            return Err(Error::Domain(format!("lp_tol = {lp_tol} must be positive")));
        }
        Ok(Self {
            grid_size,
            degrees,
            lp_tol,
        })
    }
}

fn lobatto(a: f64, b: f64, count: usize) -> impl Iterator<Item = f64> {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    (0..count).map(move |j| {
        let t = (std::f64::consts::PI * j as f64 / (count - 1) as f64).cos();
        mid - half * t
    })
}

/// Grid over both intervals with the basis `x T_j(l(x))`, `j < max_degree`,
/// tabulated row by row. Lower degrees use a prefix of each row.
struct Discretization {
    table: Vec<f64>,
    stride: usize,
    len: usize,
}

impl Discretization {
    fn new(e: &IntervalPair, max_degree: usize, grid_size: usize) -> Self {
        let [a1, a2, a3, a4] = e.endpoints();
        let grid: Vec<f64> = lobatto(a1, a2, grid_size).chain(lobatto(a3, a4, grid_size)).collect();
        let stride = max_degree.max(1);
        let mut table = vec![0.0; grid.len() * stride];
        for (row, &x) in table.chunks_exact_mut(stride).zip(&grid) {
            let l = (2.0 * x - a1 - a4) / (a4 - a1);
            let (mut prev, mut cur) = (1.0, l);
            row[0] = x;
            for slot in row.iter_mut().skip(1) {
                *slot = x * cur;
                (prev, cur) = (cur, 2.0 * l * cur - prev);
            }
        }
        Self {
            table,
            stride,
            len: grid.len(),
        }
    }

    fn row(&self, i: usize, n: usize) -> &[f64] {
        &self.table[i * self.stride..i * self.stride + n]
    }
}

/// Optimal reference of one degree.
struct Reference {
    norm: f64,
    points: Vec<usize>,
    /// Grid point of largest deviation outside the reference.
    worst: usize,
}

/// Norms `L_1 ..= L_max` by exchange, each degree warm-started from the
/// previous optimal reference plus its worst point.
fn norm_chain(e: &IntervalPair, max_degree: usize, cfg: &ResidualConfig) -> Result<Vec<f64>> {
    if e.contains(0.0) {
        return Err(Error::OriginInside);
    }
    if cfg.grid_size < 101 {
        return Err(Error::Domain(format!(
            "grid_size = {} must be at least 101",
            cfg.grid_size
        )));
    }
    let grid = Discretization::new(e, max_degree, cfg.grid_size);
    let mut norms = Vec::with_capacity(max_degree);
    let mut start = vec![0, grid.len - 1];
    for n in 1..=max_degree {
        let reference = Exchange::new(&grid, n, start)?.solve(cfg.lp_tol)?;
        norms.push(reference.norm);
        start = reference.points;
        start.push(reference.worst);
    }
    Ok(norms)
}

/// Discrete minimal residual norm `min max |P(x_i)|` over degree-`n`
/// polynomials with `P(0) = 1`. The returned value is the achieved maximum
/// deviation, within a relative `lp_tol` of the optimum.
pub fn min_residual_norm(e: &IntervalPair, n: usize, cfg: &ResidualConfig) -> Result<f64> {
    if n == 0 {
        return if e.contains(0.0) {
            Err(Error::OriginInside)
        } else {
            Ok(1.0)
        };
    }
    Ok(norm_chain(e, n, cfg)?[n - 1])
}

struct Exchange<'a> {
    grid: &'a Discretization,
    n: usize,
    points: Vec<usize>,
    signs: Vec<f64>,
    weights: DVector<f64>,
}

impl<'a> Exchange<'a> {
    fn row(&self, i: usize) -> &[f64] {
        self.grid.row(i, self.n)
    }

    /// The null vector of the basis matrix at `n + 1` grid points gives signs
    /// and weights of a feasible dual solution. It has no zero entries since
    /// `x q(x)` is a Haar system away from 0.
    fn new(grid: &'a Discretization, n: usize, points: Vec<usize>) -> Result<Self> {
        debug_assert_eq!(points.len(), n + 1);
        let mut probe = Self {
            grid,
            n,
            points,
            signs: vec![1.0; n + 1],
            weights: DVector::zeros(n + 1),
        };
        let a = DMatrix::from_fn(n, n, |j, k| probe.row(probe.points[k])[j]);
        let last = DVector::from_column_slice(probe.row(probe.points[n])).neg();
        let head = a
            .lu()
            .solve(&last)
            .ok_or_else(|| Error::Solver("singular starting reference".into()))?;
        let null = DVector::from_iterator(n + 1, head.iter().copied().chain([1.0]));
        let sum: f64 = null.iter().map(|w| w.abs()).sum();
        if !sum.is_finite() || null.iter().any(|w| *w == 0.0) {
            return Err(Error::Solver("degenerate starting reference".into()));
        }
        probe.signs = null.iter().map(|w| w.signum()).collect();
        probe.weights = null.map(|w| w.abs() / sum);
        Ok(probe)
    }

    /// Constraint column of grid point `i` taken with sign `s`.
    fn column(&self, i: usize, s: f64) -> DVector<f64> {
        DVector::from_iterator(self.n + 1, self.row(i).iter().map(|b| s * b).chain([1.0]))
    }

    fn basis(&self) -> DMatrix<f64> {
        let mut b = DMatrix::zeros(self.n + 1, self.n + 1);
        for (k, (&i, &s)) in self.points.iter().zip(&self.signs).enumerate() {
            b.set_column(k, &self.column(i, s));
        }
        b
    }

    fn solve(mut self, lp_tol: f64) -> Result<Reference> {
        let max_iter = 100 * (self.n + 1) + 1000;
        let (mut best_h, mut stalled) = (f64::NEG_INFINITY, 0);
        for _ in 0..max_iter {
            let basis = self.basis();
            // Dual prices: the coefficients of q and the levelled deviation.
            let costs = DVector::from_column_slice(&self.signs);
            let prices = basis
                .transpose()
                .lu()
                .solve(&costs)
                .ok_or_else(|| Error::Solver("singular reference matrix".into()))?;
            let h = prices[self.n];
            // In exact arithmetic every exchange raises h. A long plateau means
            // the reference weights have become numerically degenerate.
            if h > best_h * (1.0 + f64::EPSILON) {
                (best_h, stalled) = (h, 0);
            } else {
                stalled += 1;
                if stalled > 2 * (self.n + 1) {
                    return Err(Error::Solver(format!(
                        "exchange stalled at h = {h:.3e}; degree {} is beyond double precision here",
                        self.n
                    )));
                }
            }
            // Reference points sit at |r| = h up to roundoff and never enter.
            let (mut worst, mut enter) = (0.0_f64, None);
            let mut magnitude = 1.0_f64;
            for i in (0..self.grid.len).filter(|i| !self.points.contains(i)) {
                let (p, size) = self
                    .row(i)
                    .iter()
                    .zip(prices.iter())
                    .fold((0.0_f64, 0.0_f64), |(p, size), (b, c)| {
                        (p + b * c, size + (b * c).abs())
                    });
                magnitude = magnitude.max(size);
                let r = 1.0 - p;
                if r.abs() >= worst {
                    worst = r.abs();
                    enter = Some((i, r.signum()));
                }
            }
            if !worst.is_finite() {
                return Err(Error::Solver("non-finite residual".into()));
            }
            let (i, s) = enter.ok_or_else(|| Error::Solver("grid has no point outside the reference".into()))?;
            // Below this the residuals carry no information.
            let roundoff = 64.0 * f64::EPSILON * magnitude;
            if worst <= h.abs() * (1.0 + lp_tol) + roundoff {
                return Ok(Reference {
                    norm: worst.max(h.abs()),
                    points: self.points,
                    worst: i,
                });
            }
            let step = basis
                .lu()
                .solve(&self.column(i, s))
                .ok_or_else(|| Error::Solver("singular reference matrix".into()))?;
            let mut leave = None;
            let mut best = f64::INFINITY;
            for k in 0..=self.n {
                if step[k] > 1e-14 {
                    let ratio = self.weights[k] / step[k];
                    if ratio < best {
                        best = ratio;
                        leave = Some(k);
                    }
                }
            }
            let k = leave.ok_or_else(|| Error::Solver("unbounded ratio test".into()))?;
            self.weights -= &step * best;
            self.weights[k] = best;
            self.points[k] = i;
            self.signs[k] = s;
        }
        Err(Error::Solver(format!("no convergence in {max_iter} exchanges")))
    }
}

/// A fitted convergence factor and the fit's quality figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub kappa: f64,
    /// `max |log L_n - fit(n)| / n` over the fitted degrees.
    pub residual: f64,
}

/// Least-squares slope of `log L_n` against `n`, exponentiated.
pub fn kappa_from_norms(norms: &[(usize, f64)]) -> Result<SlopeFit> {
    if norms.len() < 8 {
        return Err(Error::Domain(format!("need at least 8 degrees, got {}", norms.len())));
    }
    if let Some((n, l)) = norms.iter().find(|(_, l)| !(*l > 0.0 && l.is_finite())) {
        return Err(Error::Domain(format!("norm L_{n} = {l} is not positive")));
    }
    let count = norms.len() as f64;
    let mean_n = norms.iter().map(|(n, _)| *n as f64).sum::<f64>() / count;
    let mean_y = norms.iter().map(|(_, l)| l.ln()).sum::<f64>() / count;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (n, l) in norms {
        let dx = *n as f64 - mean_n;
        sxy += dx * (l.ln() - mean_y);
        sxx += dx * dx;
    }
    if sxx == 0.0 {
        return Err(Error::Domain("degrees must not all coincide".into()));
    }
    let slope = sxy / sxx;
    let residual = norms
        .iter()
        .map(|(n, l)| {
            let fit = mean_y + slope * (*n as f64 - mean_n);
            (l.ln() - fit).abs() / (*n).max(1) as f64
        })
        .fold(0.0, f64::max);
    if residual > MAX_FIT_RESIDUAL {
        return Err(Error::Fit {
            residual,
            limit: MAX_FIT_RESIDUAL,
        });
    }
    Ok(SlopeFit {
        kappa: slope.exp(),
        residual,
    })
}

/// Norms `L_n` for every degree in the configured window, in degree order.
pub fn residual_norms(e: &IntervalPair, cfg: &ResidualConfig) -> Result<Vec<(usize, f64)>> {
    let (lo, hi) = (*cfg.degrees.start(), *cfg.degrees.end());
    if lo > hi {
        return Err(Error::Domain("degree range is empty".into()));
    }
    let chain = norm_chain(e, hi, cfg)?;
    Ok((lo..=hi)
        .map(|n| (n, if n == 0 { 1.0 } else { chain[n - 1] }))
        .collect())
}

/// `κ(E, 0)` estimated from minimal residual norms over the degree window.
pub fn kappa_polynomial(e: &IntervalPair, cfg: &ResidualConfig) -> Result<SlopeFit> {
    kappa_from_norms(&residual_norms(e, cfg)?)
}
