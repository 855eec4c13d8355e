//! Logarithmic capacity of two intervals: the exact theta-function value,
//! an elementary lower bound and the Dubinin–Karp upper bound.

use crate::error::{Error, Result};
use crate::geometry::{check_set, IntervalPair, Uniformization};

/// Lower bound, exact value and upper bound for `cap E`, all already
/// multiplied by `scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    pub lower: f64,
    pub exact: f64,
    pub upper: f64,
    /// `(a4 - a1) / 2` for a raw set, 1 for a normalized one.
    pub scale: f64,
}

/// `cap([-1, alpha] ∪ [beta, 1]) = (1 + beta) / (2 (1 + alpha)) * Theta^4(0) / Theta^4(rho)`.
pub fn cap_exact(alpha: f64, beta: f64) -> Result<f64> {
    let unif = Uniformization::new(alpha, beta)?;
    let m = unif.modulus();
    let ratio = m.theta(0.0) / m.theta(unif.rho());
    Ok((1.0 + beta) / (2.0 * (1.0 + alpha)) * ratio.powi(4))
}

/// Elementary lower bound; exact for `alpha = beta`, where the set is `[-1, 1]`.
pub fn cap_lower(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha.is_finite() && beta.is_finite() && -1.0 < alpha && alpha <= beta && beta < 1.0) {
        return Err(Error::Geometry(format!(
            "need -1 < alpha <= beta < 1, got alpha = {alpha}, beta = {beta}"
        )));
    }
    let num = (1.0 - alpha * alpha).powf(0.25) + (1.0 - beta * beta).powf(0.25);
    let den = ((1.0 - alpha) * (1.0 + beta)).powf(0.25) + ((1.0 + alpha) * (1.0 - beta)).powf(0.25);
    Ok(0.5 * (num / den).powi(4))
}

/// Dubinin–Karp upper bound; exact for `alpha = -beta`.
pub fn cap_upper(alpha: f64, beta: f64) -> Result<f64> {
    check_set(alpha, beta)?;
    Ok(0.25 * (((1.0 + alpha) * (1.0 + beta)).sqrt() + ((1.0 - alpha) * (1.0 - beta)).sqrt()))
}

/// All three values on the normalized set.
pub fn cap_normalized(alpha: f64, beta: f64) -> Result<CapacityEstimate> {
    Ok(CapacityEstimate {
        lower: cap_lower(alpha, beta)?,
        exact: cap_exact(alpha, beta)?,
        upper: cap_upper(alpha, beta)?,
        scale: 1.0,
    })
}

/// All three values for a raw set, scaled by `(a4 - a1) / 2`. The origin may
/// lie anywhere.
pub fn cap_general(e: &IntervalPair) -> Result<CapacityEstimate> {
    let [_, a2, a3, _] = e.endpoints();
    let scale = e.half_width();
    let unit = cap_normalized(e.to_normalized(a2), e.to_normalized(a3))?;
    Ok(CapacityEstimate {
        lower: scale * unit.lower,
        exact: scale * unit.exact,
        upper: scale * unit.upper,
        scale,
    })
}
