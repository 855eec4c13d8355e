//! Two-interval geometry: the affine normalization onto
//! `[-1, alpha] ∪ [beta, 1]`, the elliptic uniformization `(k, rho)` and the
//! real preimages of the evaluation point under the uniformizing map.

use crate::error::{Error, Result};
use crate::special::Modulus;

/// Smallest admissible gap `beta - alpha` on the normalized set.
pub const MIN_GAP: f64 = 1e-12;

/// `E = [a1, a2] ∪ [a3, a4]` in problem units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPair {
    a1: f64,
    a2: f64,
    a3: f64,
    a4: f64,
}

impl IntervalPair {
    /// Checks finiteness and strict ordering `a1 < a2 < a3 < a4`.
    ///
    /// Whether the origin lies in `E` is checked by [`normalize`], since
    /// capacity does not care about it.
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<Self> {
        if ![a1, a2, a3, a4].iter().all(|v| v.is_finite()) {
            return Err(Error::Geometry("endpoints must be finite".into()));
        }
        if !(a1 < a2 && a2 < a3 && a3 < a4) {
            return Err(Error::Geometry(format!(
                "endpoints must satisfy a1 < a2 < a3 < a4, got [{a1}, {a2}] ∪ [{a3}, {a4}]"
            )));
        }
        Ok(Self { a1, a2, a3, a4 })
    }

    /// The set `[-1 - xi, alpha - xi] ∪ [beta - xi, 1 - xi]`, i.e. the
    /// normalized set translated so that `xi` sits at the origin.
    pub fn from_normalized(alpha: f64, beta: f64, xi: f64) -> Result<Self> {
        Self::new(-1.0 - xi, alpha - xi, beta - xi, 1.0 - xi)
    }

    pub fn endpoints(&self) -> [f64; 4] {
        [self.a1, self.a2, self.a3, self.a4]
    }

    /// True when `x` lies in one of the closed intervals.
    pub fn contains(&self, x: f64) -> bool {
        (self.a1..=self.a2).contains(&x) || (self.a3..=self.a4).contains(&x)
    }

    /// True when `x` is one of the four endpoints.
    pub fn is_endpoint(&self, x: f64) -> bool {
        self.endpoints().contains(&x)
    }

    /// Half the convex-hull length, `(a4 - a1) / 2`.
    pub fn half_width(&self) -> f64 {
        0.5 * (self.a4 - self.a1)
    }

    /// The affine map onto the normalized set, `(2x - a1 - a4) / (a4 - a1)`.
    pub fn to_normalized(&self, x: f64) -> f64 {
        (2.0 * x - self.a1 - self.a4) / (self.a4 - self.a1)
    }

    /// `t * E`.
    pub fn dilate(&self, t: f64) -> Result<Self> {
        if !(t > 0.0) {
            return Err(Error::Geometry(format!("dilation factor {t} must be positive")));
        }
        Self::new(t * self.a1, t * self.a2, t * self.a3, t * self.a4)
    }
}

/// Where the evaluation point sits relative to the normalized set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `alpha < xi < beta`
    Gap,
    /// `xi < -1` or `xi > 1`
    Outside,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Gap => "gap",
            Region::Outside => "outside",
        }
    }
}

/// `(alpha, beta, xi)` on `[-1, alpha] ∪ [beta, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedProblem {
    alpha: f64,
    beta: f64,
    xi: f64,
    region: Region,
}

impl NormalizedProblem {
    pub fn new(alpha: f64, beta: f64, xi: f64) -> Result<Self> {
        check_set(alpha, beta)?;
        if !xi.is_finite() {
            return Err(Error::Geometry(format!("evaluation point {xi} is not finite")));
        }
        let region = if alpha < xi && xi < beta {
            Region::Gap
        } else if !(-1.0..=1.0).contains(&xi) {
            Region::Outside
        } else {
            return Err(Error::PointInside(xi));
        };
        Ok(Self {
            alpha,
            beta,
            xi,
            region,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn region(&self) -> Region {
        self.region
    }

    /// Distance from `xi` to the nearest of `-1, alpha, beta, 1`.
    pub fn boundary_distance(&self) -> f64 {
        [-1.0, self.alpha, self.beta, 1.0]
            .iter()
            .map(|e| (self.xi - e).abs())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn uniformize(&self) -> Result<Uniformization> {
        Uniformization::new(self.alpha, self.beta)
    }
}

/// Validates `-1 < alpha < beta < 1` with a non-degenerate gap.
pub(crate) fn check_set(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha.is_finite() && beta.is_finite()) {
        return Err(Error::Geometry("alpha and beta must be finite".into()));
    }
    if !(-1.0 < alpha && alpha < beta && beta < 1.0) {
        return Err(Error::Geometry(format!(
            "need -1 < alpha < beta < 1, got alpha = {alpha}, beta = {beta}"
        )));
    }
    if beta - alpha < MIN_GAP {
        return Err(Error::Geometry(format!(
            "gap beta - alpha = {:e} is below {MIN_GAP:e}",
            beta - alpha
        )));
    }
    Ok(())
}

/// Maps `E` onto `[-1, alpha] ∪ [beta, 1]` and the origin onto `xi`.
pub fn normalize(e: &IntervalPair) -> Result<NormalizedProblem> {
    if e.contains(0.0) {
        return Err(Error::OriginInside);
    }
    NormalizedProblem::new(e.to_normalized(e.a2), e.to_normalized(e.a3), e.to_normalized(0.0))
}

/// Elliptic parameters of the normalized set: the modulus and the point
/// `rho` in `(0, K)` with `sn^2(rho) = (1 - alpha)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uniformization {
    alpha: f64,
    beta: f64,
    modulus: Modulus,
    rho: f64,
}

impl Uniformization {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        check_set(alpha, beta)?;
        let outer = (1.0 - alpha) * (1.0 + beta);
        let k = (2.0 * (beta - alpha) / outer).sqrt();
        let k_prime = ((1.0 + alpha) * (1.0 - beta) / outer).sqrt();
        let modulus = Modulus::with_complement(k, k_prime)?;
        let rho = modulus.arcsn_from_squares(0.5 * (1.0 - alpha), 0.5 * (1.0 + alpha), (1.0 + alpha) / (1.0 + beta));
        Ok(Self {
            alpha,
            beta,
            modulus,
            rho,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `v*` in `[0, K]` for a gap point, where the preimage of `xi` is
    /// `v* + iK'`.
    pub fn v_star(&self, xi: f64) -> Result<f64> {
        let (a, b) = (self.alpha, self.beta);
        if !(a <= xi && xi <= b) {
            return Err(Error::Region { expected: "gap" });
        }
        let sn2 = (xi - a) * (1.0 + b) / ((1.0 + xi) * (b - a));
        let cn2 = (b - xi) * (1.0 + a) / ((1.0 + xi) * (b - a));
        let dn2 = (1.0 - xi) * (1.0 + a) / ((1.0 + xi) * (1.0 - a));
        Ok(self.modulus.arcsn_from_squares(sn2, cn2, dn2))
    }

    /// Real preimage `u*` in `(0, K)` for a point with `|xi| >= 1`.
    ///
    /// `xi -> -1` sends `u*` to 0, `xi -> ±∞` to `rho`, `xi -> 1` to `K`.
    pub fn u_star(&self, xi: f64) -> Result<f64> {
        let (a, b) = (self.alpha, self.beta);
        if !(xi.abs() >= 1.0) || xi.is_infinite() {
            return Err(Error::Region { expected: "outside" });
        }
        let sn2 = (1.0 + xi) * (1.0 - a) / (2.0 * (xi - a));
        let cn2 = (xi - 1.0) * (1.0 + a) / (2.0 * (xi - a));
        let dn2 = (xi - b) * (1.0 + a) / ((1.0 + b) * (xi - a));
        Ok(self.modulus.arcsn_from_squares(sn2, cn2, dn2))
    }

    /// The uniformizing map on the real segment `(0, K)`:
    /// `phi(u) = alpha + (1 - alpha^2) / (2 sn^2(u) + alpha - 1)`.
    pub fn phi(&self, u: f64) -> Result<f64> {
        let sn = self.modulus.sn_cn_dn(u).sn;
        let denom = 2.0 * sn * sn + self.alpha - 1.0;
        if denom == 0.0 || (u - self.rho).abs() <= 4.0 * f64::EPSILON * self.rho {
            return Err(Error::Pole(u));
        }
        Ok(self.phi_from_sn2(sn * sn))
    }

    /// The map on the upper segment, `phi(v + iK')`, using
    /// `sn^2(v + iK') = 1 / (k^2 sn^2(v))`.
    pub fn phi_gap(&self, v: f64) -> f64 {
        let k = self.modulus.k();
        let sn = self.modulus.sn_cn_dn(v).sn;
        self.phi_from_sn2(1.0 / (k * k * sn * sn))
    }

    fn phi_from_sn2(&self, sn2: f64) -> f64 {
        let a = self.alpha;
        a + (1.0 - a * a) / (2.0 * sn2 + a - 1.0)
    }
}
