//! Asymptotic convergence factor of `[-1, alpha] ∪ [beta, 1]` at a real
//! point: the exact theta-function value, the elementary two-sided bounds,
//! the optimal gap point and the reflection identity.
//!
//! All evaluations stay on the real axis. For gap points the preimage of
//! `xi` is `v* + iK'`, and the shift by `iK'` turns the ratio of `H`
//! functions into a ratio of `Theta` values at real arguments.

use crate::error::{Error, Result};
use crate::geometry::{check_set, normalize, IntervalPair, NormalizedProblem, Region, Uniformization};

/// Points closer than this to an endpoint of the set get `kappa = 1`.
pub const BOUNDARY_TOL: f64 = 1e-14;

/// Lower bound, exact value and upper bound of the convergence factor, with
/// the ingredients of the bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorEstimate {
    pub lower: f64,
    pub exact: f64,
    pub upper: f64,
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
}

impl FactorEstimate {
    /// The estimate on the boundary of the set, where every quantity is 1.
    pub fn boundary(alpha: f64, beta: f64) -> Self {
        let (a1, a2) = envelope_a(alpha, beta);
        Self {
            lower: 1.0,
            exact: 1.0,
            upper: 1.0,
            a1,
            a2,
            b: 1.0,
        }
    }
}

/// Exact `kappa(E, xi)`.
pub fn kappa_exact(p: &NormalizedProblem) -> Result<f64> {
    if p.boundary_distance() <= BOUNDARY_TOL {
        return Ok(1.0);
    }
    let unif = p.uniformize()?;
    kappa_with(p, &unif)
}

fn kappa_with(p: &NormalizedProblem, unif: &Uniformization) -> Result<f64> {
    let m = unif.modulus();
    let rho = unif.rho();
    match p.region() {
        Region::Gap => {
            let v = unif.v_star(p.xi())?;
            Ok(m.theta_ratio_shifted(v, rho))
        }
        Region::Outside => {
            let u = unif.u_star(p.xi())?;
            Ok(sn_shift_ratio(p) * m.theta_ratio_shifted(u, rho))
        }
    }
}

/// `|sn(u* - rho) / sn(u* + rho)|` in closed form. The numerator difference
/// of square roots is rewritten to avoid cancellation for large `|xi|`.
fn sn_shift_ratio(p: &NormalizedProblem) -> f64 {
    let (a, b, x) = (p.alpha(), p.beta(), p.xi());
    let left = (1.0 + x) * (x - a);
    let right = (x - 1.0) * (x - b);
    let sum = left.sqrt() + right.sqrt();
    (x * (2.0 - a + b) - a - b).abs() / (sum * sum)
}

/// `(A1, A2)`; their ratio is the width of the bracket around `kappa`.
pub fn envelope_a(alpha: f64, beta: f64) -> (f64, f64) {
    let outer = (1.0 - alpha) * (1.0 + beta);
    let inner = (1.0 + alpha) * (1.0 - beta);
    let a1 = outer.powf(0.25) + inner.powf(0.25);
    let a2 = 8.0_f64.powf(0.25)
        * (outer.sqrt() + inner.sqrt()).powf(0.25)
        * ((1.0 - alpha * alpha) * (1.0 - beta * beta)).powf(1.0 / 16.0);
    (a1, a2)
}

/// `B` for a gap point:
/// `(Q + sqrt(1 - xi^2) - sqrt((xi - alpha)(beta - xi))) / (Q + sqrt(1 - xi^2) + sqrt(...))`
/// with `Q = ((1 - alpha^2)(1 - beta^2))^(1/4)`.
pub fn b_gap(p: &NormalizedProblem) -> Result<f64> {
    if p.region() != Region::Gap {
        return Err(Error::Region { expected: "gap" });
    }
    let (a, b, x) = (p.alpha(), p.beta(), p.xi());
    let q = ((1.0 - a * a) * (1.0 - b * b)).powf(0.25);
    let base = q + (1.0 - x * x).sqrt();
    let spread = ((x - a) * (b - x)).sqrt();
    Ok((base - spread) / (base + spread))
}

/// `B` for a point with `|xi| > 1`: the `dn`-shift fraction times the
/// closed-form `sn` ratio.
///
/// The leading factor `2 xi - xi alpha + xi beta - alpha - beta` enters with
/// its absolute value so the same expression covers `xi < -1`.
pub fn b_outside(p: &NormalizedProblem) -> Result<f64> {
    if p.region() != Region::Outside {
        return Err(Error::Region { expected: "outside" });
    }
    let (a, b, x) = (p.alpha(), p.beta(), p.xi());
    let sqrt_kp = ((1.0 + a) * (1.0 - b) / ((1.0 - a) * (1.0 + b))).powf(0.25);
    let lead = (2.0 * x - x * a + x * b - a - b).abs() * sqrt_kp + 2.0 * ((x - a) * (x - b)).sqrt();
    let tail = (b - a) * (x * x - 1.0).sqrt();
    Ok((lead - tail) / (lead + tail) * sn_shift_ratio(p))
}

/// `B` evaluated from the Jacobi functions themselves:
/// `(sqrt k' + dn(w + rho)) / (sqrt k' + dn(w - rho))` at the real preimage
/// `w` of `xi`, times `|sn(w - rho) / sn(w + rho)|` outside `[-1, 1]`.
/// Serves as the reference for the closed forms [`b_gap`] and [`b_outside`].
pub fn b_from_jacobi(p: &NormalizedProblem) -> Result<f64> {
    let unif = p.uniformize()?;
    let m = unif.modulus();
    let (rho, skp) = (unif.rho(), m.k_prime().sqrt());
    let w = match p.region() {
        Region::Gap => unif.v_star(p.xi())?,
        Region::Outside => unif.u_star(p.xi())?,
    };
    let (plus, minus) = (m.sn_cn_dn(w + rho), m.sn_cn_dn(w - rho));
    let dn_ratio = (skp + plus.dn) / (skp + minus.dn);
    Ok(match p.region() {
        Region::Gap => dn_ratio,
        Region::Outside => dn_ratio * (minus.sn / plus.sn).abs(),
    })
}

/// Lower bound, exact value and upper bound at one point.
pub fn kappa_bounds(p: &NormalizedProblem) -> Result<FactorEstimate> {
    let (alpha, beta) = (p.alpha(), p.beta());
    if p.boundary_distance() <= BOUNDARY_TOL {
        return Ok(FactorEstimate::boundary(alpha, beta));
    }
    let (a1, a2) = envelope_a(alpha, beta);
    let b = match p.region() {
        Region::Gap => b_gap(p)?,
        Region::Outside => b_outside(p)?,
    };
    let exact = kappa_exact(p)?;
    let estimate = FactorEstimate {
        lower: a2 / a1 * b,
        exact,
        upper: a1 / a2 * b,
        a1,
        a2,
        b,
    };
    debug_assert!(
        estimate.lower <= exact + 1e-12 && exact <= estimate.upper + 1e-12,
        "bracket violated at {p:?}: {estimate:?}"
    );
    Ok(estimate)
}

/// Gap point minimizing `kappa`: `alpha + zn(rho) sqrt((1 - alpha)(1 + beta))`.
pub fn xi_optimal(alpha: f64, beta: f64) -> Result<f64> {
    check_set(alpha, beta)?;
    let unif = Uniformization::new(alpha, beta)?;
    let zn = unif.modulus().zn(unif.rho());
    Ok(alpha + zn * ((1.0 - alpha) * (1.0 + beta)).sqrt())
}

/// The mirrored problem `[-1, -beta] ∪ [-alpha, 1]` at `-xi`, which has the
/// same modulus and the same convergence factor.
pub fn reflect(p: &NormalizedProblem) -> NormalizedProblem {
    NormalizedProblem::new(-p.beta(), -p.alpha(), -p.xi()).expect("reflection of a valid problem is valid")
}

/// Bounds for a raw two-interval set at the origin.
pub fn kappa_general(e: &IntervalPair) -> Result<FactorEstimate> {
    kappa_bounds(&normalize(e)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(a: f64, b: f64, x: f64) -> NormalizedProblem {
        NormalizedProblem::new(a, b, x).unwrap()
    }

    #[test]
    fn symmetric_gap_centre() {
        let k = kappa_exact(&problem(-0.5, 0.5, 0.0)).unwrap();
        assert!((k - (1.0_f64 / 3.0).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn single_interval_limit() {
        // [-1, alpha] shrinks to a point of zero capacity, leaving kappa of
        // [0.5, 1] at 0. The approach is only logarithmic in 1 + alpha.
        let limit = 3.0 - 8.0_f64.sqrt();
        let values: Vec<f64> = [1e-4, 1e-8, 1e-13]
            .iter()
            .map(|eps| kappa_exact(&problem(-1.0 + eps, 0.5, 0.0)).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]));
        assert!(values.iter().all(|k| *k > limit));
        // (kappa - limit) scales like 1 / log(1 / eps)
        let ratio = (values[2] - limit) / (values[1] - limit);
        assert!((ratio - 8.0 / 13.0).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn boundary_value() {
        assert_eq!(kappa_exact(&problem(-0.5, 0.5, -0.5 + 1e-15)).unwrap(), 1.0);
        let near = kappa_exact(&problem(-0.5, 0.5, -0.5 + 1e-9)).unwrap();
        assert!(near < 1.0 && near > 1.0 - 1e-3);
        let est = kappa_bounds(&problem(-0.5, 0.5, 1.0 + 1e-15)).unwrap();
        assert_eq!((est.lower, est.exact, est.upper), (1.0, 1.0, 1.0));
    }

    #[test]
    fn envelope_values() {
        let (a1, a2) = envelope_a(-0.5, 0.5);
        assert!((a1 - (1.5_f64.sqrt() + 0.5_f64.sqrt())).abs() < 1e-15);
        assert!((a2 - 2.0 * (9.0_f64 / 16.0).powf(1.0 / 16.0)).abs() < 1e-15);
        assert!((a1 / a2 - 1.001_292_861_985_353_8).abs() < 1e-12);

        let (a1, a2) = envelope_a(0.3, 0.3);
        let collapsed = 2.0 * (1.0_f64 - 0.09).powf(0.25);
        assert!((a1 - collapsed).abs() < 1e-15 && (a2 - collapsed).abs() < 1e-15);
    }

    #[test]
    fn b_gap_values() {
        assert!((b_gap(&problem(-0.5, 0.5, 0.0)).unwrap() - (1.0_f64 / 3.0).sqrt()).abs() < 1e-15);
        // golden ratio conjugate, mpmath
        let b = b_gap(&problem(-0.5, 0.5, 0.25)).unwrap();
        assert!((b - 0.618_033_988_749_894_8).abs() < 1e-15);
        assert!(b_gap(&problem(-0.5, 0.5, -0.5 + 1e-14)).unwrap() > 1.0 - 1e-6);
        assert_eq!(b_gap(&problem(-0.5, 0.5, 2.0)), Err(Error::Region { expected: "gap" }));
    }

    #[test]
    fn b_outside_values() {
        let b = b_outside(&problem(-0.5, 0.5, 2.0)).unwrap();
        assert!((b - 0.236_067_977_499_789_7).abs() < 1e-15);
        assert!(b_outside(&problem(-0.5, 0.5, 1.0 + 1e-14)).unwrap() > 1.0 - 1e-6);
        assert!(b_outside(&problem(-0.5, 0.5, 1e9)).unwrap() < 1e-8);
        assert_eq!(
            b_outside(&problem(-0.5, 0.5, 0.0)),
            Err(Error::Region { expected: "outside" })
        );
    }

    #[test]
    fn closed_forms_match_jacobi_evaluation() {
        for (a, b, x) in [
            (-0.5, 0.5, 0.25),
            (-0.9, 0.5, 0.1),
            (-0.5, 0.5, 2.0),
            (-0.9, 0.5, -3.0),
            (0.2, 0.7, 1.3),
        ] {
            let p = problem(a, b, x);
            let closed = match p.region() {
                Region::Gap => b_gap(&p).unwrap(),
                Region::Outside => b_outside(&p).unwrap(),
            };
            assert!((closed - b_from_jacobi(&p).unwrap()).abs() < 1e-12, "{a} {b} {x}");
        }
    }

    #[test]
    fn bounds_example() {
        let est = kappa_bounds(&problem(-0.5, 0.5, 0.0)).unwrap();
        assert!((est.lower - 0.576_604_798_764_730).abs() < 1e-12);
        assert!((est.exact - 0.577_350_269_189_626).abs() < 1e-12);
        assert!((est.upper - 0.578_096_703_404_895).abs() < 1e-12);
    }

    #[test]
    fn optimal_point_symmetric() {
        assert!(xi_optimal(-0.5, 0.5).unwrap().abs() < 1e-15);
        assert!(xi_optimal(-0.3, 0.3).unwrap().abs() < 1e-15);
        assert!(xi_optimal(0.5, 0.5).is_err());
    }

    #[test]
    fn reflection_preserves_kappa() {
        for &(a, b, x) in &[(-0.9, 0.5, 0.1), (-0.9, 0.5, 3.0), (-0.2, 0.1, -1.5)] {
            let p = problem(a, b, x);
            let r = reflect(&p);
            assert_eq!((r.alpha(), r.beta(), r.xi()), (-b, -a, -x));
            let diff = kappa_exact(&p).unwrap() - kappa_exact(&r).unwrap();
            assert!(diff.abs() < 1e-11, "{p:?}: {diff}");
        }
    }

    #[test]
    fn printed_reflection_partner_is_not_invariant() {
        // Equal sn^2(u*) on both sides, as in the printed remark, gives a
        // different point with a different factor.
        let (a, b, x) = (-0.9_f64, 0.5_f64, 0.1_f64);
        let c = (1.0 + x) * (1.0 - a) / (2.0 * (x - a));
        let partner = ((1.0 + b) - 2.0 * c * b) / (2.0 * c - (1.0 + b));
        let k = kappa_exact(&problem(a, b, x)).unwrap();
        let k_partner = kappa_exact(&problem(-b, -a, partner)).unwrap();
        assert!((k - 0.439_142_944_313_105).abs() < 1e-12);
        assert!((k_partner - 0.507_264_588_042_311).abs() < 1e-12);
    }

    #[test]
    fn affine_invariance() {
        let e = IntervalPair::new(-2.0, -1.0, 1.0, 2.0).unwrap();
        let base = kappa_general(&e).unwrap();
        assert!((base.exact - (1.0_f64 / 3.0).sqrt()).abs() < 1e-14);
        assert_eq!(kappa_general(&e.dilate(10.0).unwrap()).unwrap(), base);
        let shifted = kappa_general(&IntervalPair::new(1.0, 2.0, 3.0, 4.0).unwrap()).unwrap();
        let direct = kappa_bounds(&problem(-1.0 / 3.0, 1.0 / 3.0, -5.0 / 3.0)).unwrap();
        assert!((shifted.exact - direct.exact).abs() < 1e-14);
    }
}
