//! Green's function of the complement of two real intervals with pole at
//! infinity, by direct quadrature of its derivative density
//!
//! ```text
//! g'(t) = (t - z0) / sqrt(|(t - a1)(t - a2)(t - a3)(t - a4)|)
//! ```
//!
//! where `z0` in the gap makes the integral across the gap vanish. This path
//! shares no code with the theta-function evaluators and serves as their
//! independent check. Square-root endpoint singularities are removed by the
//! substitution `t = endpoint ± s^2`.

use crate::error::{Error, Result};
use crate::geometry::IntervalPair;

use super::quadrature::{integrate, Estimate, QuadratureConfig};

/// Green's function of `C \ E` for one fixed set.
#[derive(Debug, Clone, Copy)]
pub struct GreenFunction {
    a: [f64; 4],
    z0: f64,
    cfg: QuadratureConfig,
}

impl GreenFunction {
    pub fn new(e: &IntervalPair, cfg: QuadratureConfig) -> Result<Self> {
        let a = e.endpoints();
        let (mass, first) = gap_moments(&a, &cfg)?;
        let z0 = first.value / mass.value;
        if !(a[1] < z0 && z0 < a[2]) {
            return Err(Error::Convergence(format!(
                "gap zero {z0} escaped ({}, {})",
                a[1], a[2]
            )));
        }
        Ok(Self { a, z0, cfg })
    }

    /// The critical point `z0` of the Green's function in the gap.
    pub fn gap_zero(&self) -> f64 {
        self.z0
    }

    /// `∫ (t - z) / sqrt|R(t)| dt` over the gap. Linear in `z`, zero at `z0`.
    pub fn gap_moment(&self, z: f64) -> Result<f64> {
        let (mass, first) = gap_moments(&self.a, &self.cfg)?;
        Ok(first.value - z * mass.value)
    }

    /// `g(x)` with an absolute error estimate, for real `x` outside the open
    /// intervals. Endpoints give 0.
    pub fn value_with_error(&self, x: f64) -> Result<Estimate> {
        let [a1, a2, a3, a4] = self.a;
        if !x.is_finite() {
            return Err(Error::Domain(format!("evaluation point {x} is not finite")));
        }
        if self.a.contains(&x) {
            return Ok(Estimate { value: 0.0, error: 0.0 });
        }
        if (a1 < x && x < a2) || (a3 < x && x < a4) {
            return Err(Error::Domain(format!("x = {x} lies inside E")));
        }
        if x > a4 {
            outer_integral(&self.a, self.z0, x, &self.cfg)
        } else if x < a1 {
            let mirrored = [-a4, -a3, -a2, -a1];
            outer_integral(&mirrored, -self.z0, -x, &self.cfg)
        } else if x - a2 <= a3 - x {
            let r = gap_partial(&self.a, self.z0, x, &self.cfg)?;
            Ok(Estimate {
                value: r.value.abs(),
                error: r.error,
            })
        } else {
            let mirrored = [-a4, -a3, -a2, -a1];
            let r = gap_partial(&mirrored, -self.z0, -x, &self.cfg)?;
            Ok(Estimate {
                value: r.value.abs(),
                error: r.error,
            })
        }
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        Ok(self.value_with_error(x)?.value)
    }
}

/// `(∫ w, ∫ t w)` over the gap with `w = 1/sqrt|R|`, each half of the gap
/// substituted from its own endpoint.
fn gap_moments(a: &[f64; 4], cfg: &QuadratureConfig) -> Result<(Estimate, Estimate)> {
    let [a1, a2, a3, a4] = *a;
    let half = 0.5 * (a3 - a2);
    let reach = half.sqrt();
    // t = a2 + s^2: w dt = 2 ds / sqrt((t - a1)(a3 - t)(a4 - t))
    let left = |s: f64| {
        let t = a2 + s * s;
        2.0 / ((t - a1) * (a3 - t) * (a4 - t)).sqrt()
    };
    // t = a3 - s^2: w dt = 2 ds / sqrt((t - a1)(t - a2)(a4 - t))
    let right = |s: f64| {
        let t = a3 - s * s;
        2.0 / ((t - a1) * (t - a2) * (a4 - t)).sqrt()
    };
    let sub_cfg = QuadratureConfig {
        abs_tol: 0.25 * cfg.abs_tol,
        ..*cfg
    };
    let mass_l = integrate(left, 0.0, reach, &sub_cfg)?;
    let mass_r = integrate(right, 0.0, reach, &sub_cfg)?;
    let first_l = integrate(|s| (a2 + s * s) * left(s), 0.0, reach, &sub_cfg)?;
    let first_r = integrate(|s| (a3 - s * s) * right(s), 0.0, reach, &sub_cfg)?;
    Ok((
        Estimate {
            value: mass_l.value + mass_r.value,
            error: mass_l.error + mass_r.error,
        },
        Estimate {
            value: first_l.value + first_r.value,
            error: first_l.error + first_r.error,
        },
    ))
}

/// `∫_{a2}^{x} (t - z0) / sqrt|R(t)| dt` for `x` in the left half of the gap.
fn gap_partial(a: &[f64; 4], z0: f64, x: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    let [a1, a2, a3, a4] = *a;
    let integrand = |s: f64| {
        let t = a2 + s * s;
        2.0 * (t - z0) / ((t - a1) * (a3 - t) * (a4 - t)).sqrt()
    };
    integrate(integrand, 0.0, (x - a2).sqrt(), cfg)
}

/// `∫_{a4}^{x} (t - z0) / sqrt(R(t)) dt` for `x > a4`: a square-root
/// substitution near `a4`, then `t = a4 + h e^y` for the logarithmic tail.
fn outer_integral(a: &[f64; 4], z0: f64, x: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    let [a1, a2, a3, a4] = *a;
    let h = (a4 - a1).min(x - a4);
    let near = |s: f64| {
        let t = a4 + s * s;
        2.0 * (t - z0) / ((t - a1) * (t - a2) * (t - a3)).sqrt()
    };
    let sub_cfg = QuadratureConfig {
        abs_tol: 0.5 * cfg.abs_tol,
        ..*cfg
    };
    let head = integrate(near, 0.0, h.sqrt(), &sub_cfg)?;
    if x - a4 <= h {
        return Ok(head);
    }
    let far = |y: f64| {
        let d = h * y.exp();
        let t = a4 + d;
        (t - z0) * d.sqrt() / ((t - a1) * (t - a2) * (t - a3)).sqrt()
    };
    let tail = integrate(far, 0.0, ((x - a4) / h).ln(), &sub_cfg)?;
    Ok(Estimate {
        value: head.value + tail.value,
        error: head.error + tail.error,
    })
}

/// Critical point of the Green's function in the gap.
pub fn green_gap_zero(e: &IntervalPair) -> Result<f64> {
    Ok(GreenFunction::new(e, QuadratureConfig::default())?.gap_zero())
}

/// `g(x; C \ E, ∞)` for real `x` not in the open intervals of `E`.
pub fn green_value(e: &IntervalPair, x: f64) -> Result<f64> {
    GreenFunction::new(e, QuadratureConfig::default())?.value(x)
}

/// `exp(-g(x))`, the convergence factor of `E` at `x`.
pub fn kappa_oracle(e: &IntervalPair, x: f64) -> Result<f64> {
    Ok((-green_value(e, x)?).exp())
}

/// Logarithmic capacity from the Robin constant: `|x - c| exp(-g(x))` at two
/// distances from the centre `c` of the hull, combined to cancel the
/// `O(1/|x|)` term.
pub fn cap_oracle(e: &IntervalPair) -> Result<f64> {
    let green = GreenFunction::new(e, QuadratureConfig::default())?;
    let [a1, _, _, a4] = e.endpoints();
    let centre = 0.5 * (a1 + a4);
    let width = a4 - a1;
    let (d1, d2) = (1e6 * width, 1e7 * width);
    let c1 = d1 * (-green.value(centre + d1)?).exp();
    let c2 = d2 * (-green.value(centre + d2)?).exp();
    Ok((d2 * c2 - d1 * c1) / (d2 - d1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: [f64; 4]) -> IntervalPair {
        IntervalPair::new(a[0], a[1], a[2], a[3]).unwrap()
    }

    #[test]
    fn symmetric_gap_zero() {
        assert!(green_gap_zero(&pair([-1.0, -0.5, 0.5, 1.0])).unwrap().abs() < 1e-13);
        assert!((green_gap_zero(&pair([1.0, 2.0, 3.0, 4.0])).unwrap() - 2.5).abs() < 1e-13);
    }

    #[test]
    fn asymmetric_gap_zero_sign_change() {
        let g = GreenFunction::new(&pair([-1.0, -0.5, 0.25, 1.0]), QuadratureConfig::default()).unwrap();
        let z0 = g.gap_zero();
        assert!(-0.5 < z0 && z0 < 0.25);
        assert!(g.gap_moment(z0 - 1e-6).unwrap() > 0.0);
        assert!(g.gap_moment(z0 + 1e-6).unwrap() < 0.0);
        assert!(g.gap_moment(z0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn symmetric_value_at_centre() {
        let g = green_value(&pair([-1.0, -0.5, 0.5, 1.0]), 0.0).unwrap();
        assert!((g - 0.5 * 3.0_f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn boundary_and_inside() {
        let e = pair([-1.0, -0.5, 0.5, 1.0]);
        assert_eq!(green_value(&e, 1.0).unwrap(), 0.0);
        assert_eq!(kappa_oracle(&e, -0.5).unwrap(), 1.0);
        assert!(green_value(&e, 1.0 + 1e-12).unwrap() < 1e-5);
        assert!(matches!(green_value(&e, 0.75), Err(Error::Domain(_))));
    }

    #[test]
    fn far_field_is_logarithmic() {
        let e = pair([-1.0, -0.5, 0.5, 1.0]);
        let g = green_value(&e, 1e6).unwrap();
        let expected = (1e6 / (3.0_f64.sqrt() / 4.0)).ln();
        assert!((g - expected).abs() < 1e-9);
    }

    #[test]
    fn both_sides_agree() {
        let e = pair([-1.0, -0.9, 0.5, 1.0]);
        let g = green_value(&e, -3.0).unwrap();
        let mirrored = green_value(&pair([-1.0, -0.5, 0.9, 1.0]), 3.0).unwrap();
        assert!((g - mirrored).abs() < 1e-10);
    }

    #[test]
    fn capacity_examples() {
        let c = cap_oracle(&pair([-1.0, -0.5, 0.5, 1.0])).unwrap();
        assert!((c - 3.0_f64.sqrt() / 4.0).abs() < 1e-6);
        let c = cap_oracle(&pair([1.0, 2.0, 3.0, 4.0])).unwrap();
        assert!((c - 0.5_f64.sqrt()).abs() < 1e-6);
    }
}
