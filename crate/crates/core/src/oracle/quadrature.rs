//! Adaptive 7/15-point Gauss–Kronrod quadrature.

// Nodes and weights are quoted to full published precision.
#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

/// Tolerance and depth limit for adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Target absolute error of one integral.
    pub abs_tol: f64,
    /// Maximum bisection depth of any subinterval.
    pub max_refinements: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_refinements: 60,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, max_refinements: u32) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::Domain(format!("abs_tol = {abs_tol} must be positive")));
        }
        Ok(Self {
            abs_tol,
            max_refinements,
        })
    }
}

/// Integral value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Estimate {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Estimate { value, error }
}

/// Integrates `f` over `[a, b]` by recursive bisection, splitting the error
/// budget evenly between halves.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate> {
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let whole = kronrod(&f, a, b);
    refine(&f, a, b, whole, cfg.abs_tol, 0, cfg.max_refinements)
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: Estimate,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Result<Estimate> {
    if !whole.value.is_finite() {
        return Err(Error::Convergence(format!("non-finite integrand on [{a}, {b}]")));
    }
    let roundoff = 50.0 * f64::EPSILON * whole.value.abs();
    if whole.error <= tol.max(roundoff) {
        return Ok(whole);
    }
    if depth >= max_depth {
        return Err(Error::Convergence(format!(
            "quadrature error {:.3e} above {tol:.3e} at depth {depth} on [{a}, {b}]",
            whole.error
        )));
    }
    let mid = 0.5 * (a + b);
    let left = kronrod(f, a, mid);
    let right = kronrod(f, mid, b);
    let left = refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth)?;
    let right = refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth)?;
    Ok(Estimate {
        value: left.value + right.value,
        error: left.error + right.error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|x| x.powi(6) - 3.0 * x, 0.0, 2.0, &cfg).unwrap();
        assert!((r.value - (128.0 / 7.0 - 6.0)).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_and_peaked() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|x| (20.0 * x).sin().powi(2), 0.0, PI, &cfg).unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-10);
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, &cfg).unwrap();
        assert!((r.value - 2.0 * 100.0 * (100.0_f64).atan()).abs() < 1e-8);
    }

    #[test]
    fn depth_limit_reports_failure() {
        let cfg = QuadratureConfig::new(1e-14, 2).unwrap();
        let r = integrate(|x| 1.0 / x.sqrt(), 0.0, 1.0, &cfg);
        assert!(matches!(r, Err(Error::Convergence(_))));
        assert!(QuadratureConfig::new(0.0, 5).is_err());
    }
}
