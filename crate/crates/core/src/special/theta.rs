//! Jacobi theta functions in Jacobi's notation (Theta, H, H1, Theta1) and
//! the zeta function `zn`, evaluated from the nome series of `Theta`.

use std::f64::consts::PI;

use super::Modulus;

/// Terms are dropped once `q^(n^2)` falls below this.
const SERIES_CUTOFF: f64 = 1.0 / 9_007_199_254_740_992.0; // 2^-53
const SERIES_MAX_TERMS: u32 = 64;

/// `H(u)`, `H1(u)` and `Theta1(u)` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaFamily {
    pub h: f64,
    pub h1: f64,
    pub theta1: f64,
}

impl Modulus {
    fn series_angle(&self, u: f64) -> f64 {
        // Theta has period 2K, i.e. pi in the series angle.
        let v = PI * u / (2.0 * self.big_k());
        v - PI * (v / PI).round()
    }

    /// Returns `(Theta(u), dTheta/dv)` where `v = pi u / (2K)`.
    fn theta_series(&self, u: f64) -> (f64, f64) {
        let v = self.series_angle(u);
        let q = self.nome();
        let mut value = 1.0;
        let mut slope = 0.0;
        let mut sign = -1.0;
        for n in 1..=SERIES_MAX_TERMS {
            let weight = q.powi((n * n) as i32);
            if weight < SERIES_CUTOFF {
                break;
            }
            let (s, c) = (2.0 * n as f64 * v).sin_cos();
            value += 2.0 * sign * weight * c;
            slope -= 4.0 * sign * n as f64 * weight * s;
            sign = -sign;
        }
        (value, slope)
    }

    /// Jacobi's `Theta(u)`, the theta_4 series with argument `pi u / (2K)`.
    pub fn theta(&self, u: f64) -> f64 {
        self.theta_series(u).0
    }

    /// Jacobi's zeta function, the logarithmic derivative of `Theta`.
    pub fn zn(&self, u: f64) -> f64 {
        let (value, slope) = self.theta_series(u);
        PI / (2.0 * self.big_k()) * slope / value
    }

    /// `H`, `H1` and `Theta1` from `Theta` and the Jacobi triple.
    pub fn theta_family(&self, u: f64) -> ThetaFamily {
        let theta = self.theta(u);
        let t = self.sn_cn_dn(u);
        let sk = self.k().sqrt();
        let skp = self.k_prime().sqrt();
        ThetaFamily {
            h: sk * t.sn * theta,
            h1: sk / skp * t.cn * theta,
            theta1: t.dn * theta / skp,
        }
    }

    /// `Theta(u - a) / Theta(u + a)`.
    pub fn theta_ratio_shifted(&self, u: f64, a: f64) -> f64 {
        self.theta(u - a) / self.theta(u + a)
    }

    /// Derivative in `u` of [`Modulus::theta_ratio_shifted`] in closed form.
    pub fn theta_ratio_shifted_derivative(&self, u: f64, a: f64) -> f64 {
        let k2 = self.k() * self.k();
        let su = self.sn_cn_dn(u).sn;
        let ta = self.sn_cn_dn(a);
        let bracket =
            2.0 * self.zn(a) - 2.0 * k2 * su * su * ta.sn * ta.cn * ta.dn / (1.0 - k2 * su * su * ta.sn * ta.sn);
        -self.theta_ratio_shifted(u, a) * bracket
    }
}
