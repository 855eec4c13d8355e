use std::f64::consts::PI;

use proptest::prelude::*;
use ticf_core::oracle::{integrate, QuadratureConfig};
use ticf_core::special::Modulus;

fn modulus() -> impl Strategy<Value = Modulus> {
    (0.01f64..0.995).prop_map(|k| Modulus::new(k).unwrap())
}

proptest! {
    #[test]
    fn pythagorean_identities(m in modulus(), t in -4.0f64..4.0) {
        let u = t * m.big_k();
        let j = m.sn_cn_dn(u);
        let k2 = m.k() * m.k();
        prop_assert!((j.sn * j.sn + j.cn * j.cn - 1.0).abs() < 1e-12);
        prop_assert!((k2 * j.sn * j.sn + j.dn * j.dn - 1.0).abs() < 1e-12);
        prop_assert!(j.dn >= m.k_prime() - 1e-12 && j.dn <= 1.0 + 1e-15);
    }

    #[test]
    fn quarter_periods(m in modulus(), t in -2.0f64..2.0) {
        let u = t * m.big_k();
        let (a, b) = (m.sn_cn_dn(u), m.sn_cn_dn(u + 4.0 * m.big_k()));
        prop_assert!((a.sn - b.sn).abs() < 1e-12);
        prop_assert!((a.cn - b.cn).abs() < 1e-12);
        // sn(u + 2K) = -sn(u)
        let c = m.sn_cn_dn(u + 2.0 * m.big_k());
        prop_assert!((a.sn + c.sn).abs() < 1e-12);
        prop_assert!((a.dn - c.dn).abs() < 1e-12);
    }

    #[test]
    fn zn_derivative(m in modulus(), t in 0.05f64..0.95) {
        let u = t * m.big_k();
        let h = 1e-5 * m.big_k();
        let fd = (m.zn(u + h) - m.zn(u - h)) / (2.0 * h);
        let dn = m.sn_cn_dn(u).dn;
        let expected = dn * dn - m.e_complete() / m.big_k();
        prop_assert!((fd - expected).abs() < 1e-8, "{fd} vs {expected}");
    }

    #[test]
    fn theta_is_positive_and_even(m in modulus(), t in -3.0f64..3.0) {
        let u = t * m.big_k();
        prop_assert!(m.theta(u) > 0.0);
        prop_assert!((m.theta(u) - m.theta(-u)).abs() < 1e-14);
        prop_assert!((m.zn(u) + m.zn(-u)).abs() < 1e-13);
    }

    #[test]
    fn shifted_ratio_derivative(m in modulus(), t in 0.0f64..1.0, s in 0.05f64..0.95) {
        let (u, a) = (t * m.big_k(), s * m.big_k());
        let h = 1e-5 * m.big_k();
        let fd = (m.theta_ratio_shifted(u + h, a) - m.theta_ratio_shifted(u - h, a)) / (2.0 * h);
        let exact = m.theta_ratio_shifted_derivative(u, a);
        prop_assert!((fd - exact).abs() <= 1e-6 * exact.abs().max(1e-3), "{fd} vs {exact}");
    }

    #[test]
    fn incomplete_integral_inverts_sn(m in modulus(), t in 0.0f64..1.0) {
        let u = t * m.big_k();
        let phi = m.sn_cn_dn(u).sn.asin();
        let back = ticf_core::special::incomplete_f(phi, m.k()).unwrap();
        // sn is flat near K, so compare in the function value.
        prop_assert!((m.sn_cn_dn(back).sn - m.sn_cn_dn(u).sn).abs() < 1e-13);
    }
}

#[test]
fn complete_integral_matches_quadrature() {
    // K = ∫_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2)); t = 1 - s^2 removes the endpoint root.
    let cfg = QuadratureConfig::new(1e-13, 60).unwrap();
    for k in [0.1, 0.5, 0.5_f64.sqrt(), 0.9, 0.99] {
        let m = Modulus::new(k).unwrap();
        let integrand = |s: f64| {
            let t = 1.0 - s * s;
            2.0 / ((1.0 + t) * (1.0 - k * k * t * t)).sqrt()
        };
        let q = integrate(integrand, 0.0, 1.0, &cfg).unwrap();
        assert!((q.value - m.big_k()).abs() < 1e-12 * m.big_k(), "k = {k}");
    }
}

#[test]
fn landen_agrees_with_series_at_lemniscatic_modulus() {
    let m = Modulus::new(0.5_f64.sqrt()).unwrap();
    assert!((m.big_k() - 1.854_074_677_301_371_9).abs() < 1e-14);
    assert!((m.nome() - (-PI).exp()).abs() < 1e-15);
    // Theta(0)^2 = 2 k' K / pi at any modulus.
    assert!((m.theta(0.0).powi(2) - 2.0 * m.k_prime() * m.big_k() / PI).abs() < 1e-14);
}
