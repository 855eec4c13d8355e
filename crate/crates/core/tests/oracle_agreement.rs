use ticf_core::oracle::{
    cap_oracle, green_value, kappa_oracle, kappa_polynomial, min_residual_norm, GreenFunction, QuadratureConfig,
    ResidualConfig,
};
use ticf_core::{cap_exact, kappa_exact, IntervalPair, NormalizedProblem};

const GEOMETRIES: [(f64, f64); 12] = [
    (-0.2, 0.1),
    (-0.5, 0.0),
    (-0.5, 0.5),
    (-0.9, -0.3),
    (-0.9, 0.5),
    (-0.9, 0.9),
    (-0.99, 0.99),
    (0.3, 0.8),
    (-0.7, -0.6),
    (0.0, 0.01),
    (-0.999, -0.998),
    (0.5, 0.999),
];

#[test]
fn green_function_matches_theta_formula() {
    for (a, b) in GEOMETRIES {
        let placements = [0.5 * (a + b), a + 1e-3 * (b - a), 1.5, -1.5, 5.0, -5.0];
        for x in placements {
            let exact = kappa_exact(&NormalizedProblem::new(a, b, x).unwrap()).unwrap();
            let e = IntervalPair::from_normalized(a, b, x).unwrap();
            let oracle = kappa_oracle(&e, 0.0).unwrap();
            assert!(
                (oracle - exact).abs() <= 1e-7 * exact,
                "({a}, {b}, {x}): {oracle} vs {exact}"
            );
        }
    }
}

#[test]
fn robin_constant_matches_capacity() {
    for a in [-0.8, -0.3, 0.3, 0.8] {
        for j in 0..50 {
            let b = a + 1e-3 + (1.0 - 2e-3 - a) * j as f64 / 49.0;
            let exact = cap_exact(a, b).unwrap();
            let oracle = cap_oracle(&IntervalPair::new(-1.0, a, b, 1.0).unwrap()).unwrap();
            assert!((oracle - exact).abs() <= 1e-5 * exact, "({a}, {b})");
        }
    }
}

#[test]
fn halving_tolerance_stays_within_error_estimate() {
    let e = IntervalPair::new(-1.0, -0.9, 0.5, 1.0).unwrap();
    let coarse = GreenFunction::new(&e, QuadratureConfig::new(1e-8, 60).unwrap()).unwrap();
    let fine = GreenFunction::new(&e, QuadratureConfig::new(5e-9, 60).unwrap()).unwrap();
    for x in [-0.3, 0.2, 1.7, -40.0] {
        let c = coarse.value_with_error(x).unwrap();
        let f = fine.value(x).unwrap();
        assert!((c.value - f).abs() <= c.error.max(1e-14), "x = {x}");
    }
    assert!(green_value(&e, 0.2).unwrap() > 0.0);
}

#[test]
fn residual_norms_are_monotone_and_converge() {
    let e = IntervalPair::new(-1.0, -0.5, 0.5, 1.0).unwrap();
    let cfg = ResidualConfig::default();
    let samples: Vec<f64> = [1, 3, 6, 9, 14, 20]
        .iter()
        .map(|&n| min_residual_norm(&e, n, &cfg).unwrap())
        .collect();
    assert!(samples.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-9)));
    let fit = kappa_polynomial(&e, &cfg).unwrap();
    assert!((fit.kappa - 3.0_f64.sqrt().recip()).abs() < 0.02 * 0.577_350_3);
}
