use proptest::prelude::*;
use ticf_core::factor::{b_from_jacobi, b_gap, b_outside, envelope_a, kappa_bounds, kappa_exact, xi_optimal};
use ticf_core::geometry::{IntervalPair, NormalizedProblem, Region};
use ticf_core::kappa_general;

const FIGURE_PAIRS: [(f64, f64); 6] = [
    (-0.2, 0.1),
    (-0.5, 0.0),
    (-0.5, 0.5),
    (-0.9, -0.3),
    (-0.9, 0.5),
    (-0.9, 0.9),
];

fn check_sandwich(a: f64, b: f64, x: f64) {
    let p = NormalizedProblem::new(a, b, x).unwrap();
    let est = kappa_bounds(&p).unwrap();
    assert!(
        est.lower - est.exact <= 1e-12,
        "lower above exact at ({a}, {b}, {x}): {est:?}"
    );
    assert!(
        est.exact - est.upper <= 1e-12,
        "exact above upper at ({a}, {b}, {x}): {est:?}"
    );
    // kappa / B lies in [A2/A1, A1/A2], so upper / exact can reach (A1/A2)^2.
    let (a1, a2) = envelope_a(a, b);
    assert!(est.upper / est.exact <= (a1 / a2).powi(2) + 1e-12);
    if a == -b {
        assert!(est.upper / est.exact <= a1 / a2 + 1e-12);
    }
}

#[test]
fn sandwich_over_gap_sweeps() {
    for (a, b) in FIGURE_PAIRS {
        for j in 1..=1000 {
            check_sandwich(a, b, a + (b - a) * j as f64 / 1001.0);
        }
    }
}

#[test]
fn sandwich_outside() {
    for (a, b) in FIGURE_PAIRS {
        for j in 0..1000 {
            // |xi| from just above 1 to 1e3, both sides.
            let r = 1.0 + 10f64.powf(-6.0 + 9.0 * (j / 2) as f64 / 499.0);
            check_sandwich(a, b, if j % 2 == 0 { r } else { -r });
        }
    }
}

#[test]
fn envelope_ratio_at_symmetric_pair() {
    let (a1, a2) = envelope_a(-0.5, 0.5);
    assert!((a1 / a2 - 1.001_292_8).abs() < 1e-6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn b_closed_forms_match_jacobi(a in -0.98f64..0.9, w in 0.02f64..0.98, t in 0.01f64..0.99, r in 1.001f64..50.0, left in any::<bool>()) {
        let b = a + w * (0.99 - a);
        let gap = NormalizedProblem::new(a, b, a + t * (b - a)).unwrap();
        prop_assert!((b_gap(&gap).unwrap() - b_from_jacobi(&gap).unwrap()).abs() < 1e-12);
        let out = NormalizedProblem::new(a, b, if left { -r } else { r }).unwrap();
        prop_assert!((b_outside(&out).unwrap() - b_from_jacobi(&out).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn reflection_invariance(a in -0.98f64..0.9, w in 0.02f64..0.98, x in -5.0f64..5.0) {
        let b = a + w * (0.99 - a);
        prop_assume!((a < x && x < b) || x.abs() > 1.0);
        let p = NormalizedProblem::new(a, b, x).unwrap();
        let q = ticf_core::factor::reflect(&p);
        prop_assert!((kappa_exact(&p).unwrap() - kappa_exact(&q).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn affine_invariance(a in -0.98f64..0.9, w in 0.02f64..0.98, x in -5.0f64..5.0, scale in 0.01f64..100.0) {
        let b = a + w * (0.99 - a);
        prop_assume!((a < x && x < b) || x.abs() > 1.0);
        let e = IntervalPair::from_normalized(a, b, x).unwrap().dilate(scale).unwrap();
        let exact = kappa_exact(&NormalizedProblem::new(a, b, x).unwrap()).unwrap();
        prop_assert!((kappa_general(&e).unwrap().exact - exact).abs() < 1e-10);
    }
}

/// Golden-section search down to a bracket of 1e-5, then one parabolic step
/// through the bracket. Shrinking further only resolves roundoff, since
/// `kappa` is flat at its minimum.
fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut c, mut d) = (hi - g * (hi - lo), lo + g * (hi - lo));
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > 1e-5 {
        if fc < fd {
            (hi, d, fd) = (d, c, fc);
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            (lo, c, fc) = (c, d, fd);
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    let (x1, f1) = if fc < fd { (c, fc) } else { (d, fd) };
    let (f0, f2) = (f(lo), f(hi));
    let num = (x1 - lo).powi(2) * (f1 - f2) - (x1 - hi).powi(2) * (f1 - f0);
    let den = (x1 - lo) * (f1 - f2) - (x1 - hi) * (f1 - f0);
    x1 - 0.5 * num / den
}

#[test]
fn optimal_point_matches_golden_section() {
    let cases = [
        (-0.9, 0.5),
        (-0.2, 0.1),
        (-0.5, 0.0),
        (-0.9, -0.3),
        (0.1, 0.8),
        (-0.99, 0.2),
    ];
    for (a, b) in cases {
        let kappa = |x: f64| kappa_exact(&NormalizedProblem::new(a, b, x).unwrap()).unwrap();
        let numeric = golden_section(kappa, a + 1e-9, b - 1e-9);
        let closed = xi_optimal(a, b).unwrap();
        assert!((closed - numeric).abs() < 1e-8, "({a}, {b}): {closed} vs {numeric}");
        for j in 1..1000 {
            let x = a + (b - a) * j as f64 / 1000.0;
            assert!(kappa(closed) <= kappa(x) + 1e-15);
        }
    }
    assert!((xi_optimal(-0.9, 0.5).unwrap() - -0.306_276_556_765_433).abs() < 1e-12);
    assert!(xi_optimal(-0.3, 0.3).unwrap().abs() < 1e-12);
}

#[test]
fn regions_pick_their_formula() {
    let gap = NormalizedProblem::new(-0.5, 0.5, 0.25).unwrap();
    assert_eq!(gap.region(), Region::Gap);
    assert!((b_gap(&gap).unwrap() - 0.618_033_988_749_894_8).abs() < 1e-13);
    let out = NormalizedProblem::new(-0.5, 0.5, 2.0).unwrap();
    assert!((b_outside(&out).unwrap() - 0.236_067_977_499_789_7).abs() < 1e-13);
}
