use kstruve::foxwright::{eval_fox_wright, FoxWrightSpec};
use kstruve::Error;
use proptest::prelude::*;

const ZS: [f64; 5] = [-2.0, -0.5, 0.0, 0.5, 2.0];

fn spec(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> FoxWrightSpec {
    FoxWrightSpec::new(upper.to_vec(), lower.to_vec()).unwrap()
}

#[test]
fn exponential_reduction() {
    let s = spec(&[(1.0, 1.0)], &[(1.0, 1.0)]);
    for z in ZS {
        let v = eval_fox_wright(&s, z, 1e-13).unwrap().value;
        assert!((v - z.exp()).abs() <= 1e-12 * z.exp(), "z={z}: {v}");
    }
}

#[test]
fn shifted_exponential_reduction() {
    let s = spec(&[(1.0, 1.0)], &[(2.0, 1.0)]);
    for z in ZS {
        let expected = if z == 0.0 { 1.0 } else { z.exp_m1() / z };
        let v = eval_fox_wright(&s, z, 1e-13).unwrap().value;
        assert!((v - expected).abs() <= 1e-12 * expected.abs(), "z={z}: {v} vs {expected}");
    }
}

#[test]
fn zero_argument_is_leading_term() {
    // Γ(2.5) Γ(1) / (Γ(4) Γ(1.5)) = 1.5 / 6.
    let s = spec(&[(2.5, 2.0), (1.0, 1.0)], &[(4.0, 2.0), (1.5, 1.0)]);
    let r = eval_fox_wright(&s, 0.0, 1e-12).unwrap();
    assert_eq!(r.work, 1);
    assert!((r.value - 0.25).abs() < 1e-15);
}

#[test]
fn convergence_condition_is_enforced() {
    let s = spec(&[(1.0, 2.0)], &[(1.0, 1.0)]);
    assert!(matches!(eval_fox_wright(&s, 0.5, 1e-10), Err(Error::ConvergenceCondition { .. })));
}

#[test]
fn error_estimate_is_honest_against_tighter_rerun() {
    let specs = [
        spec(&[(1.0, 1.0)], &[(1.0, 1.0)]),
        spec(&[(2.6, 2.0), (1.0, 1.0)], &[(5.1, 2.0), (1.9, 1.0), (1.5, 1.0)]),
        spec(&[(2.0, 2.0)], &[(4.5, 2.0), (1.5, 1.0)]),
        spec(&[(0.5, 0.5)], &[(1.0, 1.5)]),
    ];
    for s in &specs {
        for z in [-8.0, -2.0, -0.3, 0.7, 3.0, 9.0] {
            for tol in [1e-4, 1e-7, 1e-10] {
                let loose = eval_fox_wright(s, z, tol).unwrap();
                let tight = eval_fox_wright(s, z, tol / 2.0).unwrap();
                assert!(
                    (loose.value - tight.value).abs() <= loose.err_estimate,
                    "{s:?} z={z} tol={tol}"
                );
            }
        }
    }
}

#[test]
fn heavy_cancellation_is_reported() {
    // e^{-60} from its Taylor series loses every significant digit.
    let s = spec(&[(1.0, 1.0)], &[(1.0, 1.0)]);
    assert!(matches!(eval_fox_wright(&s, -60.0, 1e-10), Err(Error::PrecisionLoss { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pair_order_does_not_change_bits(
        a in 0.1f64..4.0, b in 0.1f64..4.0, c in 0.5f64..5.0, d in 0.5f64..5.0,
        z in -3.0f64..3.0,
    ) {
        let s1 = spec(&[(a, 1.0), (b, 2.0)], &[(c, 2.0), (d, 1.0), (1.5, 1.0)]);
        let s2 = spec(&[(b, 2.0), (a, 1.0)], &[(1.5, 1.0), (d, 1.0), (c, 2.0)]);
        let v1 = eval_fox_wright(&s1, z, 1e-10).unwrap().value;
        let v2 = eval_fox_wright(&s2, z, 1e-10).unwrap().value;
        prop_assert_eq!(v1.to_bits(), v2.to_bits());
    }

    #[test]
    fn mittag_leffler_two_matches_cosh(z in -4.0f64..4.0) {
        // ₁Ψ₁[(1,1);(1,2)](w) = E_2(w), and E_2(z²) = cosh z.
        let s = spec(&[(1.0, 1.0)], &[(1.0, 2.0)]);
        let v = eval_fox_wright(&s, z * z, 1e-13).unwrap().value;
        prop_assert!((v - z.cosh()).abs() <= 1e-12 * z.cosh());
        let v = eval_fox_wright(&s, -z * z, 1e-13).unwrap().value;
        prop_assert!((v - z.cos()).abs() <= 1e-12);
    }
}
