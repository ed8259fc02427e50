use proptest::prelude::*;
use regraph::numerics::{solve_monotone, Bracket, DEFAULT_REL_TOL};
use regraph::{dual_spectrum, from_dual, lambda_spectrum, phi, to_dual, GraphParams};

fn cubic(a: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| x * x * x + a * x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_residual_within_tolerance(a in 0.1f64..10.0, target in -50.0f64..50.0) {
        let f = cubic(a);
        let bracket = Bracket::increasing(-10.0, 10.0).unwrap();
        let r = solve_monotone(&f, target, &bracket, DEFAULT_REL_TOL).unwrap();
        prop_assert!(bracket.contains(r.root));
        prop_assert!((f(r.root) - target).abs() <= DEFAULT_REL_TOL * target.abs().max(1.0));
    }

    #[test]
    fn solver_is_deterministic(a in 0.1f64..10.0, target in -50.0f64..50.0) {
        let bracket = Bracket::increasing(-10.0, 10.0).unwrap();
        let r1 = solve_monotone(cubic(a), target, &bracket, 1e-10).unwrap();
        let r2 = solve_monotone(cubic(a), target, &bracket, 1e-10).unwrap();
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn tighter_tolerance_never_worse(a in 0.1f64..10.0, target in -50.0f64..50.0) {
        let bracket = Bracket::increasing(-10.0, 10.0).unwrap();
        let coarse = solve_monotone(cubic(a), target, &bracket, 1e-8).unwrap();
        let fine = solve_monotone(cubic(a), target, &bracket, 1e-9).unwrap();
        prop_assert!(fine.residual.abs() <= coarse.residual.abs());
    }

    #[test]
    fn spectrum_is_geometric_and_ordered(n in 1u32..40, k in 0.0f64..8.0) {
        let lambda = (1.0 / n as f64) * (1.0 + k).powi(2);
        let s = lambda_spectrum(&GraphParams::new(n, lambda).unwrap()).unwrap();
        prop_assert_eq!(s.values.len(), n as usize + 2);
        prop_assert_eq!(s.values[0], lambda);
        let d = 1.0 / n as f64;
        prop_assert!(s.values[1] <= 1.0 + 1e-12 && s.values[1] >= d * (1.0 - 1e-12));
        prop_assert!(*s.values.last().unwrap() <= d * (1.0 + 1e-12));
        for p in s.values.windows(2) {
            prop_assert!(p[1] <= p[0]);
            prop_assert!((p[1] / p[0] - s.quotient).abs() <= 1e-9 * s.quotient.max(1e-300));
        }
    }

    #[test]
    fn duality_round_trip(n in 1u32..40, k in 0.0f64..8.0) {
        let lambda = (1.0 / n as f64) * (1.0 + k).powi(2);
        let s = lambda_spectrum(&GraphParams::new(n, lambda).unwrap()).unwrap();
        let back = from_dual(&to_dual(&s).unwrap()).unwrap();
        for (a, b) in s.values.iter().zip(&back.values) {
            prop_assert!((a - b).abs() <= 1e-9 * a.abs());
        }
    }

    #[test]
    fn dual_matches_phi(n in 2u32..40, k in 0.0f64..50.0) {
        let w = n as f64 * (1.0 + k);
        let d = dual_spectrum(n, w).unwrap();
        let p = phi(n, w).unwrap();
        prop_assert!((d.values[1] - p).abs() <= 1e-12 * p);
        prop_assert!(p >= n as f64 * (1.0 - 1e-12) && p <= w * (1.0 + 1e-12));
    }
}
