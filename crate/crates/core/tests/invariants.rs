use msr_core::bargmann::bi3;
use msr_core::geodesic::{curve_length, geodesic_between, geodesic_residual};
use msr_core::{decompose, reconstruct, Constellation, PureState, Star};
use num_complex::Complex64;
use proptest::prelude::*;

fn state(dim: usize) -> impl Strategy<Value = PureState> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_filter_map("zero vector", |v| {
        PureState::normalized(v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).ok()
    })
}

fn sized_state() -> impl Strategy<Value = PureState> {
    (2usize..=8).prop_flat_map(state)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reconstruct_inverts_decompose(psi in sized_state()) {
        let back = reconstruct(&decompose(&psi).unwrap()).unwrap();
        prop_assert!(psi.inner(&back).unwrap().norm() > 1.0 - 1e-10);
    }

    #[test]
    fn constellation_ignores_global_phase(psi in sized_state(), phi in -3.0f64..3.0) {
        let a = decompose(&psi).unwrap();
        let b = decompose(&psi.with_phase(phi)).unwrap();
        prop_assert!(a.matching_distance(&b).unwrap() < 1e-6);
    }

    #[test]
    fn conjugate_state_has_mirrored_stars(psi in sized_state()) {
        let conj = PureState::new(psi.amps().iter().map(|a| a.conj()).collect()).unwrap();
        let a = decompose(&psi).unwrap().conj();
        let b = decompose(&conj).unwrap();
        prop_assert!(a.matching_distance(&b).unwrap() < 1e-6);
    }

    #[test]
    fn stars_lie_on_the_unit_sphere(psi in sized_state()) {
        for v in decompose(&psi).unwrap().bloch_vectors() {
            prop_assert!((v.x * v.x + v.y * v.y + v.z * v.z - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn star_sets_round_trip(
        points in prop::collection::vec((0.05f64..3.09, -3.1f64..3.1), 1..7)
    ) {
        let stars: Vec<Star> = points
            .iter()
            .map(|(t, p)| Star::new(Complex64::new((t / 2.0).cos(), 0.0), Complex64::from_polar((t / 2.0).sin(), *p)).unwrap())
            .collect();
        let c = Constellation::new(stars).unwrap();
        let again = decompose(&reconstruct(&c).unwrap()).unwrap();
        // clustered stars lose digits, so only a loose bound holds for arbitrary sets
        prop_assert!(c.matching_distance(&again).unwrap() < 1e-4);
    }

    #[test]
    fn triple_invariant_is_bounded(a in state(3), b in state(3), c in state(3)) {
        if let Ok(t) = bi3(&a, &b, &c) {
            prop_assert!(t.value.norm() <= 1.0 + 1e-12);
            let rev = bi3(&c, &b, &a).unwrap();
            prop_assert!((rev.value - t.value.conj()).norm() < 1e-14);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn geodesics_between_random_ends(a in state(4), b in state(4)) {
        let fid = a.fidelity(&b).unwrap();
        prop_assume!(fid > 0.05 && fid < 0.999);
        let g = geodesic_between(&a, &b, 801).unwrap();
        let states = g.curve.states();
        prop_assert!(states[0].distance_up_to_phase(&a).unwrap() < 1e-12);
        prop_assert!(states[states.len() - 1].distance_up_to_phase(&b).unwrap() < 1e-12);
        prop_assert!((curve_length(&g.curve).unwrap() - fid.sqrt().acos()).abs() < 1e-4);
        prop_assert!(geodesic_residual(&g.curve).unwrap() < 1e-4);
    }
}
