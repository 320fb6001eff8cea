use fekete_core::asym::{
    build_expansion, general_interval_energy_expansion, interval_energy_expansion,
    interval_energy_expansion_from_endpoints, potential_energy_expansion, potential_energy_expansion_composed,
    Expansion, ExpansionKind, ExpansionParams,
};
use fekete_core::energy::{
    interval_energy_exact, interval_energy_on, log_energy_config, potential_energy_config, potential_energy_exact,
    IntervalSpec,
};
use fekete_core::minimize::{fekete_maximize, minimize_potential, SolveOptions};
use fekete_core::verify::truncation_study;
use fekete_core::DoubleDouble;
use proptest::prelude::*;

fn max_gap(a: &Expansion<DoubleDouble>, b: &Expansion<DoubleDouble>) -> f64 {
    let (x, y) = (&a.leading, &b.leading);
    let mut gaps = vec![
        x.n2 - y.n2,
        x.nlogn - y.nlogn,
        x.n - y.n,
        x.logn - y.logn,
        x.constant - y.constant,
    ];
    gaps.extend(a.tail.iter().zip(&b.tail).map(|(u, v)| *u - *v));
    gaps.iter().map(|g| g.abs().to_f64()).fold(0.0, f64::max)
}

#[test]
fn composed_potential_expansion_matches_closed_form() {
    for &(p, q) in &[(0.7, 1.3), (1.0, 1.0), (2.0, 0.6), (0.3, 0.45)] {
        let closed = potential_energy_expansion::<DoubleDouble>(p, q, 12).unwrap();
        let composed = potential_energy_expansion_composed::<DoubleDouble>(p, q, 12).unwrap();
        let gap = max_gap(&closed, &composed);
        assert!(gap < 1e-24, "p={p} q={q}: {gap:e}");
    }
}

#[test]
fn endpoint_route_matches_interval_expansion() {
    let closed = interval_energy_expansion::<DoubleDouble>(14).unwrap();
    let endpoints = interval_energy_expansion_from_endpoints::<DoubleDouble>(14).unwrap();
    assert!(max_gap(&closed, &endpoints) < 1e-25);
}

#[test]
fn solver_reproduces_exact_energies() {
    let opts = SolveOptions::default();
    for big_n in 2..=30 {
        let r = fekete_maximize(big_n, &opts).unwrap();
        let exact: f64 = interval_energy_exact(big_n).unwrap();
        assert!((r.energy - exact).abs() <= 1e-11 * exact.abs().max(1.0), "N={big_n}");
        assert!((log_energy_config(&r.points).unwrap() - exact).abs() <= 1e-11 * exact.abs().max(1.0));
    }
}

#[test]
fn general_interval_expansion_tracks_rescaled_exact_values() {
    for &(a, b) in &[(0.0, 1.0), (-2.0, 2.0), (-0.3, 5.0)] {
        let spec = IntervalSpec::new(a, b).unwrap();
        let e = general_interval_energy_expansion::<DoubleDouble>(a, b, 4).unwrap();
        let study = truncation_study(&e, &[40, 80, 160, 320], 4).unwrap();
        for row in &study.rows {
            assert!(row.within(0.15), "[{a},{b}] M'={} slope {}", row.m_prime, row.slope);
        }
        let direct: DoubleDouble = interval_energy_on(spec, 50).unwrap();
        assert!((direct - study_exact(&e, 50)).abs().to_f64() < 1e-25);
    }
}

fn study_exact(e: &Expansion<DoubleDouble>, n: usize) -> DoubleDouble {
    fekete_core::verify::exact_value(e.kind, &e.params, n).unwrap()
}

#[test]
fn build_expansion_covers_every_kind() {
    let params = [
        (
            ExpansionKind::LogLambda,
            ExpansionParams::Jacobi { alpha: 0.3, beta: -0.4 },
        ),
        (ExpansionKind::LogP1, ExpansionParams::Jacobi { alpha: 0.3, beta: -0.4 }),
        (ExpansionKind::LogD, ExpansionParams::Jacobi { alpha: 0.3, beta: -0.4 }),
        (ExpansionKind::Potential, ExpansionParams::Charges { p: 0.7, q: 1.3 }),
        (ExpansionKind::EllipticE0, ExpansionParams::Charges { p: 0.7, q: 1.3 }),
        (ExpansionKind::IntervalE0, ExpansionParams::Unit {}),
        (
            ExpansionKind::GeneralIntervalE0,
            ExpansionParams::Interval { a: 0.0, b: 3.0 },
        ),
    ];
    assert_eq!(params.len(), ExpansionKind::ALL.len());
    for (kind, p) in params {
        let e = build_expansion::<f64>(kind, p, 3).unwrap();
        assert_eq!(e.kind, kind);
        assert_eq!(e.order(), 3);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<Expansion<f64>>(&json).unwrap(), e);
        let dd = build_expansion::<DoubleDouble>(kind, p, 3).unwrap();
        let json = serde_json::to_string(&dd).unwrap();
        assert_eq!(serde_json::from_str::<Expansion<DoubleDouble>>(&json).unwrap(), dd);
    }
    assert!(build_expansion::<f64>(ExpansionKind::Potential, ExpansionParams::Unit {}, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_energy_equals_closed_form(p in 0.2f64..3.0, q in 0.2f64..3.0, n in 1usize..25) {
        let r = minimize_potential(n, p, q, &SolveOptions::default()).unwrap();
        prop_assert!(r.converged);
        let exact: f64 = potential_energy_exact(n, p, q).unwrap();
        let direct = potential_energy_config(&r.points).unwrap();
        prop_assert!((direct - exact).abs() <= 1e-10 * exact.abs().max(1.0));
    }

    #[test]
    fn expansion_error_decreases_with_order(p in 0.3f64..2.5, q in 0.3f64..2.5) {
        let e = potential_energy_expansion::<DoubleDouble>(p, q, 6).unwrap();
        let exact: DoubleDouble = potential_energy_exact(200, p, q).unwrap();
        let errs: Vec<f64> = (0..=6).map(|m| (e.evaluate(200, m).unwrap() - exact).abs().to_f64()).collect();
        prop_assert!(errs[6] < errs[2] * 1e-3, "{errs:?}");
        prop_assert!(errs[6] < errs[0] * 1e-6, "{errs:?}");
    }
}
