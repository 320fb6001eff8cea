use super::*;
use crate::energy;
use crate::jacobi;
use crate::real::DoubleDouble;
use crate::verify::truncation_study;

fn jp(a: f64, b: f64) -> JacobiParams {
    JacobiParams::new(a, b).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn assert_same<R: Real>(x: &Expansion<R>, y: &Expansion<R>, tol: f64) {
    let (a, b) = (&x.leading, &y.leading);
    let pairs = [
        ("n2logn", a.n2logn, b.n2logn),
        ("n2", a.n2, b.n2),
        ("nlogn", a.nlogn, b.nlogn),
        ("n", a.n, b.n),
        ("logn", a.logn, b.logn),
        ("const", a.constant, b.constant),
    ];
    for (name, u, v) in pairs {
        assert!(close(u.to_f64(), v.to_f64(), tol), "{name}: {u:?} vs {v:?}");
    }
    assert_eq!(x.tail.len(), y.tail.len());
    for (m, (u, v)) in x.tail.iter().zip(&y.tail).enumerate() {
        assert!(close(u.to_f64(), v.to_f64(), tol), "c_{}: {u:?} vs {v:?}", m + 1);
    }
}

#[test]
fn lambda_examples() {
    let e = leading_coeff_expansion::<f64>(jp(0.0, 0.0), 3).unwrap();
    assert_eq!(e.tail.len(), 3);
    assert!((e.tail[0] + 0.125).abs() < 1e-16);
    assert!((e.leading.constant + 0.5 * std::f64::consts::PI.ln()).abs() < 1e-16);
    let exact: f64 = jacobi::leading_coeff_log(50, jp(0.0, 0.0));
    let diff = (e.evaluate(50, 3).unwrap() - exact).abs();
    assert!(diff < 50f64.powi(-4), "{diff}");
}

#[test]
fn value_at_one_examples() {
    let e = value_at_one_expansion::<f64>(jp(0.0, 1.7), 6).unwrap();
    assert_eq!(e.leading.logn, 0.0);
    assert_eq!(e.leading.constant, 0.0);
    assert!(e.tail.iter().all(|&c| c == 0.0));
    let e = value_at_one_expansion::<f64>(jp(1.0, 1.0), 4).unwrap();
    assert!((e.tail[0] - 1.0).abs() < 1e-15);
    let diff = (e.evaluate(100, 4).unwrap() - 101f64.ln()).abs();
    assert!(diff <= 1e-9, "{diff}");
}

#[test]
fn discriminant_examples() {
    let e = discriminant_expansion::<f64>(jp(0.0, 0.0), 2).unwrap();
    let exact: f64 = jacobi::discriminant_log(40, jp(0.0, 0.0));
    let diff = (e.evaluate(40, 2).unwrap() - exact).abs();
    assert!(diff < 40f64.powi(-3), "{diff}");

    let pi = std::f64::consts::PI;
    let k = Constants::<f64>::compute();
    let closed = -0.25 + 11.0 / 12.0 * 2f64.ln() + pi.ln() + 3.0 * k.log_glaisher - (2.0 * pi).ln();
    assert!((e.leading.constant - closed).abs() < 1e-14);
    let d = discriminant_expansion::<DoubleDouble>(jp(0.0, 0.0), 2).unwrap();
    let reference = DoubleDouble::new(0.4385011660546907, -1.567232696537009e-17);
    assert!((d.leading.constant - reference).abs().hi() < 1e-27);
}

#[test]
fn potential_examples() {
    let e = potential_energy_expansion::<DoubleDouble>(1.0, 1.0, 2).unwrap();
    let c1 = DoubleDouble::new(-0.6090596243748547, -2.5778571081757103e-17);
    assert!((e.leading.constant - c1).abs().hi() < 1e-27);
    assert!((e.leading.logn.to_f64() + 2.25).abs() < 1e-30);
    let k = Constants::<f64>::compute();
    let closed = 37.0 / 12.0 * 2f64.ln() - 2.0 - 3.0 * k.log_glaisher;
    assert!((e.leading.constant.to_f64() - closed).abs() < 1e-14);

    let e = potential_energy_expansion::<f64>(0.7, 1.3, 2).unwrap();
    let err = |n: usize| {
        let exact: f64 = energy::potential_energy_exact(n, 0.7, 1.3).unwrap();
        (e.evaluate(n, 2).unwrap() - exact).abs()
    };
    let (e60, e120) = (err(60), err(120));
    assert!(e60 < 1e-4, "{e60}");
    let slope = (e120 / e60).log2();
    assert!((slope + 3.0).abs() < 0.2, "{slope}");
}

#[test]
fn symmetric_path_matches_general_formula() {
    for &p in &[0.3, 0.5, 1.0, 1.75, 2.9] {
        let sym = potential_energy_expansion_symmetric::<DoubleDouble>(p, 12).unwrap();
        let gen = potential_energy_expansion_general::<DoubleDouble>(p, p, 12).unwrap();
        assert_same(&sym, &gen, 1e-28);
        assert_eq!(
            potential_energy_expansion::<f64>(p, p, 5).unwrap(),
            potential_energy_expansion_symmetric(p, 5).unwrap()
        );
    }
}

#[test]
fn elliptic_examples() {
    for &(p, q) in &[(1.0, 1.0), (0.3, 2.2)] {
        let e = elliptic_log_energy_expansion::<f64>(p, q, 2).unwrap();
        assert!((e.leading.n + 2.0 * 2f64.ln()).abs() < 1e-16);
    }
    let e = elliptic_log_energy_expansion::<f64>(1.0, 1.0, 2).unwrap();
    let err = |n: usize| {
        let exact: f64 = energy::elliptic_log_energy_exact(n, 1.0, 1.0).unwrap();
        (e.evaluate(n, 2).unwrap() - exact).abs()
    };
    let (e60, e120) = (err(60), err(120));
    assert!(e60 < 1e-4, "{e60}");
    let slope = (e120 / e60).log2();
    assert!((slope + 3.0).abs() < 0.2, "{slope}");
}

#[test]
fn potential_and_elliptic_n_coefficients_differ_by_field_charge() {
    // the external field adds 2(log 2)(p+q) n; the two never agree for p, q > 0
    for &(p, q) in &[(1.0, 1.0), (0.5, 1.5), (0.75, 0.75), (0.2, 0.3)] {
        let pot = potential_energy_expansion::<f64>(p, q, 0).unwrap();
        let ell = elliptic_log_energy_expansion::<f64>(p, q, 0).unwrap();
        assert_eq!(pot.leading.n2, ell.leading.n2);
        assert_eq!(pot.leading.nlogn, ell.leading.nlogn);
        assert!((pot.leading.n - ell.leading.n - 2.0 * 2f64.ln() * (p + q)).abs() < 1e-15);
        assert!(pot.leading.n != ell.leading.n);
    }
}

#[test]
fn interval_examples() {
    let e = interval_energy_expansion::<f64>(3).unwrap();
    assert_eq!(e.tail[0], 0.25);
    assert!((e.tail[1] - 23.0 / 192.0).abs() < 1e-17);
    let k = Constants::<f64>::compute();
    assert!((e.leading.constant - (13.0 * 2f64.ln() / 12.0 - 3.0 * k.log_glaisher)).abs() < 1e-16);

    let e = interval_energy_expansion::<DoubleDouble>(3).unwrap();
    let exact: DoubleDouble = energy::interval_energy_exact(100).unwrap();
    let diff = (e.evaluate(100, 3).unwrap() - exact).abs().to_f64();
    assert!(diff < 100f64.powi(-4), "{diff}");

    let e = interval_energy_expansion::<f64>(2).unwrap();
    let d = (e.evaluate(200, 2).unwrap() - e.evaluate(200, 1).unwrap()).abs();
    assert!(d <= 23.0 / 192.0 * 200f64.powi(-2) * 1.5);
}

#[test]
fn general_interval_examples() {
    let base = interval_energy_expansion::<f64>(4).unwrap();
    let unit = general_interval_energy_expansion::<f64>(-1.0, 1.0, 4).unwrap();
    assert_same(&unit, &base, 0.0);
    assert_eq!(unit.kind, ExpansionKind::GeneralIntervalE0);

    let wide = general_interval_energy_expansion::<f64>(-2.0, 2.0, 4).unwrap();
    assert_eq!(wide.leading.n2, 0.0);
    assert!((wide.leading.n + 2f64.ln()).abs() < 1e-16);

    let unit01 = general_interval_energy_expansion::<f64>(0.0, 1.0, 4).unwrap();
    assert!((unit01.leading.n2 - 4f64.ln()).abs() < 1e-15);
    assert!((unit01.leading.n + 3.0 * 2f64.ln()).abs() < 1e-15);
    let spec = energy::IntervalSpec::new(0.0, 1.0).unwrap();
    let exact: f64 = energy::interval_energy_on(spec, 80).unwrap();
    assert!((unit01.evaluate(80, 4).unwrap() - exact).abs() < 1.0 / 80.0);
    assert!(general_interval_energy_expansion::<f64>(1.0, 0.0, 2).is_err());
}

#[test]
fn evaluation_contract() {
    let e = interval_energy_expansion::<f64>(2).unwrap();
    let n = 30f64;
    let l = &e.leading;
    let leading_only = l.n2 * n * n + l.nlogn * n * n.ln() + l.n * n + l.logn * n.ln() + l.constant;
    assert!((e.evaluate(30, 0).unwrap() - leading_only).abs() < 1e-11);
    assert!(matches!(
        e.evaluate(30, 3),
        Err(Error::Capacity {
            requested: 3,
            available: 2,
            ..
        })
    ));
    assert!(e.evaluate(1, 0).is_err());
}

#[test]
fn order_capacity_per_precision() {
    assert!(interval_energy_expansion::<f64>(10).is_ok());
    assert!(matches!(
        interval_energy_expansion::<f64>(11),
        Err(Error::Capacity { .. })
    ));
    assert!(interval_energy_expansion::<DoubleDouble>(16).is_ok());
    assert!(interval_energy_expansion::<DoubleDouble>(17).is_err());
    assert!(potential_energy_expansion_composed::<DoubleDouble>(1.0, 1.0, 16).is_ok());
}

#[test]
fn composition_reproduces_potential_expansion() {
    for &(p, q) in &[(0.7, 1.3), (1.0, 1.0), (0.75, 1.5), (2.0, 0.6), (0.25, 3.0)] {
        let direct = potential_energy_expansion::<f64>(p, q, 10).unwrap();
        let composed = potential_energy_expansion_composed::<f64>(p, q, 10).unwrap();
        assert_same(&composed, &direct, 1e-12);
        let direct = potential_energy_expansion::<DoubleDouble>(p, q, 16).unwrap();
        let composed = potential_energy_expansion_composed::<DoubleDouble>(p, q, 16).unwrap();
        assert_same(&composed, &direct, 1e-12);
    }
}

#[test]
fn endpoint_corrections_reproduce_interval_expansion() {
    let direct = interval_energy_expansion::<DoubleDouble>(16).unwrap();
    let routed = interval_energy_expansion_from_endpoints::<DoubleDouble>(16).unwrap();
    assert!(routed.leading.n2logn.abs().hi() < 1e-30);
    assert_same(&routed, &direct, 1e-25);
}

#[test]
fn tails_finite_for_sampled_charges() {
    let grid = [0.05, 0.3, 0.5, 1.0, 1.6, 2.4, 3.0];
    for &p in &grid {
        for &q in &grid {
            for e in [
                potential_energy_expansion::<f64>(p, q, 10).unwrap(),
                elliptic_log_energy_expansion::<f64>(p, q, 10).unwrap(),
                discriminant_expansion::<f64>(jp(2.0 * p - 1.0, 2.0 * q - 1.0), 10).unwrap(),
            ] {
                assert!(e.tail.iter().all(|c| c.is_finite()));
                assert!(e.leading.constant.is_finite());
            }
        }
    }
}

#[test]
fn json_round_trip_is_bit_exact() {
    let e = potential_energy_expansion::<f64>(0.7, 1.3, 6).unwrap();
    let s = serde_json::to_string(&e).unwrap();
    assert!(s.starts_with(r#"{"kind":"potential","params":{"p":0.7,"q":1.3},"leading":{"n2":"#));
    assert!(!s.contains("n2logn"));
    let back: Expansion<f64> = serde_json::from_str(&s).unwrap();
    assert_eq!(back, e);

    let e = discriminant_expansion::<DoubleDouble>(jp(0.4, 1.6), 8).unwrap();
    let back: Expansion<DoubleDouble> = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
    assert_eq!(back, e);

    let e = interval_energy_expansion::<f64>(1).unwrap();
    let v: serde_json::Value = serde_json::to_value(&e).unwrap();
    assert_eq!(v["kind"], "interval_E0");
    assert_eq!(v["params"], serde_json::json!({}));
    assert_eq!(v["tail"], serde_json::json!([0.25]));
    let back: Expansion<f64> = serde_json::from_value(v).unwrap();
    assert_eq!(back.params, ExpansionParams::Unit {});
}

#[test]
fn build_dispatch() {
    for kind in ExpansionKind::ALL {
        let params = match kind {
            ExpansionKind::LogLambda | ExpansionKind::LogP1 | ExpansionKind::LogD => {
                ExpansionParams::Jacobi { alpha: 0.4, beta: 1.6 }
            }
            ExpansionKind::Potential | ExpansionKind::EllipticE0 => ExpansionParams::Charges { p: 0.7, q: 1.3 },
            ExpansionKind::IntervalE0 => ExpansionParams::Unit {},
            ExpansionKind::GeneralIntervalE0 => ExpansionParams::Interval { a: 0.0, b: 1.0 },
        };
        let e = build_expansion::<f64>(kind, params, 3).unwrap();
        assert_eq!(e.kind, kind);
        assert_eq!(serde_json::to_value(kind).unwrap(), kind.name());
    }
    assert!(build_expansion::<f64>(ExpansionKind::LogD, ExpansionParams::Unit {}, 3).is_err());
}

#[test]
fn quick_truncation_slopes() {
    let ns = [20, 40, 80, 160, 320];
    for e in [
        leading_coeff_expansion::<f64>(jp(0.4, 1.6), 2).unwrap(),
        interval_energy_expansion::<f64>(2).unwrap(),
    ] {
        let study = truncation_study(&e, &ns, 2).unwrap();
        for row in &study.rows {
            assert!(row.within(0.15), "{:?} M'={}: slope {}", e.kind, row.m_prime, row.slope);
        }
    }
}
