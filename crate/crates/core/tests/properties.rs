use inverf_core::asym::{erf, pn_asymptotic, AsymptoticValue};
use inverf_core::evaluator::{newton_oracle, tail_sum, taylor_head};
use inverf_core::reproduce::oracle_inverf;
use inverf_core::{build_table, DerivCoefficientTable, EvaluatorF64, TailEnd, TailForm};
use proptest::prelude::*;
use std::sync::OnceLock;

fn evaluator() -> &'static EvaluatorF64 {
    static E: OnceLock<EvaluatorF64> = OnceLock::new();
    E.get_or_init(EvaluatorF64::with_defaults)
}

proptest! {
    #[test]
    fn inverf_is_exactly_odd(x in -0.999_999f64..0.999_999) {
        let e = evaluator();
        prop_assert_eq!(e.value(-x).unwrap().to_bits(), (-e.value(x).unwrap()).to_bits());
    }

    #[test]
    fn round_trip_inside_switch(x in -0.95f64..0.95) {
        let y = evaluator().value(x).unwrap();
        prop_assert!((erf(y) - x).abs() <= 1e-12);
    }

    #[test]
    fn round_trip_near_the_ends(x in 0.95f64..0.999_999) {
        let y = evaluator().value(x).unwrap();
        prop_assert!((erf(y) - x).abs() <= 1e-9);
    }

    #[test]
    fn agrees_with_newton_oracle(x in -0.999f64..0.999) {
        let y = evaluator().value(x).unwrap();
        let o = newton_oracle(x, 0.0, 1e-16).unwrap();
        prop_assert!((y - o).abs() <= 1e-13 * o.abs().max(f64::MIN_POSITIVE));
    }

    #[test]
    fn asymptotic_reflection(x in 0.0f64..4.0, n in 1usize..60) {
        let a = pn_asymptotic(x, n).unwrap();
        let b = pn_asymptotic(-x, n).unwrap();
        prop_assert!((a.log_magnitude - b.log_magnitude).abs() <= 1e-12 * a.log_magnitude.abs().max(1.0)
            || (a.is_zero() && b.is_zero()));
        if n % 2 == 0 {
            prop_assert_eq!(a.sign, b.sign);
        } else if !a.is_zero() {
            prop_assert_eq!(a.sign, (-b).sign);
        }
    }

    #[test]
    fn log_space_sum(a in -1e3f64..1e3, b in -1e3f64..1e3) {
        let s = (AsymptoticValue::from_value(a) + AsymptoticValue::from_value(b)).value();
        prop_assert!((s - (a + b)).abs() <= 1e-12 * (a.abs() + b.abs()).max(1e-300));
    }

    #[test]
    fn table_json_round_trip(max_n in 1usize..60) {
        let t = build_table(max_n).unwrap();
        let back = DerivCoefficientTable::from_json(&t.to_json()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn tail_improves_head(x in 0.7f64..0.95, n in prop::sample::select(vec![10usize, 20])) {
        let t = build_table(9).unwrap();
        let head = taylor_head(x, 9, &t).unwrap();
        let tail = tail_sum(x, 9, TailEnd::Fixed(n), TailForm::PerTerm).unwrap().0;
        let o = oracle_inverf(x).unwrap();
        prop_assert!((head + tail - o).abs() < (head - o).abs());
    }
}

#[test]
fn monotone_on_fine_grid() {
    let e = evaluator();
    let mut last = f64::NEG_INFINITY;
    for i in 0..10_000 {
        let x = -0.999_999 + 2.0 * 0.999_999 * i as f64 / 9_999.0;
        let y = e.value(x).unwrap();
        assert!(y > last, "x = {x}");
        last = y;
    }
}

#[test]
fn tail_improves_head_at_listed_rows() {
    let t = build_table(9).unwrap();
    for &(x, n) in &[(0.7, 6), (0.8, 7), (0.9, 11)] {
        let head = taylor_head(x, 9, &t).unwrap();
        let tail = tail_sum(x, 9, TailEnd::Fixed(n), TailForm::PerTerm).unwrap().0;
        let o = oracle_inverf(x).unwrap();
        assert!((head + tail - o).abs() < (head - o).abs(), "x = {x}");
    }
}
