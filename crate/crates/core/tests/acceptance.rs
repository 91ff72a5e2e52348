//! One test per acceptance criterion. Each prints a `[PASS]`/`[FAIL]` line
//! (written straight to stdout, so it shows without `--nocapture`) and then
//! asserts the same condition.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use inverf_core::asym::{a_mills, erf, inverf_boundary, lambert_w0, pn_asymptotic};
use inverf_core::carlitz::{build_pn, coefficient_oracle_c1, coefficient_oracle_ck, roots};
use inverf_core::evaluator::intdiff_check;
use inverf_core::nested::erf_inverse_ratios;
use inverf_core::reproduce::{table_rows, REFERENCE_ROWS};
use inverf_core::scalar::ln_factorial;
use inverf_core::{build_table, EvaluatorF64, Rational, TailForm};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

fn report(id: &str, what: &str, pass: bool, elapsed: Duration, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let line = format!("[{tag}] {id} {what} ({:.3} ms) {detail}\n", elapsed.as_secs_f64() * 1e3);
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn ac1_exact_coefficients() {
    let start = Instant::now();
    let t = build_table(9).unwrap();
    let elapsed = start.elapsed();
    let want = [q(1, 2), q(0, 1), q(1, 4), q(0, 1), q(7, 8), q(0, 1), q(127, 16), q(0, 1), q(4369, 32)];
    let exact = (1..=9).all(|n| t.ratio(n).unwrap() == &want[n - 1]);
    let pass = exact && elapsed < Duration::from_millis(1);
    report("AC1", "r_1..r_9 exact, build < 1 ms", pass, elapsed, &format!("exact={exact}"));
    assert!(pass);
}

#[test]
fn ac2_three_routes() {
    let start = Instant::now();
    let n_max = 25;
    let table = build_table(n_max).unwrap();
    let nested = erf_inverse_ratios(n_max).unwrap();
    let pn = build_pn(n_max - 1);
    let mut exact = true;
    let mut worst = 0.0f64;
    for n in 1..=n_max {
        let a = table.ratio(n).unwrap();
        let p0 = pn[n - 1].at_zero();
        let c = if n % 2 == 1 {
            Rational::new(p0.clone(), BigInt::one() << n.div_ceil(2))
        } else {
            Rational::from_integer(p0.clone())
        };
        exact &= a == &nested[n - 1] && a == &c;
        if n % 2 == 1 {
            let d = table.dn_float(n).unwrap();
            let pi = std::f64::consts::PI;
            let f = p0.to_f64().unwrap() * (pi / 2.0).sqrt().powi(n as i32) / 2f64.sqrt();
            worst = worst.max(((d - f) / d).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = exact && worst <= 1e-12 && elapsed < Duration::from_secs(1);
    report(
        "AC2",
        "recurrence = nested inversion = P_{n-1}(0) for n <= 25",
        pass,
        elapsed,
        &format!("exact={exact} worst_rel={worst:.2e}"),
    );
    assert!(pass);
}

#[test]
fn ac3_table_reproduction() {
    let start = Instant::now();
    let rows = table_rows(TailForm::PerTerm).unwrap();
    let elapsed = start.elapsed();
    let mut pass = elapsed < Duration::from_secs(1);
    let mut detail = String::new();
    for (row, reference) in rows.iter().zip(REFERENCE_ROWS.iter()) {
        let ok = row.oracle_deviation <= 1e-5 && row.head_tail_deviation <= 5e-5;
        pass &= ok;
        detail.push_str(&format!(
            "x={} N={} oracle_dev={:.1e} head_tail={:.7} (printed {}) dev={:.1e}{}; ",
            row.x,
            row.n,
            row.oracle_deviation,
            row.head_tail,
            reference.head_tail,
            row.head_tail_deviation,
            if ok { "" } else { " OUT" }
        ));
    }
    report("AC3", "six table rows: oracle 1e-5, T_9+R_N 5e-5, < 1 s", pass, elapsed, &detail);
    assert!(pass, "{detail}");
}

#[test]
fn ac4_root_location() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=12 {
        for z in roots(n, 1e-14).unwrap() {
            worst = worst.max(z.re.abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-8 && elapsed < Duration::from_secs(1);
    report("AC4", "roots of P_n, n <= 12, |Re| <= 1e-8", pass, elapsed, &format!("max|Re|={worst:.2e}"));
    assert!(pass);
}

#[test]
fn ac5_coefficient_identities() {
    let start = Instant::now();
    let pn = build_pn(20);
    let mut fact = BigInt::one();
    let mut ok = true;
    for (n, p) in pn.iter().enumerate() {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        ok &= p.coefficient(0).unwrap() == &fact;
        if n >= 2 {
            ok &= p.coefficient(1).unwrap() == &coefficient_oracle_c1(n).unwrap();
        }
    }
    for (n, p) in pn.iter().enumerate().take(11).skip(2) {
        for k in 1..=n / 2 {
            ok &= p.coefficient(k).unwrap() == &coefficient_oracle_ck(n, k).unwrap();
        }
    }
    let elapsed = start.elapsed();
    let pass = ok && elapsed < Duration::from_secs(5);
    report("AC5", "C_0^n, C_1^n (n <= 20) and nested sums (n <= 10)", pass, elapsed, &format!("exact={ok}"));
    assert!(pass);
}

#[test]
fn ac6a_derivative_asymptotics() {
    let start = Instant::now();
    let table = build_table(199).unwrap();
    let pi = std::f64::consts::PI;
    let ratios: Vec<f64> = (9..=199)
        .step_by(2)
        .map(|n| {
            let exact = table.taylor_coefficient(n, pi).unwrap();
            let nf = n as f64;
            exact * nf * nf.ln().sqrt()
        })
        .collect();
    let elapsed = start.elapsed();
    let increasing = ratios.windows(2).all(|w| w[1] > w[0]);
    let bounded = ratios.iter().all(|&r| r > 0.86 && r < 1.0);
    let first = ratios[0];
    let pass = increasing && bounded && (first - 0.8666).abs() <= 5e-4;
    report(
        "AC6a",
        "exact/asymptotic d_n/n! increasing in (0.86, 1) over odd n in [9, 199]",
        pass,
        elapsed,
        &format!("n=9: {first:.7}, n=199: {:.7}", ratios[ratios.len() - 1]),
    );
    assert!(pass);
}

#[test]
fn ac6b_polynomial_asymptotics() {
    let start = Instant::now();
    let p10 = build_pn(10).pop().unwrap();
    let mut worst = (0.0f64, 0.0f64);
    for i in 0..=30 {
        let x = i as f64 / 10.0;
        let exact = p10.eval(x).ln();
        let asym = pn_asymptotic(x, 10).unwrap().log_magnitude;
        let d = (exact - asym).abs();
        if d > worst.0 {
            worst = (d, x);
        }
    }
    let elapsed = start.elapsed();
    let pass = worst.0 <= 0.05;
    report(
        "AC6b",
        "|ln asymptotic - ln P_10| <= 0.05 on 31 points of [0, 3]",
        pass,
        elapsed,
        &format!("worst {:.4} at x={} (ln 10! = {:.4})", worst.0, worst.1, ln_factorial::<f64>(10)),
    );
    assert!(pass);
}

#[test]
fn ac7_round_trip() {
    let e = EvaluatorF64::with_defaults();
    let start = Instant::now();
    let mut inner = 0.0f64;
    let mut outer = 0.0f64;
    let edge = 1.0 - 1e-6;
    for i in 0..10_000 {
        let t = i as f64 / 9_999.0;
        let x = -0.95 + 1.9 * t;
        inner = inner.max((erf(e.value(x).unwrap()) - x).abs());
        let x = -edge + 2.0 * edge * t;
        outer = outer.max((erf(e.value(x).unwrap()) - x).abs());
    }
    let elapsed = start.elapsed();
    let pass = inner <= 1e-12 && outer <= 1e-9 && elapsed < Duration::from_secs(2);
    report(
        "AC7",
        "round trip: 1e-12 for |x| <= 0.95, 1e-9 up to 1 - 1e-6",
        pass,
        elapsed,
        &format!("inner={inner:.2e} outer={outer:.2e}"),
    );
    assert!(pass);
}

#[test]
fn ac8_mills_asymptote() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for x in [5.0f64, 10.0, 20.0, 50.0] {
        let d = a_mills(x) - x - 1.0 / x;
        ok &= d.abs() <= 2.0 / x.powi(3);
        detail.push_str(&format!("x={x}: {d:.3e}; "));
    }
    let finite = (0..=1000).all(|i| a_mills(i as f64 / 10.0).is_finite());
    let elapsed = start.elapsed();
    let pass = ok && finite;
    report("AC8", "|A(x) - x - 1/x| <= 2/x^3, finite to x = 100", pass, elapsed, &detail);
    assert!(pass);
}

#[test]
fn ac9_differential_defects() {
    let e = EvaluatorF64::with_defaults();
    let start = Instant::now();
    let ode = (1..=6)
        .map(|i| e.ode_residual(i as f64 / 10.0, 1e-4).unwrap().abs())
        .fold(0.0f64, f64::max);
    let int = (-90..=90)
        .map(|i| intdiff_check(i as f64 / 100.0).abs())
        .fold(0.0f64, f64::max);
    let elapsed = start.elapsed();
    let pass = ode <= 1e-3 && int <= 1e-6;
    report(
        "AC9",
        "ODE residual <= 1e-3 on 0.1..0.6, integral defect <= 1e-6 on |x| <= 0.9",
        pass,
        elapsed,
        &format!("ode={ode:.2e} intdiff={int:.2e}"),
    );
    assert!(pass);
}

#[test]
fn ac10a_lambert_residual() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..=320 {
        let u = 10f64.powf(-8.0 + 16.0 * i as f64 / 320.0);
        let w = lambert_w0(u).unwrap();
        worst = worst.max((w * w.exp() - u).abs() / u.max(1.0));
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-14;
    report("AC10a", "|w e^w - u| <= 1e-14 max(1, u) on [1e-8, 1e8]", pass, elapsed, &format!("worst={worst:.2e}"));
    assert!(pass);
}

#[test]
fn ac10b_boundary_formula() {
    let start = Instant::now();
    let v = inverf_boundary(0.9999f64).unwrap();
    let elapsed = start.elapsed();
    let d = (v - 2.75106).abs();
    let pass = d <= 2e-3;
    report(
        "AC10b",
        "boundary formula at 0.9999 within 2e-3 of 2.75106",
        pass,
        elapsed,
        &format!("value={v:.7} dev={d:.2e}"),
    );
    assert!(pass);
}

#[test]
fn shared_table_is_thread_safe() {
    let table = Arc::new(build_table(41).unwrap());
    let handles: Vec<_> = (0..4)
        .map(|i| {
            let t = table.clone();
            std::thread::spawn(move || t.taylor_coefficient(2 * i + 1, std::f64::consts::PI).unwrap())
        })
        .collect();
    for h in handles {
        assert!(h.join().unwrap() > 0.0);
    }
}
