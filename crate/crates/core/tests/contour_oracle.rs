//! Derivatives of inverf at 0 from a Cauchy integral, independent of every
//! recurrence in the crate: complex erf by its power series, complex inverf by
//! Newton, and the trapezoidal rule on a circle.

use std::f64::consts::PI;

use inverf_core::build_table;
use num_complex::Complex64;

fn erf_series(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    for k in 1..200 {
        term = -term * z2 / k as f64;
        let add = term / (2 * k + 1) as f64;
        sum += add;
        if add.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum * (2.0 / PI.sqrt())
}

fn inverf_complex(w: Complex64) -> Complex64 {
    let mut y = w * (PI.sqrt() / 2.0);
    for _ in 0..60 {
        let step = (erf_series(y) - w) * (PI.sqrt() / 2.0) * (y * y).exp();
        y -= step;
        if step.norm() < 1e-17 {
            break;
        }
    }
    y
}

/// `J^(n)(0) / n!` from `M` samples on `|z| = rho`.
fn taylor_coefficient(n: usize, rho: f64, m: usize) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = 2.0 * PI * j as f64 / m as f64;
        let z = Complex64::from_polar(rho, theta);
        acc += inverf_complex(z) * Complex64::from_polar(1.0, -(n as f64) * theta);
    }
    acc.re / (m as f64 * rho.powi(n as i32))
}

#[test]
fn contour_integral_matches_exact_derivatives() {
    let table = build_table(9).unwrap();
    for n in 1..=9 {
        let exact = table.taylor_coefficient(n, PI).unwrap();
        let approx = taylor_coefficient(n, 0.5, 64);
        if exact == 0.0 {
            assert!(approx.abs() < 1e-12, "n = {n}: {approx}");
        } else {
            assert!(((approx - exact) / exact).abs() <= 1e-6, "n = {n}: {approx} vs {exact}");
        }
    }
}
