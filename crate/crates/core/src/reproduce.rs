//! Reference table and figure data.
//!
//! Every generator is deterministic: fixed grids, no randomness, and the
//! Newton oracle as the reference value of `inverf`.

use std::sync::Arc;

use serde::Serialize;

use crate::asym::{dn_over_nfact_asym, inverf_boundary, pn_asymptotic};
use crate::carlitz::build_pn;
use crate::coeffs::{build_table, DerivCoefficientTable};
use crate::error::Result;
use crate::evaluator::{newton_oracle, taylor_head, tail_sum, EvalConfig, Evaluator, TailEnd, TailForm};
use crate::scalar::ln_factorial;

/// One published row: `x`, `inverf(x)`, `T_9(x) + R_N(x)` and `N`, at the printed precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub x: f64,
    pub inverf: f64,
    pub head_tail: f64,
    pub n: usize,
}

pub const REFERENCE_ROWS: [ReferenceRow; 6] = [
    ReferenceRow { x: 0.7, inverf: 0.732869, head_tail: 0.732751, n: 6 },
    ReferenceRow { x: 0.8, inverf: 0.906194, head_tail: 0.905545, n: 7 },
    ReferenceRow { x: 0.9, inverf: 1.16309, head_tail: 1.16274, n: 11 },
    ReferenceRow { x: 0.99, inverf: 1.82139, head_tail: 1.82121, n: 57 },
    ReferenceRow { x: 0.999, inverf: 2.32675, head_tail: 2.32676, n: 423 },
    ReferenceRow { x: 0.9999, inverf: 2.75106, head_tail: 2.75105, n: 3685 },
];

/// Order of the exact head in the reference table.
pub const TABLE_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub x: f64,
    pub n: usize,
    pub oracle: f64,
    pub head_tail: f64,
    pub oracle_deviation: f64,
    pub head_tail_deviation: f64,
}

/// `inverf(x)` to full binary64 accuracy, seeded from the boundary formula.
pub fn oracle_inverf(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    let seed = inverf_boundary(x.abs())?.copysign(x);
    newton_oracle(x, seed, 0.0)
}

/// The six reference rows recomputed, with deviations from the printed values.
pub fn table_rows(form: TailForm) -> Result<Vec<TableRow>> {
    let table = Arc::new(build_table(TABLE_ORDER)?);
    REFERENCE_ROWS
        .iter()
        .map(|row| {
            let config = EvalConfig { tail_form: form, ..EvalConfig::unpolished(TABLE_ORDER, TailEnd::Fixed(row.n)) };
            let head_tail = Evaluator::<f64>::new(table.clone(), config)?.inverf(row.x)?.value;
            let oracle = oracle_inverf(row.x)?;
            Ok(TableRow {
                x: row.x,
                n: row.n,
                oracle,
                head_tail,
                oracle_deviation: (oracle - row.inverf).abs(),
                head_tail_deviation: (head_tail - row.head_tail).abs(),
            })
        })
        .collect()
}

/// `T_9(x) + R_N(x)` with the per-term tail, and the `N` minimizing its distance to the oracle.
pub fn best_tail_end(x: f64, search_to: usize) -> Result<(usize, f64)> {
    let table = build_table(TABLE_ORDER)?;
    let head = taylor_head(x, TABLE_ORDER, &table)?;
    let oracle = oracle_inverf(x)?;
    let first = TABLE_ORDER.div_ceil(2);
    let (mut best_n, mut best_err) = (first, f64::INFINITY);
    let x2 = x * x;
    let mut power = x * x2.powi(first as i32);
    let mut tail = 0.0;
    for k in first..=search_to {
        let n = (2 * k + 1) as f64;
        tail += power / (n * n.ln().sqrt());
        power *= x2;
        let err = (head + tail - oracle).abs();
        if err < best_err {
            best_n = k;
            best_err = err;
        }
    }
    Ok((best_n, best_err))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct P10Point {
    pub x: f64,
    pub exact: f64,
    pub asymptotic: f64,
}

/// `ln(P_10(x) / 10!)` exact and asymptotic on `x = 0, 0.1, ..., 3`.
pub fn figure_p10() -> Result<Vec<P10Point>> {
    let p10 = build_pn(10).pop().expect("build_pn returns P_0..=P_10");
    let ln_fact = ln_factorial::<f64>(10);
    (0..=30)
        .map(|i| {
            let x = i as f64 / 10.0;
            let exact = p10.eval(x).ln() - ln_fact;
            let asymptotic = pn_asymptotic(x, 10)?.log_magnitude - ln_fact;
            Ok(P10Point { x, exact, asymptotic })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DnRatioPoint {
    pub n: usize,
    pub exact: f64,
    pub asymptotic: f64,
    pub ratio: f64,
}

/// Exact and asymptotic `d_n / n!` for odd `3 <= n <= max_n`.
pub fn figure_dn_ratio(table: &DerivCoefficientTable, max_n: usize) -> Result<Vec<DnRatioPoint>> {
    (3..=max_n)
        .step_by(2)
        .map(|n| {
            let exact = table.taylor_coefficient(n, std::f64::consts::PI)?;
            let asymptotic = dn_over_nfact_asym::<f64>(n)?;
            Ok(DnRatioPoint { n, exact, asymptotic, ratio: exact / asymptotic })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TaylorRatioPoint {
    pub x: f64,
    pub head: f64,
    pub head_tail_10: f64,
    pub head_tail_20: f64,
}

fn taylor_ratio_at(table: &DerivCoefficientTable, x: f64) -> Result<TaylorRatioPoint> {
    if x == 0.0 {
        return Ok(TaylorRatioPoint { x, head: 1.0, head_tail_10: 1.0, head_tail_20: 1.0 });
    }
    let oracle = oracle_inverf(x)?;
    let head = taylor_head(x, TABLE_ORDER, table)?;
    let r10 = tail_sum(x, TABLE_ORDER, TailEnd::Fixed(10), TailForm::PerTerm)?.0;
    let r20 = tail_sum(x, TABLE_ORDER, TailEnd::Fixed(20), TailForm::PerTerm)?.0;
    Ok(TaylorRatioPoint {
        x,
        head: head / oracle,
        head_tail_10: (head + r10) / oracle,
        head_tail_20: (head + r20) / oracle,
    })
}

/// `T_9 / inverf`, `(T_9 + R_10) / inverf` and `(T_9 + R_20) / inverf` on `x = -0.99, -0.98, ..., 0.99`.
pub fn figure_taylor_ratio() -> Result<Vec<TaylorRatioPoint>> {
    let table = build_table(TABLE_ORDER)?;
    (-99..=99).map(|i| taylor_ratio_at(&table, i as f64 / 100.0)).collect()
}

/// The same ratios near the right end, on `x = 0.9, 0.901, ..., 0.999`.
pub fn figure_taylor_ratio_zoom() -> Result<Vec<TaylorRatioPoint>> {
    let table = build_table(TABLE_ORDER)?;
    (900..=999).map(|i| taylor_ratio_at(&table, i as f64 / 1000.0)).collect()
}
