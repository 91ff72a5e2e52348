//! `inverf(x)` on `(-1, 1)`.
//!
//! Inside the switch point the value is the exact Taylor head
//! `T_M(x) = sum_{odd n <= M} d_n x^n / n!` plus the asymptotic tail
//! `R_N(x) = sum_{k=(M+1)/2}^{N} x^(2k+1) / ((2k+1) sqrt(ln(2k+1)))`.
//! Beyond it the Lambert-W boundary formula gives the seed. Newton steps on
//! `erf(y) = x` then polish either seed. Everything runs on `|x|` and the sign
//! is reapplied at the end, so the result is exactly odd.

use std::marker::PhantomData;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::asym::{inverf_boundary, Cody, ErfProvider};
use crate::coeffs::{build_table, DerivCoefficientTable, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Hard cap on tail terms when the tail end is chosen automatically.
pub const AUTO_TAIL_MAX_TERMS: usize = 1_000_000;
/// Relative size below which the automatic tail stops.
pub const AUTO_TAIL_RELATIVE: f64 = 1e-17;
/// Newton iteration cap.
pub const NEWTON_MAX_ITERATIONS: usize = 100;
/// Series order used by [`intdiff_check`].
pub const INTDIFF_ORDER: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TailEnd {
    Auto,
    Fixed(usize),
}

/// Which coefficient the tail uses for the term `x^(2k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TailForm {
    /// `1 / ((2k+1) sqrt(ln(2k+1)))`, from the asymptotic form of `d_n / n!`.
    #[default]
    PerTerm,
    /// `1 / ((2N+1) sqrt(ln(2N+1)))` for every term, as the formula is sometimes printed.
    PrintedN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Series below the switch point, boundary formula above.
    #[default]
    Auto,
    Taylor,
    Lambert,
    /// Always finish with Newton steps, whatever the polish flag says.
    Newton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMethod {
    TaylorTail,
    Lambert,
    NewtonPolished,
}

impl std::fmt::Display for EvalMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EvalMethod::TaylorTail => "taylor_tail",
            EvalMethod::Lambert => "lambert",
            EvalMethod::NewtonPolished => "newton_polished",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig<T> {
    /// Odd order `M` of the exact head.
    pub taylor_order: usize,
    pub tail_end: TailEnd,
    pub switch_point: T,
    pub polish: bool,
    pub method: Method,
    pub tail_form: TailForm,
}

impl<T: Real> Default for EvalConfig<T> {
    fn default() -> Self {
        Self {
            taylor_order: 9,
            tail_end: TailEnd::Auto,
            switch_point: T::lit(0.95),
            polish: true,
            method: Method::Auto,
            tail_form: TailForm::PerTerm,
        }
    }
}

impl<T: Real> EvalConfig<T> {
    /// Head plus printed tail with no Newton steps, as used for table reproduction.
    pub fn unpolished(taylor_order: usize, tail_end: TailEnd) -> Self {
        Self {
            taylor_order,
            tail_end,
            polish: false,
            method: Method::Taylor,
            ..Self::default()
        }
    }

    pub fn validate(&self, table_max_n: usize) -> Result<()> {
        let m = self.taylor_order;
        if m.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("taylor order must be odd, got {m}")));
        }
        if m > table_max_n {
            return Err(Error::IndexOutOfRange { index: m, max: table_max_n });
        }
        if let TailEnd::Fixed(n) = self.tail_end {
            if n < m.div_ceil(2) {
                return Err(Error::InvalidParameter(format!(
                    "tail end {n} is below the first tail index {}",
                    m.div_ceil(2)
                )));
            }
        }
        if !(self.switch_point > T::zero() && self.switch_point < T::one()) {
            return Err(Error::InvalidParameter("switch point must lie in (0, 1)".into()));
        }
        if self.tail_form == TailForm::PrintedN && self.tail_end == TailEnd::Auto {
            return Err(Error::InvalidParameter("the printed-N tail needs an explicit N".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalReport<T> {
    pub x: T,
    pub value: T,
    pub method: EvalMethod,
    /// Series terms summed (head plus tail); zero for the boundary formula.
    pub terms_used: usize,
    pub newton_iterations: usize,
    /// `|erf(value) - x|`.
    pub residual: T,
}

/// `T_M(x)` from the Taylor coefficients `a[n] = d_n / n!`, by Horner in `x^2`.
fn head_from_coefficients<T: Real>(a: &[T], x: T, m: usize) -> T {
    let x2 = x * x;
    let mut acc = T::zero();
    let mut n = m;
    loop {
        acc = acc * x2 + a[n];
        if n < 2 {
            break;
        }
        n -= 2;
    }
    acc * x
}

/// `T_M(x) = sum_{odd n <= M} d_n x^n / n!`.
pub fn taylor_head<T: Real>(x: T, m: usize, table: &DerivCoefficientTable) -> Result<T> {
    if m > table.max_n() {
        return Err(Error::IndexOutOfRange { index: m, max: table.max_n() });
    }
    let m = if m.is_multiple_of(2) { m.saturating_sub(1) } else { m };
    if m == 0 {
        return Ok(T::zero());
    }
    let a = (0..=m)
        .map(|n| table.taylor_coefficient(n, T::PI()))
        .collect::<Result<Vec<T>>>()?;
    Ok(head_from_coefficients(&a, x, m))
}

fn tail_coefficient<T: Real>(k: usize) -> T {
    let n = T::from_usize_lossy(2 * k + 1);
    T::one() / (n * n.ln().sqrt())
}

/// Asymptotic tail following a head of order `m`. Returns the sum and the number of terms.
pub fn tail_sum<T: Real>(x: T, m: usize, end: TailEnd, form: TailForm) -> Result<(T, usize)> {
    let first = m.div_ceil(2);
    let x2 = x * x;
    let mut power = x * x2.powi(first as i32);
    let mut acc = T::zero();
    let mut count = 0usize;
    match (end, form) {
        (TailEnd::Fixed(n), _) if n < first => Err(Error::InvalidParameter(format!(
            "tail end {n} is below the first tail index {first}"
        ))),
        (TailEnd::Fixed(n), TailForm::PerTerm) => {
            for k in first..=n {
                acc = acc + power * tail_coefficient::<T>(k);
                power = power * x2;
                count += 1;
            }
            Ok((acc, count))
        }
        (TailEnd::Fixed(n), TailForm::PrintedN) => {
            for _ in first..=n {
                acc = acc + power;
                power = power * x2;
                count += 1;
            }
            Ok((acc * tail_coefficient::<T>(n), count))
        }
        (TailEnd::Auto, TailForm::PerTerm) => {
            let rel = T::lit(AUTO_TAIL_RELATIVE);
            let mut k = first;
            while count < AUTO_TAIL_MAX_TERMS {
                let term = power * tail_coefficient::<T>(k);
                if term == T::zero() || (count > 0 && term.abs() < rel * acc.abs()) {
                    break;
                }
                acc = acc + term;
                power = power * x2;
                count += 1;
                k += 1;
            }
            Ok((acc, count))
        }
        (TailEnd::Auto, TailForm::PrintedN) => {
            Err(Error::InvalidParameter("the printed-N tail needs an explicit N".into()))
        }
    }
}

/// `x - erf(y)`, switching to erfc near the ends of the range where erf has no digits left.
fn newton_residual<T: Real, E: ErfProvider<T>>(erf: &E, x: T, y: T) -> T {
    let half = T::lit(0.5);
    if x > half {
        erf.erfc(y) - (T::one() - x)
    } else if x < -half {
        (x + T::one()) - erf.erfc(-y)
    } else {
        x - erf.erf(y)
    }
}

fn newton<T: Real, E: ErfProvider<T>>(erf: &E, x: T, seed: T, tol: T) -> Result<(T, usize, T)> {
    let scale = T::PI().sqrt() / T::lit(2.0);
    let eps = T::epsilon();
    let mut y = seed;
    let mut r = newton_residual(erf, x, y);
    for it in 0..NEWTON_MAX_ITERATIONS {
        if r.abs() <= tol {
            return Ok((y, it, r.abs()));
        }
        let step = r * scale * (y * y).exp();
        let next = y + step;
        if !next.is_finite() {
            break;
        }
        let r_next = newton_residual(erf, x, next);
        // Rounding floor reached: the step no longer changes y meaningfully.
        if step.abs() <= T::lit(4.0) * eps * next.abs().max(T::min_positive_value()) {
            let (y, r) = if r_next.abs() < r.abs() { (next, r_next) } else { (y, r) };
            return Ok((y, it + 1, r.abs()));
        }
        y = next;
        r = r_next;
    }
    Err(Error::NonConvergence {
        iterations: NEWTON_MAX_ITERATIONS,
        residual: r.abs().to_f64().unwrap_or(f64::NAN),
    })
}

/// Newton iteration `y <- y + (x - erf(y)) sqrt(pi)/2 exp(y^2)` to `|erf(y) - x| <= tol`.
///
/// Stops early, without error, once the step is at rounding level.
pub fn newton_oracle<T: Real>(x: T, seed: T, tol: T) -> Result<T> {
    newton_oracle_with(&Cody, x, seed, tol)
}

pub fn newton_oracle_with<T: Real, E: ErfProvider<T>>(erf: &E, x: T, seed: T, tol: T) -> Result<T> {
    if !(x > -T::one() && x < T::one()) {
        return Err(Error::Domain { value: x.to_f64().unwrap_or(f64::NAN), domain: "(-1, 1)" });
    }
    if !seed.is_finite() {
        return Err(Error::InvalidParameter("Newton seed must be finite".into()));
    }
    newton(erf, x, seed, tol).map(|(y, _, _)| y)
}

fn default_table() -> Arc<DerivCoefficientTable> {
    static TABLE: OnceLock<Arc<DerivCoefficientTable>> = OnceLock::new();
    TABLE
        .get_or_init(|| Arc::new(build_table(DEFAULT_MAX_N).expect("default table size is valid")))
        .clone()
}

/// Evaluates `inverf` against an immutable coefficient table; safe to share across threads.
#[derive(Debug, Clone)]
pub struct Evaluator<T: Real, E: ErfProvider<T> = Cody> {
    table: Arc<DerivCoefficientTable>,
    /// `d_n / n!` for `n <= taylor_order`.
    head: Vec<T>,
    config: EvalConfig<T>,
    erf: E,
    _marker: PhantomData<T>,
}

impl<T: Real> Evaluator<T, Cody> {
    /// Default configuration over the shared table of order [`DEFAULT_MAX_N`].
    pub fn with_defaults() -> Self {
        Self::new(default_table(), EvalConfig::default()).expect("default configuration is valid")
    }

    pub fn with_config(config: EvalConfig<T>) -> Result<Self> {
        Self::new(default_table(), config)
    }

    pub fn new(table: Arc<DerivCoefficientTable>, config: EvalConfig<T>) -> Result<Self> {
        Self::with_provider(table, config, Cody)
    }
}

impl<T: Real, E: ErfProvider<T>> Evaluator<T, E> {
    pub fn with_provider(table: Arc<DerivCoefficientTable>, config: EvalConfig<T>, erf: E) -> Result<Self> {
        config.validate(table.max_n())?;
        let head = (0..=config.taylor_order)
            .map(|n| table.taylor_coefficient(n, T::PI()))
            .collect::<Result<Vec<T>>>()?;
        Ok(Self { table, head, config, erf, _marker: PhantomData })
    }

    pub fn config(&self) -> &EvalConfig<T> {
        &self.config
    }

    pub fn table(&self) -> &DerivCoefficientTable {
        &self.table
    }

    pub fn taylor_head(&self, x: T) -> T {
        head_from_coefficients(&self.head, x, self.config.taylor_order)
    }

    /// Head plus tail with the configured order, tail end and form.
    pub fn series(&self, x: T) -> Result<(T, usize)> {
        let m = self.config.taylor_order;
        let (tail, n_tail) = tail_sum(x, m, self.config.tail_end, self.config.tail_form)?;
        Ok((self.taylor_head(x) + tail, m.div_ceil(2) + n_tail))
    }

    /// `|erf(y) - x|` in the cancellation-free form.
    pub fn residual(&self, x: T, y: T) -> T {
        newton_residual(&self.erf, x, y).abs()
    }

    pub fn inverf(&self, x: T) -> Result<EvalReport<T>> {
        if !(x > -T::one() && x < T::one()) {
            return Err(Error::Domain { value: x.to_f64().unwrap_or(f64::NAN), domain: "(-1, 1)" });
        }
        let a = x.abs();
        if a == T::zero() {
            return Ok(EvalReport {
                x,
                value: x,
                method: EvalMethod::TaylorTail,
                terms_used: 0,
                newton_iterations: 0,
                residual: T::zero(),
            });
        }
        let cfg = &self.config;
        let use_series = match cfg.method {
            Method::Taylor => true,
            Method::Lambert => false,
            Method::Auto | Method::Newton => a <= cfg.switch_point,
        };
        let (mut y, terms, mut method) = if use_series {
            let (v, t) = self.series(a)?;
            (v, t, EvalMethod::TaylorTail)
        } else {
            (inverf_boundary(a)?, 0, EvalMethod::Lambert)
        };
        let mut iterations = 0;
        let mut residual = self.residual(a, y);
        if cfg.polish || cfg.method == Method::Newton {
            if !(y.is_finite() && y > T::zero()) || residual > T::lit(0.25) {
                // Seed too far out for Newton; restart from the boundary formula.
                y = inverf_boundary(a)?;
            }
            let (v, it, r) = newton(&self.erf, a, y, T::zero())?;
            y = v;
            iterations = it;
            residual = r;
            method = EvalMethod::NewtonPolished;
        }
        let value = if x < T::zero() { -y } else { y };
        Ok(EvalReport { x, value, method, terms_used: terms, newton_iterations: iterations, residual })
    }

    /// Convenience: the value only.
    pub fn value(&self, x: T) -> Result<T> {
        self.inverf(x).map(|r| r.value)
    }

    /// Centered-difference residual of `J'' - 2 J (J')^2` at `z = x`, with `J` this evaluator.
    pub fn ode_residual(&self, x: T, h: T) -> Result<T> {
        if !(h > T::zero()) {
            return Err(Error::InvalidParameter("step h must be positive".into()));
        }
        let margin = T::lit(1e-6);
        if !(x.abs() + h < T::one() - margin) {
            return Err(Error::Domain {
                value: x.to_f64().unwrap_or(f64::NAN),
                domain: "|x| + h < 1 - 1e-6",
            });
        }
        let jm = self.value(x - h)?;
        let j0 = self.value(x)?;
        let jp = self.value(x + h)?;
        let two = T::lit(2.0);
        let d1 = (jp - jm) / (two * h);
        let d2 = (jp - two * j0 + jm) / (h * h);
        Ok(d2 - two * j0 * d1 * d1)
    }
}

/// Defect of `J'(z) int_0^z J dt + 1/2 - J'(z)/sqrt(pi)` from the exact series of the given order.
pub fn intdiff_check_with<T: Real>(table: &DerivCoefficientTable, x: T, order: usize) -> Result<T> {
    if order > table.max_n() {
        return Err(Error::IndexOutOfRange { index: order, max: table.max_n() });
    }
    let a = (0..=order)
        .map(|n| table.taylor_coefficient(n, T::PI()))
        .collect::<Result<Vec<T>>>()?;
    Ok(intdiff_from_coefficients(&a, x))
}

fn intdiff_from_coefficients<T: Real>(a: &[T], x: T) -> T {
    let mut derivative = T::zero();
    let mut integral = T::zero();
    for n in (1..a.len()).rev() {
        let nf = T::from_usize_lossy(n);
        derivative = derivative * x + nf * a[n];
        integral = integral * x + a[n] / (nf + T::one());
    }
    // derivative = sum n a_n x^(n-1); integral needs a further x^2.
    let integral = integral * x * x;
    derivative * integral + T::lit(0.5) - derivative / T::PI().sqrt()
}

/// [`intdiff_check_with`] at order [`INTDIFF_ORDER`] over a cached table.
pub fn intdiff_check<T: Real>(x: T) -> T {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    let c = COEFFS.get_or_init(|| {
        let table = build_table(INTDIFF_ORDER).expect("order is positive");
        (0..=INTDIFF_ORDER)
            .map(|n| table.taylor_coefficient(n, std::f64::consts::PI).expect("n within table"))
            .collect()
    });
    let a: Vec<T> = c.iter().map(|&v| T::lit(v)).collect();
    intdiff_from_coefficients(&a, x)
}
