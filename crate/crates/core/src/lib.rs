//! Exact and asymptotic machinery for the inverse error function.
//!
//! The crate computes the derivatives `d_n` of `inverf` at the origin three
//! independent ways (a nonlinear rational recurrence, nested-derivative series
//! inversion, and the constant terms of an integer polynomial family), provides
//! overflow-safe closed-form asymptotics for those quantities, and evaluates
//! `inverf(x)` on `(-1, 1)` with an exact Taylor head plus an asymptotic tail,
//! a Lambert-W boundary formula and Newton polishing.
//!
//! Float code is generic over [`Real`] (`f32`/`f64`); the nested-derivative
//! engine is generic over [`Coefficient`], which also covers exact rationals.
//! The aliases below name the usual instantiations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asym;
pub mod carlitz;
pub mod coeffs;
pub mod error;
pub mod evaluator;
pub mod nested;
pub mod reproduce;
pub mod scalar;

pub use asym::{AsymptoticValue, Cody, ErfProvider, Sign};
pub use carlitz::IntPolynomial;
pub use coeffs::{build_table, DerivCoefficientTable};
pub use error::{Error, Result};
pub use evaluator::{EvalConfig, EvalMethod, EvalReport, Evaluator, Method, TailEnd, TailForm};
pub use nested::{GSequence, InverseSeries, NestedDerivTable, SeriesFunction};
pub use scalar::{Coefficient, Real};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type NestedTableF64 = NestedDerivTable<f64>;
pub type NestedTableExact = NestedDerivTable<Rational>;
pub type SeriesF64 = SeriesFunction<f64>;
pub type SeriesExact = SeriesFunction<Rational>;
pub type EvaluatorF64 = Evaluator<f64>;
pub type EvalConfigF64 = EvalConfig<f64>;
pub type EvalReportF64 = EvalReport<f64>;
pub type AsymptoticF64 = AsymptoticValue<f64>;
