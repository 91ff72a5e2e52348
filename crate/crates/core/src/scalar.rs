//! Scalar abstractions.
//!
//! Floating-point kernels are written against [`Real`] (implemented for `f32`
//! and `f64`). The nested-derivative engine runs over any [`Coefficient`], which
//! additionally covers exact big rationals so the same code yields both a fast
//! float table and an exact one.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Binary floating point: f32 or f64.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal; every literal used in this crate is representable.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal converts to a float type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize converts to a float type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Ring elements the nested-derivative recursion can run over.
pub trait Coefficient: Clone + Debug + Num + Neg<Output = Self> + Send + Sync {
    fn from_u64(n: u64) -> Self;

    /// Lossy view used for diagnostics and float comparisons.
    fn to_f64_lossy(&self) -> f64;
}

impl Coefficient for f64 {
    fn from_u64(n: u64) -> Self {
        n as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Coefficient for f32 {
    fn from_u64(n: u64) -> Self {
        n as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        *self as f64
    }
}

impl Coefficient for BigRational {
    fn from_u64(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64_lossy(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// Converts an exact rational to the nearest float, falling back to a
/// bit-shifted quotient when numerator or denominator exceed the f64 range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() && (v != 0.0 || q.numer().bits() == 0) {
            return v;
        }
    }
    let ln = ln_abs_rational(q);
    let sign = if q.numer() < &BigInt::from(0) { -1.0 } else { 1.0 };
    sign * ln.exp()
}

/// Natural log of |q| for q != 0, robust to numerators and denominators of any size.
pub fn ln_abs_rational(q: &BigRational) -> f64 {
    ln_abs_bigint(q.numer()) - ln_abs_bigint(q.denom())
}

/// Natural log of |n| for n != 0.
pub fn ln_abs_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map(f64::abs).unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 60;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap_or(f64::NAN).abs().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of n!, summed termwise.
pub fn ln_factorial<T: Real>(n: usize) -> T {
    (2..=n).fold(T::zero(), |acc, k| acc + T::from_usize_lossy(k).ln())
}
