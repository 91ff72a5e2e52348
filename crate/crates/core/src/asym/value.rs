use std::ops::{Add, Neg};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
        }
    }
}

/// A real number carried as `sign * exp(log_magnitude)`.
///
/// Quantities of `n!` scale overflow binary64 near `n = 171`; in this form they
/// stay finite. Zero has `log_magnitude = -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValue<T> {
    pub log_magnitude: T,
    pub sign: Sign,
}

impl<T: Real> AsymptoticValue<T> {
    pub fn zero() -> Self {
        Self { log_magnitude: T::neg_infinity(), sign: Sign::Zero }
    }

    pub fn from_log(log_magnitude: T, sign: Sign) -> Self {
        if sign == Sign::Zero || log_magnitude == T::neg_infinity() {
            return Self::zero();
        }
        Self { log_magnitude, sign }
    }

    pub fn from_value(v: T) -> Self {
        if v == T::zero() {
            Self::zero()
        } else if v > T::zero() {
            Self { log_magnitude: v.ln(), sign: Sign::Positive }
        } else {
            Self { log_magnitude: (-v).ln(), sign: Sign::Negative }
        }
    }

    /// `sign * exp(log_magnitude)`; may overflow to infinity.
    pub fn value(&self) -> T {
        match self.sign {
            Sign::Zero => T::zero(),
            Sign::Positive => self.log_magnitude.exp(),
            Sign::Negative => -self.log_magnitude.exp(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    /// Multiplies by `exp(log_factor)`.
    pub fn scale_log(self, log_factor: T) -> Self {
        if self.is_zero() {
            return self;
        }
        Self { log_magnitude: self.log_magnitude + log_factor, sign: self.sign }
    }
}

impl<T: Real> Neg for AsymptoticValue<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { log_magnitude: self.log_magnitude, sign: self.sign.flip() }
    }
}

impl<T: Real> Add for AsymptoticValue<T> {
    type Output = Self;

    /// Signed log-sum-exp. Exact cancellation of equal magnitudes yields zero.
    fn add(self, other: Self) -> Self {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let (big, small) = if self.log_magnitude >= other.log_magnitude {
            (self, other)
        } else {
            (other, self)
        };
        let ratio = (small.log_magnitude - big.log_magnitude).exp();
        if big.sign == small.sign {
            Self { log_magnitude: big.log_magnitude + ratio.ln_1p(), sign: big.sign }
        } else if ratio == T::one() {
            Self::zero()
        } else {
            Self { log_magnitude: big.log_magnitude + (-ratio).ln_1p(), sign: big.sign }
        }
    }
}
