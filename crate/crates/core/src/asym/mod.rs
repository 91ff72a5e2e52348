//! Closed-form asymptotics for the polynomial family and for `d_n / n!`.
//!
//! Everything of `n!` scale is returned as an [`AsymptoticValue`] (log magnitude
//! plus sign). For `x >= 0` the complementary error function enters only
//! through `erfcx`, so `1 - erf(x/sqrt 2)` is never formed where it would
//! cancel or underflow.

mod erf;
mod lambert;
mod value;

pub use erf::{erf, erfc, erfcx, Cody, ErfProvider};
pub use lambert::lambert_w0;
pub use value::{AsymptoticValue, Sign};

use crate::error::{Error, Result};
use crate::scalar::{ln_factorial, Real};

fn half_ln_two_over_pi<T: Real>() -> T {
    (T::lit(2.0) / T::PI()).ln() / T::lit(2.0)
}

/// `ln A(x)` for `A(x) = sqrt(2/pi) exp(-x^2/2) / (1 - erf(x/sqrt 2))`.
pub fn ln_a_mills<T: Real>(x: T) -> T {
    let t = x / T::SQRT_2();
    if x >= T::zero() {
        half_ln_two_over_pi::<T>() - erfcx(t).ln()
    } else {
        half_ln_two_over_pi::<T>() - x * x / T::lit(2.0) - erfc(t).ln()
    }
}

/// `A(x) = sqrt(2/pi) exp(-x^2/2) / (1 - erf(x/sqrt 2))`; tends to `x + 1/x` as `x` grows.
pub fn a_mills<T: Real>(x: T) -> T {
    let t = x / T::SQRT_2();
    let c = (T::lit(2.0) / T::PI()).sqrt();
    if x >= T::zero() {
        c / erfcx(t)
    } else {
        c * (-x * x / T::lit(2.0)).exp() / erfc(t)
    }
}

/// `ln((n+1) / (1 - erf(x/sqrt 2)))`, the quantity under the square root in `Phi`.
fn phi_log_argument<T: Real>(x: T, n: usize) -> T {
    let t = x / T::SQRT_2();
    let ln_n1 = T::from_usize_lossy(n + 1).ln();
    if x >= T::zero() {
        ln_n1 + x * x / T::lit(2.0) - erfcx(t).ln()
    } else {
        ln_n1 - erfc(t).ln()
    }
}

/// `Phi(x, n) = A(x)^(n+1) * [2 ln((n+1)/(1 - erf(x/sqrt 2)))]^(-1/2)`, in log space.
pub fn phi<T: Real>(x: T, n: usize) -> Result<AsymptoticValue<T>> {
    if n < 1 {
        return Err(Error::InvalidParameter("Phi(x, n) needs n >= 1".into()));
    }
    let l = phi_log_argument(x, n);
    if !(l > T::zero()) {
        return Err(Error::LogArgument(l.exp().to_f64().unwrap_or(f64::NAN)));
    }
    let two = T::lit(2.0);
    let log = T::from_usize_lossy(n + 1) * ln_a_mills(x) - (two * l).ln() / two;
    Ok(AsymptoticValue::from_log(log, Sign::Positive))
}

/// `P_n(x) ~ n! [Phi(x, n) + (-1)^n Phi(-x, n)]`, including the `n!`.
pub fn pn_asymptotic<T: Real>(x: T, n: usize) -> Result<AsymptoticValue<T>> {
    let plus = phi(x, n)?;
    let minus = phi(-x, n)?;
    let minus = if n.is_multiple_of(2) { minus } else { -minus };
    Ok((plus + minus).scale_log(ln_factorial(n)))
}

/// `d_n / n! ~ [1 + (-1)^(n-1)] / (2 n sqrt(ln n))`: zero for even `n`, `1/(n sqrt(ln n))` for odd.
pub fn dn_over_nfact_asym<T: Real>(n: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("asymptotic d_n/n! needs n >= 2, got {n}")));
    }
    if n.is_multiple_of(2) {
        return Ok(T::zero());
    }
    let nf = T::from_usize_lossy(n);
    Ok(T::one() / (nf * nf.ln().sqrt()))
}

/// `inverf(x) ~ sqrt(W0(2 / (pi (x-1)^2)) / 2)` as `x -> 1-`.
pub fn inverf_boundary<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero() && x < T::one()) {
        return Err(Error::Domain {
            value: x.to_f64().unwrap_or(f64::NAN),
            domain: "(0, 1) for the boundary approximant",
        });
    }
    let gap = T::one() - x;
    let arg = T::lit(2.0) / (T::PI() * gap * gap);
    Ok((lambert_w0(arg)? / T::lit(2.0)).sqrt())
}
