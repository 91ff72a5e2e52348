use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITERATIONS: usize = 64;

/// Principal branch `W0(u)` for `u >= 0`, solving `w e^w = u` by Halley iteration.
///
/// Seeds: `u(1-u)` for `u < 1/4`, `ln(1+u)` up to `e`, `ln u - ln ln u` beyond.
pub fn lambert_w0<T: Real>(u: T) -> Result<T> {
    if u.is_nan() || u < T::zero() {
        return Err(Error::Domain {
            value: u.to_f64().unwrap_or(f64::NAN),
            domain: "[0, inf) for the principal Lambert-W branch",
        });
    }
    if u == T::zero() {
        return Ok(T::zero());
    }
    if u.is_infinite() {
        return Ok(u);
    }
    let e = T::E();
    let mut w = if u < T::lit(0.25) {
        u * (T::one() - u)
    } else if u <= e {
        u.ln_1p()
    } else {
        let l = u.ln();
        l - l.ln()
    };
    let two = T::lit(2.0);
    let tiny = T::lit(4.0) * T::epsilon();
    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - u;
        if f == T::zero() {
            break;
        }
        let wp1 = w + T::one();
        let step = f / (ew * wp1 - (w + two) * f / (two * wp1));
        let next = w - step;
        if !next.is_finite() {
            break;
        }
        let done = (next - w).abs() <= tiny * next.abs();
        w = next;
        if done {
            break;
        }
    }
    Ok(w)
}
