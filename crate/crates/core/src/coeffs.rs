//! Exact derivatives of inverf at the origin.
//!
//! With `d_n = r_n * pi^(n/2)` the nonlinear recurrence for the derivatives
//! loses its `sqrt(pi)` factors and becomes
//!
//! ```text
//! r_{n+1} = sum_{k=0}^{n-1} C(n, k+1) r_k r_{n-k},   r_0 = 0, r_1 = 1/2
//! ```
//!
//! which runs entirely in exact rational arithmetic. Only odd `r_n` are
//! nonzero. Building the table costs O(n^2) big-rational products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ln_abs_rational, rational_to_f64, Real};

/// Default table length used by the evaluator and the CLI.
pub const DEFAULT_MAX_N: usize = 101;

/// `r_n` for `0 <= n <= max_n`, where `d_n = r_n * pi^(n/2)`.
///
/// Immutable once built; share it behind an `Arc` across threads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<CoefficientRecord>", try_from = "Vec<CoefficientRecord>")]
pub struct DerivCoefficientTable {
    r: Vec<BigRational>,
}

/// One serialized entry: `{n, numerator, denominator}` with decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub n: usize,
    pub numerator: String,
    pub denominator: String,
}

/// Builds `r_0..=r_max_n` from the recurrence.
pub fn build_table(max_n: usize) -> Result<DerivCoefficientTable> {
    if max_n < 1 {
        return Err(Error::InvalidParameter(format!("max_n must be >= 1, got {max_n}")));
    }
    // Every nonzero r_n is s_n / 2^((n+1)/2) with s_n an integer, and the
    // powers of two balance on both sides, so the recurrence runs on s_n.
    let mut s: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    s.push(BigInt::zero());
    s.push(BigInt::one());

    // Pascal row C(n, .) carried forward one n at a time.
    let mut pascal: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for n in 1..max_n {
        let mut next = BigInt::zero();
        for k in 0..n {
            let (a, b) = (&s[k], &s[n - k]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            next += a * b * &pascal[k + 1];
        }
        s.push(next);

        let mut row = Vec::with_capacity(n + 2);
        row.push(BigInt::one());
        for j in 1..=n {
            row.push(&pascal[j - 1] + &pascal[j]);
        }
        row.push(BigInt::one());
        pascal = row;
    }
    let r = s
        .into_iter()
        .enumerate()
        .map(|(n, s_n)| BigRational::new(s_n, BigInt::one() << n.div_ceil(2)))
        .collect();
    Ok(DerivCoefficientTable { r })
}

impl DerivCoefficientTable {
    pub fn max_n(&self) -> usize {
        self.r.len() - 1
    }

    /// Exact `r_n`.
    pub fn ratio(&self, n: usize) -> Result<&BigRational> {
        self.r.get(n).ok_or(Error::IndexOutOfRange { index: n, max: self.max_n() })
    }

    pub fn ratios(&self) -> &[BigRational] {
        &self.r
    }

    /// Exact `r_n / n!`, the rational part of the Taylor coefficient of `z^n`.
    pub fn taylor_ratio(&self, n: usize) -> Result<BigRational> {
        let r = self.ratio(n)?;
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        Ok(r / BigRational::from_integer(fact))
    }

    /// Taylor coefficient `d_n / n! = (r_n / n!) * pi^(n/2)` using the supplied value of pi.
    ///
    /// The rational part is reduced exactly before the single float multiply.
    pub fn taylor_coefficient<T: Real>(&self, n: usize, pi_value: T) -> Result<T> {
        let q = self.taylor_ratio(n)?;
        if q.is_zero() {
            return Ok(T::zero());
        }
        let half_n = T::from_usize_lossy(n) / T::lit(2.0);
        let direct = T::lit(rational_to_f64(&q)) * pi_value.powf(half_n);
        if direct.is_normal() {
            return Ok(direct);
        }
        let ln = T::lit(ln_abs_rational(&q)) + half_n * pi_value.ln();
        let sign = if q.is_negative() { -T::one() } else { T::one() };
        Ok(sign * ln.exp())
    }

    /// `d_n = r_n * pi^(n/2)` in binary64.
    pub fn dn_float(&self, n: usize) -> Result<f64> {
        let r = self.ratio(n)?;
        if r.is_zero() {
            return Ok(0.0);
        }
        let half_n = n as f64 / 2.0;
        let direct = rational_to_f64(r) * std::f64::consts::PI.powf(half_n);
        if direct.is_finite() {
            return Ok(direct);
        }
        Ok((ln_abs_rational(r) + half_n * std::f64::consts::PI.ln()).exp())
    }

    pub fn to_records(&self) -> Vec<CoefficientRecord> {
        self.r
            .iter()
            .enumerate()
            .map(|(n, q)| CoefficientRecord {
                n,
                numerator: q.numer().to_string(),
                denominator: q.denom().to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coefficient records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl From<DerivCoefficientTable> for Vec<CoefficientRecord> {
    fn from(t: DerivCoefficientTable) -> Self {
        t.to_records()
    }
}

impl TryFrom<Vec<CoefficientRecord>> for DerivCoefficientTable {
    type Error = Error;

    fn try_from(records: Vec<CoefficientRecord>) -> Result<Self> {
        if records.len() < 2 {
            return Err(Error::Malformed("a table holds at least r_0 and r_1".into()));
        }
        let mut r = Vec::with_capacity(records.len());
        for (i, rec) in records.into_iter().enumerate() {
            if rec.n != i {
                return Err(Error::Malformed(format!("expected n = {i}, found {}", rec.n)));
            }
            let num: BigInt = rec
                .numerator
                .parse()
                .map_err(|_| Error::Malformed(format!("numerator of r_{i}: {:?}", rec.numerator)))?;
            let den: BigInt = rec
                .denominator
                .parse()
                .map_err(|_| Error::Malformed(format!("denominator of r_{i}: {:?}", rec.denominator)))?;
            if !den.is_positive() {
                return Err(Error::Malformed(format!("denominator of r_{i} must be positive")));
            }
            r.push(BigRational::new(num, den));
        }
        Ok(DerivCoefficientTable { r })
    }
}

/// Binary-float mirror of the recurrence, returning Taylor coefficients `d_n / n!`.
///
/// Runs on the normalized form
/// `a_{n+1} = sqrt(pi)/(n+1) * sum_{k=0}^{n-1} (n-k)/(k+1) * a_k a_{n-k}`,
/// which never forms factorials and so does not overflow. The exact table is
/// the reference; this exists for speed.
pub fn taylor_coefficients_float<T: Real>(max_n: usize) -> Vec<T> {
    let mut a = vec![T::zero(); max_n.max(1) + 1];
    let sqrt_pi = T::PI().sqrt();
    a[1] = sqrt_pi / T::lit(2.0);
    for n in 1..max_n {
        let mut acc = T::zero();
        // Only odd k with odd n - k contribute.
        let mut k = 1;
        while k < n {
            let w = T::from_usize_lossy(n - k) / T::from_usize_lossy(k + 1);
            acc = acc + w * a[k] * a[n - k];
            k += 2;
        }
        a[n + 1] = sqrt_pi * acc / T::from_usize_lossy(n + 1);
    }
    a
}
