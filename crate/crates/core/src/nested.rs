//! Series inversion through nested derivatives.
//!
//! For `h` with `f = 1/h'` and `z0 = h(x0)`, the inverse `H = h^{-1}` satisfies
//!
//! ```text
//! H^(n)(z0) = f(x0) * D^{n-1}[f](x0),   D^0[f] = 1,   D^{n+1}[f] = (f * D^n[f])'
//! ```
//!
//! # Coefficient convention
//!
//! Every table in this module stores **derivative values**, i.e. coefficients of
//! `(x - x0)^k / k!`:
//!
//! * `SeriesFunction::derivatives()[k] = f^(k)(x0)`
//! * `NestedDerivTable::get(n, k) = (d/dx)^k D^n[f] (x0)`
//!
//! In that convention one nested step reads
//!
//! ```text
//! A_k^{n+1} = sum_{j=0}^{k+1} C(k+1, j) * A_{k+1-j}^n * B_j
//! ```
//!
//! The binomial weight is what the factorials become; the unweighted form
//! `(k+1) * sum_j a_{k+1-j} b_j` holds for plain power-series coefficients
//! `a_k = A_k / k!`, `b_j = B_j / j!`. Use [`SeriesFunction::from_taylor`] to
//! build input from plain coefficients.
//!
//! All routines are generic over [`Coefficient`], so the same code produces
//! an exact rational table and a binary64 one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Real};

/// Expansion of `f` about `x0`, stored as derivative values `f^(k)(x0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFunction<S> {
    x0: S,
    derivatives: Vec<S>,
}

impl<S: Coefficient> SeriesFunction<S> {
    /// From derivative values `f^(k)(x0)`, `k = 0, 1, ...`.
    pub fn new(x0: S, derivatives: Vec<S>) -> Self {
        Self { x0, derivatives }
    }

    /// From plain Taylor coefficients `f^(k)(x0) / k!`.
    pub fn from_taylor(x0: S, taylor: Vec<S>) -> Self {
        let mut fact = S::one();
        let derivatives = taylor
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact = fact.clone() * S::from_u64(k as u64);
                }
                c * fact.clone()
            })
            .collect();
        Self { x0, derivatives }
    }

    pub fn x0(&self) -> &S {
        &self.x0
    }

    pub fn derivatives(&self) -> &[S] {
        &self.derivatives
    }

    /// Number of available coefficients.
    pub fn len(&self) -> usize {
        self.derivatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.derivatives.is_empty()
    }
}

/// Triangular table of `A_k^n`; row `n` holds `k_max + n_max - n + 1` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct NestedDerivTable<S> {
    rows: Vec<Vec<S>>,
    k_max: usize,
}

impl<S: Coefficient> NestedDerivTable<S> {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&S> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    pub fn row(&self, n: usize) -> Option<&[S]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `D^n[f](x0)`.
    pub fn nested_at_x0(&self, n: usize) -> Option<&S> {
        self.get(n, 0)
    }
}

/// Builds `A_k^n` for `n <= n_max`, `k <= k_max` (plus the wider rows the
/// recursion needs). Each nested order consumes one input coefficient, so `f`
/// must provide derivatives through index `n_max + k_max`.
pub fn nested_table<S: Coefficient>(
    f: &SeriesFunction<S>,
    n_max: usize,
    k_max: usize,
) -> Result<NestedDerivTable<S>> {
    let needed = n_max + k_max + 1;
    if f.len() < needed {
        return Err(Error::InsufficientCoefficients { needed, available: f.len() });
    }
    let b = f.derivatives();
    let width0 = n_max + k_max + 1;

    let mut first = vec![S::zero(); width0];
    first[0] = S::one();
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(first);

    // binomials[m] = C(m, .) for m <= width0, built by additions only.
    let mut binomials: Vec<Vec<S>> = vec![vec![S::one()]];
    for m in 1..=width0 {
        let prev = &binomials[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(S::one());
        for j in 1..m {
            row.push(prev[j - 1].clone() + prev[j].clone());
        }
        row.push(S::one());
        binomials.push(row);
    }

    for n in 0..n_max {
        let prev = &rows[n];
        let width = prev.len() - 1;
        let mut next = Vec::with_capacity(width);
        for k in 0..width {
            let c = &binomials[k + 1];
            let mut acc = S::zero();
            for j in 0..=k + 1 {
                let a = &prev[k + 1 - j];
                if a.is_zero() || b[j].is_zero() {
                    continue;
                }
                acc = acc + c[j].clone() * a.clone() * b[j].clone();
            }
            next.push(acc);
        }
        rows.push(next);
    }
    Ok(NestedDerivTable { rows, k_max })
}

/// Derivatives of the inverse function about `z0 = h(x0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseSeries<S> {
    pub x0: S,
    pub z0: S,
    /// `H^(n)(z0)` for `n = 1..=n_terms`, so index 0 holds `H'(z0) = f(x0)`.
    pub derivatives: Vec<S>,
}

impl<S: Coefficient> InverseSeries<S> {
    /// `H^(n)(z0)` for `n >= 1`; `H(z0) = x0` is not stored here.
    pub fn derivative(&self, n: usize) -> Option<&S> {
        n.checked_sub(1).and_then(|i| self.derivatives.get(i))
    }
}

impl<T: Real + Coefficient> InverseSeries<T> {
    /// Evaluates the truncated Taylor polynomial of `H` at `z`.
    pub fn eval(&self, z: T) -> T {
        let dz = z - self.z0;
        let mut term = T::one();
        let mut acc = self.x0;
        for (i, d) in self.derivatives.iter().enumerate() {
            term = term * dz / T::from_usize_lossy(i + 1);
            acc = acc + *d * term;
        }
        acc
    }
}

/// Taylor derivatives of `H = h^{-1}` at `z0`, given the series of `f = 1/h'` at `x0`.
pub fn invert_series<S: Coefficient>(
    f: &SeriesFunction<S>,
    z0: S,
    n_terms: usize,
) -> Result<InverseSeries<S>> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be >= 1".into()));
    }
    let b0 = f.derivatives().first().ok_or(Error::InsufficientCoefficients {
        needed: n_terms,
        available: 0,
    })?;
    if b0.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let table = nested_table(f, n_terms - 1, 0)?;
    let derivatives = (0..n_terms)
        .map(|m| b0.clone() * table.rows[m][0].clone())
        .collect();
    Ok(InverseSeries { x0: f.x0().clone(), z0, derivatives })
}

/// Derivatives of `exp(x^2)` at 0: `(2j)!/j!` at even order `2j`, zero at odd order.
pub fn exp_square_series<S: Coefficient>(len: usize) -> SeriesFunction<S> {
    let mut d = Vec::with_capacity(len);
    // (2j)!/j! = prod_{i=1}^{j} 2(2i-1), accumulated at even k.
    let mut even = S::one();
    for k in 0..len {
        if k % 2 == 0 {
            if k > 0 {
                even = even * S::from_u64(2 * (k as u64 - 1));
            }
            d.push(even.clone());
        } else {
            d.push(S::zero());
        }
    }
    SeriesFunction::new(S::zero(), d)
}

/// The `f = 1/erf'` series at 0, `(sqrt(pi)/2) exp(x^2)`, in binary float.
pub fn erf_series_function<T: Real + Coefficient>(len: usize) -> SeriesFunction<T> {
    let scale = T::PI().sqrt() / T::lit(2.0);
    let base = exp_square_series::<T>(len);
    SeriesFunction::new(T::zero(), base.derivatives.into_iter().map(|c| c * scale).collect())
}

/// `r_n` (with `d_n = r_n pi^(n/2)`) for `n = 1..=n_terms`, computed exactly by
/// nested-derivative inversion.
///
/// Since `f = c * exp(x^2)` with `c = sqrt(pi)/2`, `D^m[c g] = c^m D^m[g]` and
/// `d_n = c^n * D^{n-1}[exp(x^2)](0)`, hence `r_n = D^{n-1}[exp(x^2)](0) / 2^n`.
pub fn erf_inverse_ratios(n_terms: usize) -> Result<Vec<BigRational>> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be >= 1".into()));
    }
    let g = exp_square_series::<BigRational>(n_terms);
    let table = nested_table(&g, n_terms - 1, 0)?;
    let mut pow2 = BigInt::one();
    Ok((1..=n_terms)
        .map(|n| {
            pow2 = &pow2 * 2;
            table.rows[n - 1][0].clone() / BigRational::from_integer(pow2.clone())
        })
        .collect())
}

/// The erf-case polynomials `g_n = D^n[f] / f^n`, with `g_0 = 1` and
/// `g_{n+1} = g_n' + 2(n+1) x g_n`. Integer coefficients, power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSequence {
    polys: Vec<Vec<BigInt>>,
}

pub fn g_sequence(n_max: usize) -> GSequence {
    let mut polys: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..n_max {
        let p = &polys[n];
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            if i > 0 {
                next[i - 1] += c * BigInt::from(i);
            }
            next[i + 1] += c * BigInt::from(2 * (n + 1));
        }
        polys.push(next);
    }
    GSequence { polys }
}

impl GSequence {
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// Power-basis coefficients of `g_n`; `coefficients(n)[i]` multiplies `x^i`.
    pub fn coefficients(&self, n: usize) -> Option<&[BigInt]> {
        self.polys.get(n).map(Vec::as_slice)
    }

    pub fn degree(&self, n: usize) -> Option<usize> {
        self.polys.get(n).map(|p| p.len() - 1)
    }

    pub fn at_zero(&self, n: usize) -> Option<&BigInt> {
        self.polys.get(n).map(|p| &p[0])
    }

    pub fn eval<T: Real>(&self, n: usize, x: T) -> Option<T> {
        use num_traits::ToPrimitive;
        let p = self.polys.get(n)?;
        Some(p.iter().rev().fold(T::zero(), |acc, c| {
            acc * x + T::lit(c.to_f64().unwrap_or(f64::INFINITY))
        }))
    }
}
