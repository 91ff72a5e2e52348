//! The integer polynomials `P_0 = 1`, `P_{n+1} = P_n' + (n+1) x P_n`.
//!
//! `P_n` has parity `n` and is stored sparsely as
//! `P_n(x) = sum_k C_k^n x^(n-2k)`, `0 <= 2k <= n`. Their constant terms carry
//! the derivatives of inverf: `d_n = pi^(n/2) P_{n-1}(0) / 2^((n+1)/2)` for odd n.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest degree accepted by [`roots`].
pub const ROOT_DEGREE_CAP: usize = 30;

/// Largest order accepted by [`coefficient_oracle_ck`].
pub const NESTED_SUM_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    n: usize,
    /// `c[k] = C_k^n`, the coefficient of `x^(n-2k)`.
    c: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `C_k^n`, or `None` when `2k > n`.
    pub fn coefficient(&self, k: usize) -> Option<&BigInt> {
        self.c.get(k)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.c
    }

    /// Dense coefficients; index `i` multiplies `x^i`.
    pub fn power_coefficients(&self) -> Vec<BigInt> {
        let mut dense = vec![BigInt::zero(); self.n + 1];
        for (k, c) in self.c.iter().enumerate() {
            dense[self.n - 2 * k] = c.clone();
        }
        dense
    }

    pub fn at_zero(&self) -> BigInt {
        if self.n % 2 == 1 {
            BigInt::zero()
        } else {
            self.c[self.n / 2].clone()
        }
    }

    pub fn eval<T: Real>(&self, x: T) -> T {
        self.power_coefficients()
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + T::lit(c.to_f64().unwrap_or(f64::INFINITY)))
    }

    /// The next member of the family.
    fn step(&self) -> IntPolynomial {
        let n = self.n;
        let dense = self.power_coefficients();
        let mut next = vec![BigInt::zero(); n + 2];
        for (i, c) in dense.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i > 0 {
                next[i - 1] += c * BigInt::from(i);
            }
            next[i + 1] += c * BigInt::from(n + 1);
        }
        let m = n + 1;
        let c = (0..=m / 2).map(|k| next[m - 2 * k].clone()).collect();
        IntPolynomial { n: m, c }
    }

    pub fn export(&self) -> PolynomialExport {
        PolynomialExport {
            n: self.n,
            coefficients: (0..self.c.len())
                .rev()
                .map(|k| PowerCoefficient {
                    power: self.n - 2 * k,
                    value: self.c[k].to_string(),
                })
                .collect(),
        }
    }
}

/// JSON shape `{n, coefficients: [{power, value}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialExport {
    pub n: usize,
    pub coefficients: Vec<PowerCoefficient>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerCoefficient {
    pub power: usize,
    pub value: String,
}

/// `P_0..=P_{n_max}`.
pub fn build_pn(n_max: usize) -> Vec<IntPolynomial> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(IntPolynomial { n: 0, c: vec![BigInt::one()] });
    for n in 0..n_max {
        let next = out[n].step();
        out.push(next);
    }
    out
}

/// `C_1^n = n! * sum_{j<n} j/(j+1)`.
pub fn coefficient_oracle_c1(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("C_1^n needs n >= 2, got {n}")));
    }
    let sum: BigRational = (0..n)
        .map(|j| BigRational::new(BigInt::from(j), BigInt::from(j + 1)))
        .fold(BigRational::zero(), |a, b| a + b);
    let total = sum * BigRational::from_integer(factorial(n));
    debug_assert!(total.is_integer());
    Ok(total.to_integer())
}

/// `C_k^n` from the nested-sum formula
///
/// ```text
/// C_k^n = n! sum_{j_k<n} sum_{j_{k-1}<j_k} ... sum_{j_1<j_2} prod_i (j_i - 2i + 2)/(j_i + 1)
/// ```
///
/// evaluated with the memoized inner sums `S_k(m) = sum_{j<m} (j-2k+2)/(j+1) S_{k-1}(j)`,
/// `S_0 = 1`. Only for validation; capped at `n <= 12`.
pub fn coefficient_oracle_ck(n: usize, k: usize) -> Result<BigInt> {
    if n > NESTED_SUM_ORACLE_CAP {
        return Err(Error::InvalidParameter(format!(
            "nested-sum oracle is capped at n <= {NESTED_SUM_ORACLE_CAP}, got {n}"
        )));
    }
    if k < 1 || 2 * k > n {
        return Err(Error::InvalidParameter(format!("k must satisfy 1 <= k <= n/2, got n = {n}, k = {k}")));
    }
    let mut memo = HashMap::new();
    let total = nested_sum(k, n, &mut memo) * BigRational::from_integer(factorial(n));
    debug_assert!(total.is_integer());
    Ok(total.to_integer())
}

fn nested_sum(k: usize, m: usize, memo: &mut HashMap<(usize, usize), BigRational>) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    if let Some(v) = memo.get(&(k, m)) {
        return v.clone();
    }
    let mut acc = BigRational::zero();
    for j in 0..m {
        let w = BigRational::new(BigInt::from(j as i64 - 2 * k as i64 + 2), BigInt::from(j + 1));
        if w.is_zero() {
            continue;
        }
        acc += w * nested_sum(k - 1, j, memo);
    }
    memo.insert((k, m), acc.clone());
    acc
}

/// `P_n(0)`: zero for odd `n`.
pub fn pn_at_zero(n: usize) -> BigInt {
    build_pn(n).pop().expect("build_pn returns n + 1 polynomials").at_zero()
}

/// All `n` complex roots of `P_n`, via eigenvalues of the balanced companion
/// matrix of `P_n / n!`, each polished by Newton on the polynomial until the
/// step falls below `tolerance`.
pub fn roots(n: usize, tolerance: f64) -> Result<Vec<Complex64>> {
    roots_with_cap(n, tolerance, ROOT_DEGREE_CAP)
}

pub fn roots_with_cap(n: usize, tolerance: f64, cap: usize) -> Result<Vec<Complex64>> {
    if n < 1 {
        return Err(Error::InvalidParameter("P_0 has no roots".into()));
    }
    if n > cap {
        return Err(Error::DegreeCapExceeded { degree: n, cap });
    }
    let p = build_pn(n).pop().expect("build_pn returns n + 1 polynomials");
    let lead = factorial(n);
    let monic: Vec<f64> = p
        .power_coefficients()
        .iter()
        .map(|c| (BigRational::new(c.clone(), lead.clone())).to_f64().unwrap_or(f64::NAN))
        .collect();

    let mut companion = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        companion[(i, n - 1)] = -monic[i];
    }
    balance(&mut companion);

    let eig = companion.complex_eigenvalues();
    Ok(eig.iter().map(|&z| polish_root(&monic, z, tolerance)).collect())
}

/// Parlett-Reinsch balancing by powers of two.
fn balance(a: &mut DMatrix<f64>) {
    const RADIX: f64 = 2.0;
    let n = a.nrows();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut g = r / RADIX;
            let mut f = 1.0;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= inv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

fn polish_root(monic: &[f64], mut z: Complex64, tolerance: f64) -> Complex64 {
    for _ in 0..20 {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        z -= step;
        if step.norm() <= tolerance {
            break;
        }
    }
    z
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}
