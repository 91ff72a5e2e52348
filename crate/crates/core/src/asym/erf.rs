//! Error functions from W. J. Cody's rational Chebyshev approximations
//! (CALERF, netlib specfun), generic over the float type.
//!
//! Three intervals: `|x| <= 0.46875` (erf directly), `0.46875 < |x| <= 4`
//! and `|x| > 4` (erfcx directly). `exp(-x^2)` is formed as
//! `exp(-t^2) * exp(-(x-t)(x+t))` with `t = trunc(16x)/16` so the square is exact.

#![allow(clippy::excessive_precision)]

use crate::scalar::Real;

/// Source of `erf`, `erfc` and the scaled `erfcx(t) = exp(t^2) erfc(t)`.
pub trait ErfProvider<T: Real> {
    fn erf(&self, x: T) -> T;
    fn erfc(&self, x: T) -> T;
    fn erfcx(&self, x: T) -> T;
}

/// The self-contained provider used throughout the crate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cody;

impl<T: Real> ErfProvider<T> for Cody {
    fn erf(&self, x: T) -> T {
        calerf(x, Kind::Erf)
    }

    fn erfc(&self, x: T) -> T {
        calerf(x, Kind::Erfc)
    }

    fn erfcx(&self, x: T) -> T {
        calerf(x, Kind::Erfcx)
    }
}

pub fn erf<T: Real>(x: T) -> T {
    calerf(x, Kind::Erf)
}

pub fn erfc<T: Real>(x: T) -> T {
    calerf(x, Kind::Erfc)
}

pub fn erfcx<T: Real>(x: T) -> T {
    calerf(x, Kind::Erfcx)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Erf,
    Erfc,
    Erfcx,
}

const THRESH: f64 = 0.46875;
/// 1/sqrt(pi)
const SQRPI: f64 = 5.641_895_835_477_562_869_5e-1;

const A: [f64; 5] = [
    3.161_123_743_870_565_6e00,
    1.138_641_541_510_501_56e02,
    3.774_852_376_853_020_21e02,
    3.209_377_589_138_469_47e03,
    1.857_777_061_846_031_53e-1,
];
const B: [f64; 4] = [
    2.360_129_095_234_412_09e01,
    2.440_246_379_344_441_73e02,
    1.282_616_526_077_372_28e03,
    2.844_236_833_439_170_62e03,
];
const C: [f64; 9] = [
    5.641_884_969_886_700_89e-1,
    8.883_149_794_388_375_94e00,
    6.611_919_063_714_162_95e01,
    2.986_351_381_974_001_31e02,
    8.819_522_212_417_690_90e02,
    1.712_047_612_634_070_58e03,
    2.051_078_377_826_071_47e03,
    1.230_339_354_797_997_25e03,
    2.153_115_354_744_038_46e-8,
];
const D: [f64; 8] = [
    1.574_492_611_070_983_47e01,
    1.176_939_508_913_124_99e02,
    5.371_811_018_620_098_58e02,
    1.621_389_574_566_690_19e03,
    3.290_799_235_733_459_63e03,
    4.362_619_090_143_247_16e03,
    3.439_367_674_143_721_64e03,
    1.230_339_354_803_749_42e03,
];
const P: [f64; 6] = [
    3.053_266_349_612_323_44e-1,
    3.603_448_999_498_044_39e-1,
    1.257_817_261_112_292_46e-1,
    1.608_378_514_874_227_66e-2,
    6.587_491_615_298_378_03e-4,
    1.631_538_713_730_209_78e-2,
];
const Q: [f64; 5] = [
    2.568_520_192_289_822_42e00,
    1.872_952_849_923_460_47e00,
    5.279_051_029_514_284_12e-1,
    6.051_834_131_244_131_91e-2,
    2.335_204_976_268_691_85e-3,
];

/// `exp(-x^2)` with the square split so that `t^2` is exact.
fn exp_neg_square<T: Real>(x: T) -> T {
    let sixteen = T::lit(16.0);
    let t = (x * sixteen).trunc() / sixteen;
    let del = (x - t) * (x + t);
    (-t * t).exp() * (-del).exp()
}

fn calerf<T: Real>(x: T, kind: Kind) -> T {
    if x.is_nan() {
        return x;
    }
    let lit = T::lit;
    let one = T::one();
    let two = lit(2.0);
    let half = lit(0.5);
    let y = x.abs();
    let mut result;

    if y <= lit(THRESH) {
        let ysq = if y > T::epsilon() / two { y * y } else { T::zero() };
        let mut xnum = lit(A[4]) * ysq;
        let mut xden = ysq;
        for i in 0..3 {
            xnum = (xnum + lit(A[i])) * ysq;
            xden = (xden + lit(B[i])) * ysq;
        }
        result = x * (xnum + lit(A[3])) / (xden + lit(B[3]));
        if kind != Kind::Erf {
            result = one - result;
        }
        if kind == Kind::Erfcx {
            result = ysq.exp() * result;
        }
        return result;
    } else if y <= lit(4.0) {
        let mut xnum = lit(C[8]) * y;
        let mut xden = y;
        for i in 0..7 {
            xnum = (xnum + lit(C[i])) * y;
            xden = (xden + lit(D[i])) * y;
        }
        result = (xnum + lit(C[7])) / (xden + lit(D[7]));
        if kind != Kind::Erfcx {
            result = exp_neg_square(y) * result;
        }
    } else {
        result = T::zero();
        let xbig = xbig::<T>();
        let xhuge = one / (two * (T::epsilon() / two).sqrt());
        let xmax = T::max_value().min(one / (T::PI().sqrt() * T::min_positive_value()));
        let mut skip = false;
        if y >= xbig {
            if kind != Kind::Erfcx || y >= xmax {
                skip = true;
            }
            if y >= xhuge {
                result = lit(SQRPI) / y;
                skip = true;
            }
        }
        if !skip {
            let ysq = one / (y * y);
            let mut xnum = lit(P[5]) * ysq;
            let mut xden = ysq;
            for i in 0..4 {
                xnum = (xnum + lit(P[i])) * ysq;
                xden = (xden + lit(Q[i])) * ysq;
            }
            result = ysq * (xnum + lit(P[4])) / (xden + lit(Q[4]));
            result = (lit(SQRPI) - result) / y;
            if kind != Kind::Erfcx {
                result = exp_neg_square(y) * result;
            }
        }
    }

    match kind {
        Kind::Erf => {
            result = (half - result) + half;
            if x < T::zero() {
                result = -result;
            }
        }
        Kind::Erfc => {
            if x < T::zero() {
                result = two - result;
            }
        }
        Kind::Erfcx => {
            if x < T::zero() {
                let xneg = -(T::max_value() / two).ln().sqrt();
                if x < xneg {
                    result = T::infinity();
                } else {
                    let y = T::one() / exp_neg_square(x);
                    result = (y + y) - result;
                }
            }
        }
    }
    result
}

/// Argument beyond which erfc underflows: solves `exp(-x^2)/(x sqrt(pi)) = min_positive`.
fn xbig<T: Real>() -> T {
    let ln_min = T::min_positive_value().ln();
    let sqrt_pi = T::PI().sqrt();
    let mut x = T::lit(9.0);
    for _ in 0..4 {
        x = (-(ln_min + (x * sqrt_pi).ln())).sqrt();
    }
    x
}
