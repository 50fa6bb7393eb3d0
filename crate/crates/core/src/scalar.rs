//! Numeric abstraction shared by the closeness engine and the formula catalog.
//!
//! Every closeness term is a power of one half, so sums stay dyadic rationals.
//! `f64` represents them exactly at desk scale; [`Exact`] represents them exactly
//! at any scale and is used as an independent arithmetic route in tests.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, ToPrimitive};

/// Arbitrary-precision rational scalar.
pub type Exact = BigRational;

pub trait Scalar:
    Num + Clone + PartialOrd + Debug + Send + Sync + FromPrimitive + ToPrimitive
{
    /// `2^exp`, exact for every exponent the type can represent.
    fn pow2(exp: i32) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer parameter representable in scalar type")
    }

    /// Lossy conversion used for reporting; `NaN` if out of range.
    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn abs_diff(&self, other: &Self) -> Self {
        if self >= other {
            self.clone() - other.clone()
        } else {
            other.clone() - self.clone()
        }
    }
}

impl Scalar for f64 {
    fn pow2(exp: i32) -> Self {
        2f64.powi(exp)
    }
}

impl Scalar for f32 {
    fn pow2(exp: i32) -> Self {
        2f32.powi(exp)
    }
}

impl Scalar for BigRational {
    fn pow2(exp: i32) -> Self {
        let p = BigInt::one() << exp.unsigned_abs();
        if exp >= 0 {
            BigRational::from_integer(p)
        } else {
            BigRational::new(BigInt::one(), p)
        }
    }
}

/// Table of `2^-d` for `d = 0..=max`, indexed by hop count.
pub(crate) fn half_powers<T: Scalar>(max: u32) -> Vec<T> {
    let mut table = Vec::with_capacity(max as usize + 1);
    let half = T::one() / T::from_int(2);
    let mut cur = T::one();
    for _ in 0..=max {
        table.push(cur.clone());
        cur = cur * half.clone();
    }
    table
}

/// Sum in the given order; the empty sum is zero.
pub(crate) fn ordered_sum<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc + v.clone())
}
