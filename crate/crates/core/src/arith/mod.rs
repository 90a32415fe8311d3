//! Exact arithmetic: rationals, square roots of rationals, half-integers and
//! factorials.

mod factorial;
mod halfint;
pub mod primes;
mod radical_sum;
mod sqrt_rational;

pub use factorial::{binomial, factorial, factorials, FactorialCache, PrimeExps, DEFAULT_FACT_MAX};
pub use halfint::HalfInt;
pub use radical_sum::RadicalSum;
pub use sqrt_rational::{canonicalize, SqrtRational};

use crate::error::{GfError, Result};

/// Arbitrary-precision rational with a positive, coprime denominator.
pub type Rational = num_rational::BigRational;

/// Exact product of two canonical values.
pub fn sr_mul(a: &SqrtRational, b: &SqrtRational) -> SqrtRational {
    a * b
}

/// Sum of two values with a common radicand.
pub fn sr_add_same_radicand(a: &SqrtRational, b: &SqrtRational) -> Result<SqrtRational> {
    a.add_same_radicand(b)
}

/// `sqrt((J-2a)! (J-2b)! (J-2c)! / (J+1)!)` with `J = a+b+c`.
pub fn triangle_delta(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<SqrtRational> {
    let exps = triangle_delta_squared(a, b, c)?;
    let (coeff, r) = exps.sqrt_parts();
    Ok(SqrtRational::from_squarefree(coeff, r, num_bigint::BigUint::from(1u32)))
}

/// The square of [`triangle_delta`] as prime exponents.
pub fn triangle_delta_squared(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<PrimeExps> {
    let sum = a.doubled() + b.doubled() + c.doubled();
    if sum % 2 != 0 {
        return Err(GfError::Domain(format!("{a} + {b} + {c} is not an integer")));
    }
    if !triangle_ok(a, b, c) {
        return Err(GfError::Triangle(a, b, c));
    }
    let j = sum / 2;
    let mut e = PrimeExps::one();
    e.mul_factorial((j - a.doubled()) as u64, 1);
    e.mul_factorial((j - b.doubled()) as u64, 1);
    e.mul_factorial((j - c.doubled()) as u64, 1);
    e.mul_factorial((j + 1) as u64, -1);
    Ok(e)
}

/// `|a-b| <= c <= a+b` with all three non-negative.
pub fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.doubled(), b.doubled(), c.doubled());
    a >= 0 && b >= 0 && c >= 0 && c <= a + b && c >= (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(two: i64) -> HalfInt {
        HalfInt::from_doubled(two)
    }

    #[test]
    fn triangle_delta_examples() {
        assert_eq!(triangle_delta(h(0), h(0), h(0)).unwrap(), SqrtRational::one());
        assert_eq!(triangle_delta(h(2), h(2), h(2)).unwrap(), "1/1*sqrt(1/24)".parse().unwrap());
        assert!(matches!(triangle_delta(h(4), h(2), h(0)), Err(GfError::Triangle(..))));
        assert!(matches!(triangle_delta(h(1), h(0), h(0)), Err(GfError::Domain(_))));
    }
}
