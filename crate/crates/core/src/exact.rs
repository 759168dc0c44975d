//! Exact integer kernel: factorials, binomials and Catalan numbers.
//!
//! Every quantity in the crate is an [`ExactInt`]; nothing is ever rounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Exact fraction, always normalized to lowest terms with positive denominator.
pub type ExactRational = BigRational;

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((2..=n).fold(ExactInt::one(), |acc, k| acc * k))
}

/// `C(n, k)`, defined as zero whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if k < 0 || n < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // After step i the accumulator is C(n - k + i, i), so each division is exact.
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// The Catalan number `C(2d, d) / (d + 1)`.
pub fn catalan(d: u64) -> ExactInt {
    let d = i64::try_from(d).expect("catalan index fits in i64");
    exact_div(&binomial(2 * d, d), &ExactInt::from(d + 1))
}

/// Integer division that must leave no remainder.
///
/// A remainder here means an arithmetic bug upstream, so it panics.
pub fn exact_div(num: &ExactInt, den: &ExactInt) -> ExactInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "inexact division: {num} / {den} leaves remainder {r}"
    );
    q
}

/// Converts a rational that must be integral back to an integer.
pub fn rational_to_int(r: &ExactRational) -> ExactInt {
    assert!(r.is_integer(), "expected an integral value, got {r}");
    r.to_integer()
}
