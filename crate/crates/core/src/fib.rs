//! Arbitrary-precision Fibonacci engine for any signed index.
//!
//! Positive indices follow F₁ = F₂ = 1, Fₙ = Fₙ₋₂ + Fₙ₋₁ (with F₀ = 0,
//! forced by the recurrence). Negative indices extend backwards through
//! F₋ₙ = (−1)ⁿ⁺¹·Fₙ. Evaluation is fast doubling — O(log n) big-integer
//! multiplications — so indices up to a million stay well under a second.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::golden::GoldenNumber;

/// An exact signed Fibonacci value of unbounded magnitude.
pub type BigFib = BigInt;

/// Largest accepted index magnitude. F(10⁷) has about two million digits;
/// beyond that the engine refuses rather than grinding on.
pub const MAX_FIB_INDEX: u64 = 10_000_000;

/// (F(n), F(n+1)) for n ≥ 0 by the doubling identities
/// F(2k) = F(k)·(2F(k+1) − F(k)) and F(2k+1) = F(k)² + F(k+1)².
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n >> 1);
    let twice_b_minus_a = (&b << 1) - &a;
    let even = &a * twice_b_minus_a;
    let odd = &a * &a + &b * &b;
    if n & 1 == 0 {
        (even, odd)
    } else {
        let next = &even + &odd;
        (odd, next)
    }
}

/// Exact Fₙ for any signed index.
///
/// Fails with [`Error::IndexOverflow`] when |n| exceeds [`MAX_FIB_INDEX`].
pub fn fib(n: i64) -> Result<BigFib> {
    let magnitude = n.unsigned_abs();
    if magnitude > MAX_FIB_INDEX {
        return Err(Error::IndexOverflow { index: n });
    }
    let (value, _) = fib_pair(magnitude);
    if n < 0 && magnitude.is_multiple_of(2) {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// Exact φⁿ as a GoldenNumber, via φⁿ = Fₙ₋₁ + Fₙ·φ.
///
/// Negative exponents come out of the same formula with negaFibonacci
/// values, which agrees with `phi_power(-n).inv()`.
pub fn phi_power(n: i64) -> Result<GoldenNumber> {
    let f_n = fib(n)?;
    let previous = n.checked_sub(1).ok_or(Error::IndexOverflow { index: n })?;
    let f_prev = fib(previous)?;
    Ok(GoldenNumber::new(
        BigRational::from_integer(f_prev),
        BigRational::from_integer(f_n),
    ))
}
