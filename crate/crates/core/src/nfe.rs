//! Sequences obeying ωₙ = ωₙ₋₂ − ωₙ₋₁ and their closed form.
//!
//! A pair of initial values (ω₁, ω₂) determines a complete sequence; the
//! coefficients η = ω₁ and γ = (ω₁ + ω₂)/φ index the closed form
//! Ω_{η,γ}(n) = η·F₋ₙ + γ·F₋ₙ₊₁·φ, which reproduces the recurrence at
//! every integer. The principal sequence Φ(n) = φ^{1−n} is Ω₁,₁.
//!
//! Everything here is exact; the floating-point continuation lives in
//! [`crate::complex`].

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fib::{fib, phi_power};
use crate::golden::GoldenNumber;

/// The coefficient pair (η, γ) indexing a complete sequence, generic over
/// the coefficient domain: [`GoldenNumber`] on the exact path,
/// [`Complex64`] on the numeric one.
#[derive(Debug, Clone, PartialEq)]
pub struct NfeCoefficients<T> {
    pub eta: T,
    pub gamma: T,
}

impl<T> NfeCoefficients<T> {
    pub fn new(eta: T, gamma: T) -> Self {
        NfeCoefficients { eta, gamma }
    }
}

/// Coefficients on the exact path.
pub type ExactCoefficients = NfeCoefficients<GoldenNumber>;

/// Coefficients on the numeric path.
pub type ComplexCoefficients = NfeCoefficients<Complex64>;

impl ExactCoefficients {
    /// The numeric view of exact coefficients; both views agree under
    /// [`GoldenNumber::to_f64`] by construction.
    pub fn to_complex(&self) -> ComplexCoefficients {
        NfeCoefficients {
            eta: Complex64::new(self.eta.to_f64(), 0.0),
            gamma: Complex64::new(self.gamma.to_f64(), 0.0),
        }
    }
}

impl From<&ExactCoefficients> for ComplexCoefficients {
    fn from(exact: &ExactCoefficients) -> Self {
        exact.to_complex()
    }
}

/// A sequence fixed by its two initial values, with its derived
/// coefficients cached alongside.
#[derive(Debug, Clone, PartialEq)]
pub struct NfeSequence {
    pub omega1: GoldenNumber,
    pub omega2: GoldenNumber,
    coeffs: ExactCoefficients,
}

impl NfeSequence {
    pub fn new(omega1: GoldenNumber, omega2: GoldenNumber) -> Self {
        let coeffs = solve_coefficients(&omega1, &omega2);
        NfeSequence {
            omega1,
            omega2,
            coeffs,
        }
    }

    pub fn coefficients(&self) -> &ExactCoefficients {
        &self.coeffs
    }
}

/// The coefficients matching given initial values: η = ω₁ and
/// γ = (ω₁ + ω₂)/φ, computed exactly with 1/φ = φ − 1.
pub fn solve_coefficients(omega1: &GoldenNumber, omega2: &GoldenNumber) -> ExactCoefficients {
    let phi_inv = GoldenNumber::from_integers(-1, 1);
    NfeCoefficients {
        eta: omega1.clone(),
        gamma: (omega1 + omega2) * phi_inv,
    }
}

/// The terms ω₁ … ω_count by the recurrence itself. Position k of the
/// result holds ω_{k+1}; sequences are 1-indexed.
pub fn generate_recurrence(seq: &NfeSequence, count: usize) -> Vec<GoldenNumber> {
    let mut terms = Vec::with_capacity(count);
    if count >= 1 {
        terms.push(seq.omega1.clone());
    }
    if count >= 2 {
        terms.push(seq.omega2.clone());
    }
    for n in 2..count {
        let next = &terms[n - 2] - &terms[n - 1];
        terms.push(next);
    }
    terms
}

/// Exact closed form Ω_{η,γ}(n) = η·F₋ₙ + γ·F₋ₙ₊₁·φ at any integer.
pub fn evaluate_exact(coeffs: &ExactCoefficients, n: i64) -> Result<GoldenNumber> {
    let overflow = || Error::IndexOverflow { index: n };
    let neg_n = n.checked_neg().ok_or_else(overflow)?;
    let f_neg_n = fib(neg_n)?;
    let f_after = fib(neg_n.checked_add(1).ok_or_else(overflow)?)?;
    let eta_term = coeffs.eta.scale(&BigRational::from_integer(f_neg_n));
    let gamma_term = coeffs
        .gamma
        .scale(&BigRational::from_integer(f_after))
        * GoldenNumber::phi();
    Ok(eta_term + gamma_term)
}

/// The principal sequence Φ(n) = φ^{1−n}, exactly. Equal to
/// `evaluate_exact` with η = γ = 1 at every integer.
pub fn principal_exact(n: i64) -> Result<GoldenNumber> {
    let exponent = 1i64
        .checked_sub(n)
        .ok_or(Error::IndexOverflow { index: n })?;
    phi_power(exponent)
}

/// Coefficients of the principal sequence, η = γ = 1.
pub fn principal_coefficients() -> ExactCoefficients {
    NfeCoefficients::new(GoldenNumber::one(), GoldenNumber::one())
}
