//! Exact arithmetic in the field ℚ(√5) on the basis {1, φ}.
//!
//! Every element is written as `a + b·φ` with rational `a`, `b`, where
//! φ = (1 + √5)/2. Multiplication reduces with φ² = φ + 1, inversion
//! uses the field conjugate (a + b) − b·φ and the norm a² + ab − b².
//! Because φ is irrational the representation is unique, so equality and
//! the zero test are component-wise and exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// φ in double precision, evaluated as (1 + √5)/2.
pub fn phi_f64() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

/// An exact element `a + b·φ` of ℚ(√5).
///
/// The rational coefficients are kept in lowest terms with positive
/// denominator by `BigRational` itself, so any field combination of the
/// public fields is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoldenNumber {
    /// Coefficient of 1.
    pub a: BigRational,
    /// Coefficient of φ.
    pub b: BigRational,
}

impl GoldenNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNumber { a, b }
    }

    /// Builds `a + b·φ` from machine integers.
    pub fn from_integers(a: i64, b: i64) -> Self {
        GoldenNumber {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0)
    }

    /// The golden ratio itself, `0 + 1·φ`.
    pub fn phi() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The field conjugate `(a + b) − b·φ`, i.e. the image of the
    /// automorphism sending φ to its conjugate root 1 − φ.
    pub fn conjugate(&self) -> Self {
        GoldenNumber {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// The field norm `N(a + b·φ) = a² + ab − b²`, a rational number.
    /// Multiplicative: N(xy) = N(x)·N(y), and zero only at zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Multiplicative inverse, via the conjugate divided by the norm.
    ///
    /// Fails with [`Error::ZeroDivision`] when `self` is zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let norm = self.norm();
        let conj = self.conjugate();
        Ok(GoldenNumber {
            a: conj.a / &norm,
            b: conj.b / norm,
        })
    }

    /// Scales both coefficients by a rational factor.
    pub fn scale(&self, factor: &BigRational) -> Self {
        GoldenNumber {
            a: &self.a * factor,
            b: &self.b * factor,
        }
    }

    /// Evaluates `a + b·φ` in double precision with φ = (1 + √5)/2.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * phi_f64()
    }
}

impl Add for &GoldenNumber {
    type Output = GoldenNumber;

    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &GoldenNumber {
    type Output = GoldenNumber;

    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &GoldenNumber {
    type Output = GoldenNumber;

    // (a₁ + b₁φ)(a₂ + b₂φ) with φ² → φ + 1:
    //   constant part a₁a₂ + b₁b₂, φ part a₁b₂ + a₂b₁ + b₁b₂.
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        let bb = &self.b * &rhs.b;
        GoldenNumber {
            a: &self.a * &rhs.a + &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb,
        }
    }
}

impl Div for &GoldenNumber {
    type Output = GoldenNumber;

    /// Field division. Panics on a zero divisor; use [`GoldenNumber::inv`]
    /// for a checked path.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GoldenNumber) -> GoldenNumber {
        self * &rhs.inv().expect("division by zero GoldenNumber")
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;

    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$method(&rhs)
            }
        }
        impl $Op<&GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$method(rhs)
            }
        }
        impl $Op<GoldenNumber> for &GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GoldenNumber {
    type Output = GoldenNumber;

    fn neg(self) -> GoldenNumber {
        -&self
    }
}

/// Canonical serialization: `a + b*phi` with reduced fractions, constant
/// term first, zero terms dropped, `0` for zero. Examples: `1`,
/// `-3/2 + 2*phi`, `13 - 8*phi`, `1*phi`.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*phi", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}*phi", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}*phi", self.a, self.b)
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(numer).map_err(|_| bad())?;
    let denom = match denom {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// Parses the canonical form plus the liberal variants: whitespace is
/// ignored, terms may come in either order, the `*` is optional, and a
/// bare `phi` means coefficient one.
impl FromStr for GoldenNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty golden-number literal".into()));
        }

        // Split into signed terms: every interior '+'/'-' starts a new term.
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        for (i, c) in compact.chars().enumerate() {
            if (c == '+' || c == '-') && i > 0 {
                terms.push(std::mem::take(&mut current));
            }
            current.push(c);
        }
        terms.push(current);

        let mut value = GoldenNumber::zero();
        for term in &terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let contribution = if let Some(coeff) = body.strip_suffix("phi") {
                let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
                let b = if coeff.is_empty() {
                    BigRational::one()
                } else {
                    parse_rational(coeff)?
                };
                GoldenNumber::new(BigRational::zero(), b)
            } else {
                GoldenNumber::new(parse_rational(body)?, BigRational::zero())
            };
            let signed = if sign < 0 { -contribution } else { contribution };
            value = value + signed;
        }
        Ok(value)
    }
}
