//! Exact golden-ratio arithmetic and the sequence family it generates.
//!
//! The crate is built around four pieces:
//!
//! - [`golden`]: the field ℚ(√5) on the basis {1, φ}, with exact
//!   rational coefficients, plus an arbitrary-precision Fibonacci engine
//!   ([`fib`]) covering negative indices and φⁿ = Fₙ₋₁ + Fₙ·φ.
//! - [`nfe`]: sequences obeying ωₙ = ωₙ₋₂ − ωₙ₋₁, the coefficient pair
//!   (η, γ) that identifies each one, and the exact closed form
//!   Ω_{η,γ}(n) = η·F₋ₙ + γ·F₋ₙ₊₁·φ. The principal sequence φ^{1−n} is
//!   Ω₁,₁.
//! - [`complex`]: the analytic continuation of the closed form to
//!   complex arguments on principal branches, with grid verification of
//!   the recurrence and of the principal equivalence.
//! - [`spiral`]: the golden spiral as a chain of quarter-turn arcs whose
//!   radii are the principal values φ^{1−n}.
//!
//! ```
//! use nfe_core::{evaluate_exact, solve_coefficients, GoldenNumber};
//!
//! let omega1: GoldenNumber = "1".parse().unwrap();
//! let omega2: GoldenNumber = "-1 + 1*phi".parse().unwrap();
//! let coeffs = solve_coefficients(&omega1, &omega2);
//! assert_eq!(evaluate_exact(&coeffs, 4).unwrap().to_string(), "-3 + 2*phi");
//! ```

pub mod complex;
pub mod error;
pub mod fib;
pub mod golden;
pub mod nfe;
pub mod spiral;

pub use complex::{
    complex_value, evaluate_complex, identity_i, principal_complex, theta, verify_binet,
    verify_principal_equivalence, verify_recurrence, ComplexValue, EvaluationDomain,
    VerificationReport,
};
pub use error::{Error, Result};
pub use fib::{fib, phi_power, BigFib, MAX_FIB_INDEX};
pub use golden::{phi_f64, GoldenNumber};
pub use nfe::{
    evaluate_exact, generate_recurrence, principal_coefficients, principal_exact,
    solve_coefficients, ComplexCoefficients, ExactCoefficients, NfeCoefficients, NfeSequence,
};
pub use spiral::{
    build_spiral, segment_recurrence_check, Point, SegmentCheckReport, SpiralModel, SpiralSegment,
    Sweep,
};
