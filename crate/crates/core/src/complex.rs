//! Analytic continuation of the sequences to complex arguments.
//!
//! The continuous Binet form Θ(n) = (φⁿ − (−φ)⁻ⁿ)/√5 extends Fₙ to all
//! of ℂ, with (−1)ⁿ read as exp(iπn) and φⁿ as exp(n·ln φ). Both choices
//! are principal branches; the closed form
//! Ω_{η,γ}(n) = η·I(n−1)·Θ(n) + γ·I(n)·Θ(n−1)·φ only collapses to
//! φ^{1−n} at η = γ = 1 because the two branch choices are paired this
//! way.
//!
//! The recurrence Ω(n) = Ω(n−2) − Ω(n−1) holds identically; the grid
//! checks here witness it numerically. exp(π·|im n|) amplifies absolute
//! error, so residuals are measured relative to the largest operand and
//! verified domains cap |im n|.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::golden::phi_f64;
use crate::nfe::ComplexCoefficients;

/// A complex argument or value; double precision, finite components.
pub type ComplexValue = Complex64;

/// Checked constructor for [`ComplexValue`]: rejects NaN and infinities.
pub fn complex_value(re: f64, im: f64) -> Result<ComplexValue> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::InvalidDomain(format!(
            "complex components must be finite, got ({re}, {im})"
        )))
    }
}

fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(format!("{what} is not representable")))
    }
}

/// (−1)ⁿ on ℂ: exp(iπn) = exp(−π·im n)·(cos(π·re n) + i·sin(π·re n)).
pub fn identity_i(n: ComplexValue) -> Result<ComplexValue> {
    let magnitude = (-std::f64::consts::PI * n.im).exp();
    let value = Complex64::new(
        magnitude * (std::f64::consts::PI * n.re).cos(),
        magnitude * (std::f64::consts::PI * n.re).sin(),
    );
    ensure_finite(value, "exp(i*pi*n)")
}

/// φⁿ on the principal branch, exp(n·ln φ).
fn phi_pow(n: ComplexValue) -> Complex64 {
    (n * phi_f64().ln()).exp()
}

/// Continuous Binet form Θ(n) = (φⁿ − (−φ)⁻ⁿ)/√5, which interpolates the
/// Fibonacci numbers: Θ(k) = F_k at every integer k.
pub fn theta(n: ComplexValue) -> Result<ComplexValue> {
    let reflected = identity_i(-n)? * phi_pow(-n);
    let value = (phi_pow(n) - reflected) / 5.0_f64.sqrt();
    ensure_finite(value, "theta(n)")
}

/// Closed form at a complex argument:
/// Ω_{η,γ}(n) = η·I(n−1)·Θ(n) + γ·I(n)·Θ(n−1)·φ.
pub fn evaluate_complex(coeffs: &ComplexCoefficients, n: ComplexValue) -> Result<ComplexValue> {
    let one = Complex64::new(1.0, 0.0);
    let eta_term = coeffs.eta * identity_i(n - one)? * theta(n)?;
    let gamma_term = coeffs.gamma * identity_i(n)? * theta(n - one)? * phi_f64();
    ensure_finite(eta_term + gamma_term, "omega(n)")
}

/// The principal sequence Φ(n) = φ^{1−n} on the principal branch.
pub fn principal_complex(n: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(phi_pow(Complex64::new(1.0, 0.0) - n), "phi^(1-n)")
}

/// A rectangular verification grid in the complex plane.
///
/// The imaginary extent is capped at |im| ≤ 6: exp(π·6) ≈ 1.5·10⁸ is the
/// largest magnitude factor at which double-precision residuals remain
/// meaningful witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationDomain {
    re_range: (f64, f64),
    im_range: (f64, f64),
    counts: (usize, usize),
}

impl EvaluationDomain {
    pub const IM_BOUND: f64 = 6.0;

    pub fn new(re_range: (f64, f64), im_range: (f64, f64), counts: (usize, usize)) -> Result<Self> {
        for (lo, hi, axis) in [
            (re_range.0, re_range.1, "re"),
            (im_range.0, im_range.1, "im"),
        ] {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidDomain(format!("{axis} range must be finite")));
            }
            if lo > hi {
                return Err(Error::InvalidDomain(format!(
                    "{axis} range is empty ({lo} > {hi})"
                )));
            }
        }
        if im_range.0.abs() > Self::IM_BOUND || im_range.1.abs() > Self::IM_BOUND {
            return Err(Error::InvalidDomain(format!(
                "|im| must stay within {}",
                Self::IM_BOUND
            )));
        }
        if counts.0 == 0 || counts.1 == 0 {
            return Err(Error::InvalidDomain("grid counts must be positive".into()));
        }
        Ok(EvaluationDomain {
            re_range,
            im_range,
            counts,
        })
    }

    /// A grid stepping both axes by `step`, endpoints included.
    pub fn with_step(re_range: (f64, f64), im_range: (f64, f64), step: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(Error::InvalidDomain("step must be positive".into()));
        }
        let count = |lo: f64, hi: f64| ((hi - lo) / step + 1e-9).floor() as usize + 1;
        Self::new(
            re_range,
            im_range,
            (
                count(re_range.0, re_range.1),
                count(im_range.0, im_range.1),
            ),
        )
    }

    /// The default grid: re ∈ [−8, 8], im ∈ [−2, 2], step 0.5.
    pub fn standard() -> Self {
        Self::with_step((-8.0, 8.0), (-2.0, 2.0), 0.5).expect("standard grid is valid")
    }

    pub fn len(&self) -> usize {
        self.counts.0 * self.counts.1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in row-major order (imaginary axis outermost).
    pub fn points(&self) -> impl Iterator<Item = ComplexValue> + '_ {
        let coord = |lo: f64, hi: f64, count: usize, k: usize| {
            if count == 1 {
                lo
            } else {
                lo + (hi - lo) * k as f64 / (count - 1) as f64
            }
        };
        (0..self.counts.1).flat_map(move |j| {
            (0..self.counts.0).map(move |i| {
                Complex64::new(
                    coord(self.re_range.0, self.re_range.1, self.counts.0, i),
                    coord(self.im_range.0, self.im_range.1, self.counts.1, j),
                )
            })
        })
    }
}

/// One grid point whose residual exceeded the tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualFailure {
    pub point: ComplexValue,
    pub residual: f64,
}

/// Outcome of a grid verification run. Failures are content, not faults:
/// a run that finds violations still returns normally.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub tolerance: f64,
    pub points: usize,
    pub max_residual: f64,
    pub worst_point: ComplexValue,
    pub failures: Vec<ResidualFailure>,
}

impl VerificationReport {
    fn new(suite: &str, tolerance: f64) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            tolerance,
            points: 0,
            max_residual: 0.0,
            worst_point: Complex64::new(0.0, 0.0),
            failures: Vec::new(),
        }
    }

    fn record(&mut self, point: ComplexValue, residual: f64) {
        self.points += 1;
        if residual > self.max_residual || !residual.is_finite() {
            self.max_residual = residual;
            self.worst_point = point;
        }
        if residual > self.tolerance || residual.is_nan() {
            self.failures.push(ResidualFailure { point, residual });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another run of the same suite into this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.points += other.points;
        if other.max_residual > self.max_residual {
            self.max_residual = other.max_residual;
            self.worst_point = other.worst_point;
        }
        self.failures.extend(other.failures);
    }
}

fn relative_residual(delta: Complex64, scale: f64) -> f64 {
    delta.norm() / scale.max(1.0)
}

/// Checks Ω(n) = Ω(n−2) − Ω(n−1) across the grid. The residual at each
/// point is |Ω(n) − (Ω(n−2) − Ω(n−1))| relative to
/// max(1, |Ω(n−2)|, |Ω(n−1)|).
pub fn verify_recurrence(
    coeffs: &ComplexCoefficients,
    domain: &EvaluationDomain,
    tol: f64,
) -> VerificationReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut report = VerificationReport::new("recurrence", tol);
    let one = Complex64::new(1.0, 0.0);
    for n in domain.points() {
        let values = (
            evaluate_complex(coeffs, n),
            evaluate_complex(coeffs, n - one),
            evaluate_complex(coeffs, n - one - one),
        );
        let residual = match values {
            (Ok(at_n), Ok(prev), Ok(before)) => {
                relative_residual(at_n - (before - prev), prev.norm().max(before.norm()))
            }
            _ => f64::INFINITY,
        };
        report.record(n, residual);
    }
    report
}

/// Checks Ω₁,₁(n) = φ^{1−n} across the grid, relative to max(1, |φ^{1−n}|).
pub fn verify_principal_equivalence(domain: &EvaluationDomain, tol: f64) -> VerificationReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let unit = ComplexCoefficients::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
    let mut report = VerificationReport::new("principal", tol);
    for n in domain.points() {
        let residual = match (evaluate_complex(&unit, n), principal_complex(n)) {
            (Ok(omega), Ok(principal)) => {
                relative_residual(omega - principal, principal.norm())
            }
            _ => f64::INFINITY,
        };
        report.record(n, residual);
    }
    report
}

/// Checks Θ(n) against the exact engine over an integer range, relative
/// to max(1, |Fₙ|).
pub fn verify_binet(lo: i64, hi: i64, tol: f64) -> Result<VerificationReport> {
    assert!(tol > 0.0, "tolerance must be positive");
    let mut report = VerificationReport::new("binet", tol);
    for n in lo..=hi {
        let exact = fib(n)?;
        let exact_f = num_traits::ToPrimitive::to_f64(&exact).unwrap_or(f64::INFINITY);
        let point = Complex64::new(n as f64, 0.0);
        let residual = match theta(point) {
            Ok(binet) => relative_residual(binet - exact_f, exact_f.abs()),
            Err(_) => f64::INFINITY,
        };
        report.record(point, residual);
    }
    Ok(report)
}
