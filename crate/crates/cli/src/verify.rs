//! `verify`: grid verification suites with one report row per suite.

use anyhow::{bail, Result};
use clap::ValueEnum;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use nfe_core::{
    verify_binet, verify_principal_equivalence, verify_recurrence, ComplexCoefficients,
    EvaluationDomain, VerificationReport,
};

use crate::format::{csv_line, tabular_format, text_table, Align, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recurrence,
    Principal,
    Binet,
    All,
}

/// Number of random coefficient pairs the recurrence suite samples.
const RANDOM_COEFFICIENT_PAIRS: usize = 100;
/// Fixed seed so repeated runs check the same coefficients.
const COEFFICIENT_SEED: u64 = 0x676f6c64;

pub struct GridArgs {
    pub re_range: Option<(f64, f64)>,
    pub im_range: Option<(f64, f64)>,
    pub step: f64,
    pub tol: f64,
}

fn random_coefficients(rng: &mut StdRng) -> ComplexCoefficients {
    let component = |rng: &mut StdRng| {
        Complex64::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0))
    };
    ComplexCoefficients::new(component(rng), component(rng))
}

fn recurrence_suite(domain: &EvaluationDomain, tol: f64) -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(COEFFICIENT_SEED);
    let mut total: Option<VerificationReport> = None;
    for _ in 0..RANDOM_COEFFICIENT_PAIRS {
        let report = verify_recurrence(&random_coefficients(&mut rng), domain, tol);
        match total.as_mut() {
            Some(t) => t.merge(report),
            None => total = Some(report),
        }
    }
    total.expect("at least one pair is sampled")
}

pub fn run(suite: Suite, grid: GridArgs, format: Option<OutputFormat>) -> Result<(String, bool)> {
    let format = tabular_format(format)?;
    if !grid.tol.is_finite() || grid.tol <= 0.0 {
        bail!("--tol must be positive");
    }

    let mut reports = Vec::new();
    if matches!(suite, Suite::Recurrence | Suite::Principal | Suite::All) {
        let domain = EvaluationDomain::with_step(
            grid.re_range.unwrap_or((-8.0, 8.0)),
            grid.im_range.unwrap_or((-2.0, 2.0)),
            grid.step,
        )?;
        if matches!(suite, Suite::Recurrence | Suite::All) {
            reports.push(recurrence_suite(&domain, grid.tol));
        }
        if matches!(suite, Suite::Principal | Suite::All) {
            reports.push(verify_principal_equivalence(&domain, grid.tol));
        }
    }
    if matches!(suite, Suite::Binet | Suite::All) {
        let (lo, hi) = grid.re_range.unwrap_or((-70.0, 70.0));
        reports.push(verify_binet(lo.ceil() as i64, hi.floor() as i64, grid.tol)?);
    }

    let all_passed = reports.iter().all(VerificationReport::passed);
    let cells = |r: &VerificationReport| {
        vec![
            r.suite.clone(),
            r.points.to_string(),
            format!("{:.3e}", r.max_residual),
            format!("{:e}", r.tolerance),
            r.failures.len().to_string(),
            if r.passed() { "pass" } else { "fail" }.to_string(),
        ]
    };
    let output = match format {
        OutputFormat::Text => text_table(
            &["suite", "points", "max_residual", "tolerance", "failures", "status"],
            &[
                Align::Left,
                Align::Right,
                Align::Right,
                Align::Right,
                Align::Right,
                Align::Left,
            ],
            &reports.iter().map(cells).collect::<Vec<_>>(),
        ),
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "suite".into(),
                "points".into(),
                "max_residual".into(),
                "tolerance".into(),
                "failures".into(),
                "status".into(),
            ]);
            for report in &reports {
                out.push_str(&csv_line(&cells(report)));
            }
            out
        }
        OutputFormat::Json => {
            let entries: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "points": r.points,
                        "max_residual": r.max_residual,
                        "tolerance": r.tolerance,
                        "failures": r.failures.len(),
                        "status": if r.passed() { "pass" } else { "fail" },
                    })
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&entries)?;
            out.push('\n');
            out
        }
        OutputFormat::Svg => unreachable!("rejected by tabular_format"),
    };
    Ok((output, all_passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_grid(tol: f64) -> GridArgs {
        GridArgs {
            re_range: None,
            im_range: None,
            step: 0.5,
            tol,
        }
    }

    #[test]
    fn all_suites_pass_at_the_default_tolerance() {
        let (out, passed) = run(Suite::All, default_grid(1e-9), None).unwrap();
        assert!(passed, "{out}");
        assert_eq!(out.matches("pass").count(), 3);
    }

    #[test]
    fn unreachable_tolerance_fails() {
        let (out, passed) = run(Suite::Recurrence, default_grid(1e-30), None).unwrap();
        assert!(!passed);
        assert!(out.contains("fail"));
    }

    #[test]
    fn binet_suite_covers_the_integer_band() {
        let (out, passed) = run(Suite::Binet, default_grid(1e-9), None).unwrap();
        assert!(passed, "{out}");
        assert!(out.contains("141"));
    }

    #[test]
    fn nonpositive_tolerance_is_rejected() {
        assert!(run(Suite::All, default_grid(0.0), None).is_err());
    }
}
