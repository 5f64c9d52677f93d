//! `eval`: Ω_{η,γ}(n), exact for integer n, complex otherwise.

use anyhow::{anyhow, Result};
use num_complex::Complex64;
use serde_json::json;

use nfe_core::{
    evaluate_complex, evaluate_exact, ComplexCoefficients, GoldenNumber, NfeCoefficients,
};

use crate::format::{complex_str, csv_line, parse_complex, tabular_format, OutputFormat};

fn parse_exact_coefficient(label: &str, literal: &str) -> Result<GoldenNumber> {
    literal.parse::<GoldenNumber>().map_err(|parse_err| {
        if parse_complex(literal).is_ok() {
            anyhow!(
                "integer n selects the exact path, which needs golden-number \
                 coefficients; --{label} `{literal}` is not one"
            )
        } else {
            anyhow!("--{label}: {parse_err}")
        }
    })
}

/// A coefficient on the complex path: a golden-number literal (converted
/// to its decimal value) or a complex literal.
fn parse_numeric_coefficient(label: &str, literal: &str) -> Result<Complex64> {
    if let Ok(golden) = literal.parse::<GoldenNumber>() {
        return Ok(Complex64::new(golden.to_f64(), 0.0));
    }
    parse_complex(literal).map_err(|e| anyhow!("--{label}: {e}"))
}

pub fn run(eta: &str, gamma: &str, n: &str, format: Option<OutputFormat>) -> Result<String> {
    let format = tabular_format(format)?;
    if let Ok(index) = n.trim().parse::<i64>() {
        let coeffs = NfeCoefficients::new(
            parse_exact_coefficient("eta", eta)?,
            parse_exact_coefficient("gamma", gamma)?,
        );
        let value = evaluate_exact(&coeffs, index)?;
        Ok(match format {
            OutputFormat::Text => format!("{value}\n"),
            OutputFormat::Csv => {
                let mut out = csv_line(&["value".into(), "decimal".into()]);
                out.push_str(&csv_line(&[
                    value.to_string(),
                    format!("{:.10}", value.to_f64()),
                ]));
                out
            }
            OutputFormat::Json => {
                let mut out = serde_json::to_string_pretty(&json!({
                    "path": "exact",
                    "value": value.to_string(),
                    "decimal": value.to_f64(),
                }))?;
                out.push('\n');
                out
            }
            OutputFormat::Svg => unreachable!("rejected by tabular_format"),
        })
    } else {
        let argument = parse_complex(n).map_err(|e| anyhow!("--n: {e}"))?;
        let coeffs = ComplexCoefficients::new(
            parse_numeric_coefficient("eta", eta)?,
            parse_numeric_coefficient("gamma", gamma)?,
        );
        let value = evaluate_complex(&coeffs, argument)?;
        Ok(match format {
            OutputFormat::Text => format!("{}\n", complex_str(value)),
            OutputFormat::Csv => {
                let mut out = csv_line(&["re".into(), "im".into()]);
                out.push_str(&csv_line(&[
                    format!("{:.12}", value.re),
                    format!("{:.12}", value.im),
                ]));
                out
            }
            OutputFormat::Json => {
                let mut out = serde_json::to_string_pretty(&json!({
                    "path": "complex",
                    "re": value.re,
                    "im": value.im,
                }))?;
                out.push('\n');
                out
            }
            OutputFormat::Svg => unreachable!("rejected by tabular_format"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_argument_takes_the_exact_path() {
        assert_eq!(run("1", "1", "4", None).unwrap(), "-3 + 2*phi\n");
        assert_eq!(run("0", "0", "9", None).unwrap(), "0\n");
    }

    #[test]
    fn non_integer_argument_takes_the_complex_path() {
        let out = run("1", "1", "0.5+0.5i", None).unwrap();
        // Ω₁,₁(n) = φ^{1−n}; at n = 0.5+0.5i that is φ^{0.5−0.5i}.
        let ln_phi = nfe_core::phi_f64().ln();
        let expected = (Complex64::new(0.5, -0.5) * ln_phi).exp();
        let printed = parse_complex(out.trim()).unwrap();
        assert!((printed - expected).norm() < 1e-10, "{out}");
    }

    #[test]
    fn complex_coefficients_with_integer_argument_are_a_domain_error() {
        let err = run("0.5+2i", "1", "4", None).unwrap_err();
        assert!(err.to_string().contains("exact path"), "{err}");
    }

    #[test]
    fn golden_coefficients_are_accepted_on_the_complex_path() {
        let exact = run("-2 + 2*phi", "1", "3", None).unwrap();
        let numeric = run("-2 + 2*phi", "1", "3.0", None).unwrap();
        assert!(exact.ends_with("*phi\n") || !exact.contains('i'));
        assert!(numeric.contains('i'));
    }
}
