//! `solve`: coefficients (η, γ) for given initial values, with a
//! recurrence/closed-form cross-check over the first ten terms.

use anyhow::{anyhow, Result};
use serde_json::json;

use nfe_core::{evaluate_exact, generate_recurrence, GoldenNumber, NfeSequence};

use crate::format::{csv_line, tabular_format, text_table, Align, OutputFormat};

const CROSS_CHECK_TERMS: usize = 10;

pub fn run(omega1: &str, omega2: &str, format: Option<OutputFormat>) -> Result<(String, bool)> {
    let format = tabular_format(format)?;
    let omega1: GoldenNumber = omega1.parse().map_err(|e| anyhow!("--omega1: {e}"))?;
    let omega2: GoldenNumber = omega2.parse().map_err(|e| anyhow!("--omega2: {e}"))?;
    let seq = NfeSequence::new(omega1, omega2);
    let coeffs = seq.coefficients();

    let recurrence = generate_recurrence(&seq, CROSS_CHECK_TERMS);
    let closed: Vec<GoldenNumber> = (1..=CROSS_CHECK_TERMS as i64)
        .map(|n| evaluate_exact(coeffs, n))
        .collect::<nfe_core::Result<_>>()?;
    let consistent = recurrence == closed;

    let eta = coeffs.eta.to_string();
    let gamma = coeffs.gamma.to_string();
    let output = match format {
        OutputFormat::Text => {
            let mut out = format!("eta   = {eta}\ngamma = {gamma}\n\n");
            let rows: Vec<Vec<String>> = recurrence
                .iter()
                .zip(&closed)
                .enumerate()
                .map(|(k, (by_recurrence, by_closed_form))| {
                    vec![
                        (k + 1).to_string(),
                        by_recurrence.to_string(),
                        by_closed_form.to_string(),
                    ]
                })
                .collect();
            out.push_str(&text_table(
                &["n", "recurrence", "closed_form"],
                &[Align::Right, Align::Left, Align::Left],
                &rows,
            ));
            out.push_str(if consistent {
                "cross-check: ok\n"
            } else {
                "cross-check: FAILED\n"
            });
            out
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&["eta".into(), "gamma".into()]);
            out.push_str(&csv_line(&[eta, gamma]));
            out.push('\n');
            out.push_str(&csv_line(&[
                "n".into(),
                "recurrence".into(),
                "closed_form".into(),
            ]));
            for (k, (r, c)) in recurrence.iter().zip(&closed).enumerate() {
                out.push_str(&csv_line(&[
                    (k + 1).to_string(),
                    r.to_string(),
                    c.to_string(),
                ]));
            }
            out
        }
        OutputFormat::Json => {
            let terms: Vec<_> = recurrence
                .iter()
                .zip(&closed)
                .enumerate()
                .map(|(k, (r, c))| {
                    json!({
                        "n": k + 1,
                        "recurrence": r.to_string(),
                        "closed_form": c.to_string(),
                    })
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&json!({
                "eta": eta,
                "gamma": gamma,
                "terms": terms,
                "consistent": consistent,
            }))?;
            out.push('\n');
            out
        }
        OutputFormat::Svg => unreachable!("rejected by tabular_format"),
    };
    Ok((output, consistent))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_initial_values_solve_to_ones() {
        let (out, consistent) = run("1", "-1 + 1*phi", None).unwrap();
        assert!(out.starts_with("eta   = 1\ngamma = 1\n"));
        assert!(out.ends_with("cross-check: ok\n"));
        assert!(consistent);
    }

    #[test]
    fn zero_initial_values_solve_to_zeros() {
        let (out, _) = run("0", "0", None).unwrap();
        assert!(out.starts_with("eta   = 0\ngamma = 0\n"));
    }

    #[test]
    fn unit_initial_values_give_the_scaled_gamma() {
        let (out, _) = run("1", "1", None).unwrap();
        assert!(out.contains("gamma = -2 + 2*phi"));
        // Terms 1,1,0,1,-1,2,… from ωₙ = ωₙ₋₂ − ωₙ₋₁.
        assert!(out.contains("\n 3  0"));
        assert!(out.contains("\n 5  -1"));
    }

    #[test]
    fn bad_literals_are_rejected() {
        assert!(run("one", "0", None).is_err());
    }
}
