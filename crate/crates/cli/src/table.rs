//! `table`: powers of φ in negaFibonacci form over a range of positions.

use anyhow::{bail, Result};
use serde_json::json;

use nfe_core::{phi_f64, principal_exact};

use crate::format::{csv_line, tabular_format, text_table, Align, OutputFormat};

struct Row {
    n: i64,
    exponent: i64,
    value: String,
    decimal: f64,
}

fn rows(min: i64, max: i64) -> Result<Vec<Row>> {
    let ln_phi = phi_f64().ln();
    let mut rows = Vec::new();
    for n in min..=max {
        let exponent = 1 - n;
        let value = principal_exact(n)?;
        rows.push(Row {
            n,
            exponent,
            value: value.to_string(),
            decimal: (exponent as f64 * ln_phi).exp(),
        });
    }
    Ok(rows)
}

pub fn run(min: i64, max: i64, format: Option<OutputFormat>) -> Result<String> {
    let format = tabular_format(format)?;
    if min > max {
        bail!("empty range: --min ({min}) must not exceed --max ({max})");
    }
    let rows = rows(min, max)?;
    Ok(match format {
        OutputFormat::Text => text_table(
            &["n", "exponent", "value", "decimal"],
            &[Align::Right, Align::Right, Align::Left, Align::Right],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.exponent.to_string(),
                        r.value.clone(),
                        format!("{:.10}", r.decimal),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Csv => {
            let mut out = csv_line(&["n".into(), "exponent".into(), "value".into(), "decimal".into()]);
            for r in &rows {
                out.push_str(&csv_line(&[
                    r.n.to_string(),
                    r.exponent.to_string(),
                    r.value.clone(),
                    format!("{:.10}", r.decimal),
                ]));
            }
            out
        }
        OutputFormat::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "exponent": r.exponent,
                        "value": r.value,
                        "decimal": r.decimal,
                    })
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&entries)?;
            out.push('\n');
            out
        }
        OutputFormat::Svg => unreachable!("rejected by tabular_format"),
    })
}
