//! Shared output plumbing: format selection, text tables, CSV fields,
//! and complex literals.

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Svg,
}

/// Resolves the format for the tabular commands; svg belongs to spiral.
pub fn tabular_format(requested: Option<OutputFormat>) -> Result<OutputFormat> {
    match requested.unwrap_or(OutputFormat::Text) {
        OutputFormat::Svg => bail!("svg output is only valid for the spiral command"),
        format => Ok(format),
    }
}

/// Resolves the format for the spiral command: csv (default) or svg.
pub fn spiral_format(requested: Option<OutputFormat>) -> Result<OutputFormat> {
    match requested.unwrap_or(OutputFormat::Csv) {
        format @ (OutputFormat::Csv | OutputFormat::Svg) => Ok(format),
        _ => bail!("spiral supports only --format csv or --format svg"),
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Align {
    Left,
    Right,
}

/// Renders an aligned text table with a header row. Column widths adapt
/// to the content; there is no trailing whitespace.
pub fn text_table(headers: &[&str], aligns: &[Align], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            match aligns[i] {
                Align::Right => {
                    for _ in cell.len()..widths[i] {
                        line.push(' ');
                    }
                    line.push_str(cell);
                }
                Align::Left => {
                    line.push_str(cell);
                    if i + 1 < cells.len() {
                        for _ in cell.len()..widths[i] {
                            line.push(' ');
                        }
                    }
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(row);
    }
    out
}

/// One CSV record; fields are quoted only when they need to be.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = String::new();
    for (i, field) in fields.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        if field.contains([',', '"', '\n']) {
            line.push('"');
            line.push_str(&field.replace('"', "\"\""));
            line.push('"');
        } else {
            line.push_str(field);
        }
    }
    line.push('\n');
    line
}

/// Decimal rendering of a complex value, `re + imi` with twelve places.
pub fn complex_str(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im < 0.0 {
        format!("{:.12} - {:.12}i", z.re, -im)
    } else {
        format!("{:.12} + {:.12}i", z.re, im)
    }
}

/// Parses a complex literal `a+bi` with decimal components. Whitespace
/// is ignored, either term may be omitted or reordered, and a bare `i`
/// has coefficient one.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty complex literal");
    }

    // Split into signed terms; '+'/'-' inside an exponent does not split.
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    let mut prev = '\0';
    for (i, c) in compact.chars().enumerate() {
        if (c == '+' || c == '-') && i > 0 && prev != 'e' && prev != 'E' {
            terms.push(std::mem::take(&mut current));
        }
        current.push(c);
        prev = c;
    }
    terms.push(current);

    let bad = || anyhow!("invalid complex literal `{s}`");
    let mut re = 0.0;
    let mut im = 0.0;
    for term in &terms {
        if let Some(coeff) = term.strip_suffix('i') {
            im += match coeff {
                "" | "+" => 1.0,
                "-" => -1.0,
                other => other.parse::<f64>().map_err(|_| bad())?,
            };
        } else {
            re += term.parse::<f64>().map_err(|_| bad())?;
        }
    }
    if !re.is_finite() || !im.is_finite() {
        bail!("complex literal `{s}` is out of range");
    }
    Ok(Complex64::new(re, im))
}

/// Parses a `lo:hi` pair of reals, for the verify grid flags.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let err = || format!("expected `lo:hi`, got `{s}`");
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    let lo: f64 = lo.trim().parse().map_err(|_| err())?;
    let hi: f64 = hi.trim().parse().map_err(|_| err())?;
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals_parse() {
        assert_eq!(parse_complex("0.5+0.5i").unwrap(), Complex64::new(0.5, 0.5));
        assert_eq!(parse_complex("-1.5 - 2.5i").unwrap(), Complex64::new(-1.5, -2.5));
        assert_eq!(parse_complex("3").unwrap(), Complex64::new(3.0, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e2i").unwrap(), Complex64::new(1e-3, 2e2));
        assert_eq!(parse_complex("2i-1").unwrap(), Complex64::new(-1.0, 2.0));
    }

    #[test]
    fn complex_literals_reject_garbage() {
        for bad in ["", "abc", "1+", "i2", "1++2i", "1including"] {
            assert!(parse_complex(bad).is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn complex_rendering_folds_the_sign() {
        assert_eq!(complex_str(Complex64::new(1.0, -2.0)), "1.000000000000 - 2.000000000000i");
        assert_eq!(complex_str(Complex64::new(0.5, 0.0)), "0.500000000000 + 0.000000000000i");
        assert_eq!(complex_str(Complex64::new(0.0, -0.0)), "0.000000000000 + 0.000000000000i");
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("-8:8").unwrap(), (-8.0, 8.0));
        assert_eq!(parse_range("0.5 : 1.5").unwrap(), (0.5, 1.5));
        assert!(parse_range("8").is_err());
    }

    #[test]
    fn text_tables_align_without_trailing_space() {
        let table = text_table(
            &["n", "value"],
            &[Align::Right, Align::Left],
            &[
                vec!["-8".into(), "21 + 34*phi".into()],
                vec!["1".into(), "1".into()],
            ],
        );
        assert_eq!(table, " n  value\n-8  21 + 34*phi\n 1  1\n");
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        assert_eq!(csv_line(&["a".into(), "b c".into()]), "a,b c\n");
        assert_eq!(csv_line(&["a,b".into()]), "\"a,b\"\n");
    }
}
