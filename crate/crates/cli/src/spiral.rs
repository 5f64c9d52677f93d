//! `spiral`: golden-spiral geometry as CSV points or an SVG drawing.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};

use nfe_core::{build_spiral, SpiralModel};

use crate::format::{csv_line, spiral_format, OutputFormat};

/// Pixel size of the larger SVG dimension.
const SVG_TARGET_PX: f64 = 640.0;

fn render_csv(model: &SpiralModel) -> String {
    let mut out = csv_line(&[
        "segment_index".into(),
        "t".into(),
        "x".into(),
        "y".into(),
    ]);
    for (index, t, point) in model.polyline() {
        out.push_str(&csv_line(&[
            index.to_string(),
            format!("{t:.6}"),
            format!("{:.12}", point.x),
            format!("{:.12}", point.y),
        ]));
    }
    out.push('\n');
    out.push_str(&csv_line(&[
        "index".into(),
        "exact_length".into(),
        "decimal_length".into(),
    ]));
    for segment in &model.segments {
        out.push_str(&csv_line(&[
            segment.index.to_string(),
            segment.length_exact.to_string(),
            format!("{:.10}", segment.radius),
        ]));
    }
    out
}

fn render_svg(model: &SpiralModel) -> String {
    // SVG's y axis points down; emit mirrored coordinates.
    let flipped: Vec<Vec<(f64, f64)>> = model
        .segments
        .iter()
        .map(|segment| {
            let last = (model.points_per_arc - 1).max(1) as f64;
            (0..model.points_per_arc)
                .map(|i| {
                    let p = segment.point_at(i as f64 / last);
                    (p.x, -p.y)
                })
                .collect()
        })
        .collect();

    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (x, y) in flipped.iter().flatten() {
        min = (min.0.min(*x), min.1.min(*y));
        max = (max.0.max(*x), max.1.max(*y));
    }
    let width = (max.0 - min.0).max(1e-9);
    let height = (max.1 - min.1).max(1e-9);
    let view = (
        min.0 - 0.05 * width,
        min.1 - 0.05 * height,
        1.1 * width,
        1.1 * height,
    );
    let scale = SVG_TARGET_PX / view.2.max(view.3);
    let stroke = 0.004 * view.2.max(view.3);

    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" \
         viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        (view.2 * scale).round(),
        (view.3 * scale).round(),
        view.0,
        view.1,
        view.2,
        view.3,
    );
    for points in &flipped {
        let mut path = String::new();
        for (i, (x, y)) in points.iter().enumerate() {
            let command = if i == 0 { 'M' } else { 'L' };
            let _ = write!(path, "{}{:.12} {:.12}", command, x, y);
            if i + 1 < points.len() {
                path.push(' ');
            }
        }
        let _ = writeln!(
            out,
            "  <path d=\"{path}\" fill=\"none\" stroke=\"#000\" stroke-width=\"{stroke:.6}\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn run(
    segments: u32,
    points_per_arc: usize,
    format: Option<OutputFormat>,
    out_path: Option<&Path>,
) -> Result<Option<String>> {
    let format = spiral_format(format)?;
    let model = build_spiral(segments, points_per_arc)?;
    let content = match format {
        OutputFormat::Csv => render_csv(&model),
        OutputFormat::Svg => render_svg(&model),
        _ => unreachable!("rejected by spiral_format"),
    };
    match out_path {
        Some(path) => {
            std::fs::write(path, content)
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(None)
        }
        None => Ok(Some(content)),
    }
}
