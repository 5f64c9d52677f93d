//! Golden-spiral segment geometry.
//!
//! Segment n is the quarter-turn arc of radius φ^{1−n}; consecutive
//! radii shrink by exactly 1/φ, which is the spiral's inward growth
//! factor. Placement follows the nested-golden-rectangle subdivision:
//! the first square has unit side with a corner at the origin, and the
//! chain winds counterclockwise. The source defines only the segment
//! lengths, so this pose is a convention; it is fixed here so output is
//! deterministic.

use crate::error::{Error, Result};
use crate::golden::{phi_f64, GoldenNumber};
use crate::nfe::principal_exact;

/// Hard caps on construction size. The radius φ^{1−n} underflows double
/// precision near n = 1475; the segment cap stays safely below that.
pub const MAX_SEGMENTS: u32 = 1000;
pub const MAX_POINTS_PER_ARC: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Orientation of a quarter-turn sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    CounterClockwise,
    Clockwise,
}

/// One quarter-turn arc of the spiral.
#[derive(Debug, Clone, PartialEq)]
pub struct SpiralSegment {
    /// 1-based segment number n.
    pub index: u32,
    /// Exact characteristic length φ^{1−n}.
    pub length_exact: GoldenNumber,
    /// Arc radius in double precision.
    pub radius: f64,
    pub start: Point,
    pub center: Point,
    /// Angle of the start point around the center, radians.
    pub start_angle: f64,
    pub sweep: Sweep,
}

impl SpiralSegment {
    /// Point at parameter t ∈ [0, 1] along the quarter turn.
    pub fn point_at(&self, t: f64) -> Point {
        let quarter = std::f64::consts::FRAC_PI_2;
        let angle = match self.sweep {
            Sweep::CounterClockwise => self.start_angle + t * quarter,
            Sweep::Clockwise => self.start_angle - t * quarter,
        };
        Point::new(
            self.center.x + self.radius * angle.cos(),
            self.center.y + self.radius * angle.sin(),
        )
    }

    pub fn end(&self) -> Point {
        self.point_at(1.0)
    }

    /// Arc length of the quarter turn, (π/2)·radius.
    pub fn arc_length(&self) -> f64 {
        std::f64::consts::FRAC_PI_2 * self.radius
    }
}

/// The assembled arc chain plus its polyline resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct SpiralModel {
    pub segments: Vec<SpiralSegment>,
    pub points_per_arc: usize,
}

impl SpiralModel {
    /// Sampled points of every arc as (segment index, parameter, point).
    pub fn polyline(&self) -> impl Iterator<Item = (u32, f64, Point)> + '_ {
        let last = (self.points_per_arc - 1).max(1) as f64;
        self.segments.iter().flat_map(move |segment| {
            (0..self.points_per_arc).map(move |i| {
                let t = i as f64 / last;
                (segment.index, t, segment.point_at(t))
            })
        })
    }

    pub fn radii_sum(&self) -> f64 {
        self.segments.iter().map(|s| s.radius).sum()
    }

    pub fn total_arc_length(&self) -> f64 {
        self.segments.iter().map(|s| s.arc_length()).sum()
    }

    /// The largest distance between consecutive arc endpoints.
    pub fn max_endpoint_gap(&self) -> f64 {
        self.segments
            .windows(2)
            .map(|pair| pair[0].end().distance(&pair[1].start))
            .fold(0.0, f64::max)
    }
}

// Unit vectors at quarter-turn multiples, exact.
const QUARTER_DIRS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];

fn dir(j: u32) -> Point {
    let (x, y) = QUARTER_DIRS[(j % 4) as usize];
    Point::new(x, y)
}

/// Builds the counterclockwise golden-spiral chain.
///
/// Segment k sweeps the quarter turn starting at angle (1 + (k−1) mod 4)·π/2
/// around center C_k, with C₁ = (1, 0) — the corner of the unit square
/// [0,1]² — and C_{k+1} = C_k + (r_k − r_{k+1})·e^{i·(end angle of k)}.
/// The whole chain stays inside the golden rectangle [0,1] × [1−φ, 1].
pub fn build_spiral(segment_count: u32, points_per_arc: usize) -> Result<SpiralModel> {
    if !(1..=MAX_SEGMENTS).contains(&segment_count) {
        return Err(Error::Resolution(format!(
            "segment count must be in 1..={MAX_SEGMENTS}, got {segment_count}"
        )));
    }
    if !(2..=MAX_POINTS_PER_ARC).contains(&points_per_arc) {
        return Err(Error::Resolution(format!(
            "points per arc must be in 2..={MAX_POINTS_PER_ARC}, got {points_per_arc}"
        )));
    }

    let phi = phi_f64();
    let quarter = std::f64::consts::FRAC_PI_2;
    let mut segments = Vec::with_capacity(segment_count as usize);
    let mut center = Point::new(1.0, 0.0);
    for k in 1..=segment_count {
        let radius = phi.powi(1 - k as i32);
        let start_dir = dir(k);
        let start = Point::new(
            center.x + radius * start_dir.x,
            center.y + radius * start_dir.y,
        );
        segments.push(SpiralSegment {
            index: k,
            length_exact: principal_exact(k as i64)?,
            radius,
            start,
            center,
            start_angle: (1 + (k - 1) % 4) as f64 * quarter,
            sweep: Sweep::CounterClockwise,
        });
        let next_radius = phi.powi(-(k as i32));
        let step = dir(k + 1);
        center = Point::new(
            center.x + (radius - next_radius) * step.x,
            center.y + (radius - next_radius) * step.y,
        );
    }
    Ok(SpiralModel {
        segments,
        points_per_arc,
    })
}

/// Outcome of checking a model against the length laws.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentCheckReport {
    pub segments: usize,
    /// Indices n > 2 where lengthₙ ≠ lengthₙ₋₂ − lengthₙ₋₁.
    pub recurrence_violations: Vec<u32>,
    /// Indices whose exact length is not φ^{1−n}.
    pub shape_violations: Vec<u32>,
}

impl SegmentCheckReport {
    pub fn passed(&self) -> bool {
        self.recurrence_violations.is_empty() && self.shape_violations.is_empty()
    }
}

/// Verifies, exactly, that each segment length past the second equals the
/// length two back minus the previous one, and that every declared length
/// is the principal value φ^{1−n} for its index. Degenerate input (for
/// example all-zero lengths) passes the recurrence trivially but is
/// flagged as a shape violation.
pub fn segment_recurrence_check(model: &SpiralModel) -> SegmentCheckReport {
    let mut report = SegmentCheckReport {
        segments: model.segments.len(),
        recurrence_violations: Vec::new(),
        shape_violations: Vec::new(),
    };
    for window in model.segments.windows(3) {
        let expected = &window[0].length_exact - &window[1].length_exact;
        if window[2].length_exact != expected {
            report.recurrence_violations.push(window[2].index);
        }
    }
    for segment in &model.segments {
        let conforming = principal_exact(segment.index as i64)
            .map(|principal| principal == segment.length_exact)
            .unwrap_or(false);
        if !conforming {
            report.shape_violations.push(segment.index);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_segment_has_unit_radius() {
        let model = build_spiral(1, 8).unwrap();
        assert_eq!(model.segments.len(), 1);
        let first = &model.segments[0];
        assert_eq!(first.radius, 1.0);
        assert_eq!(first.length_exact, GoldenNumber::one());
        assert_eq!(first.start, Point::new(1.0, 1.0));
        assert_eq!(first.center, Point::new(1.0, 0.0));
    }

    #[test]
    fn first_three_radii_follow_the_table() {
        let model = build_spiral(3, 8).unwrap();
        let radii: Vec<f64> = model.segments.iter().map(|s| s.radius).collect();
        let expected = [1.0, 0.6180339887498949, 0.3819660112501051];
        for (got, want) in radii.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn radii_sum_approaches_phi_plus_one() {
        let model = build_spiral(20, 8).unwrap();
        let phi = phi_f64();
        // Closed-form partial sum of the geometric series: φ²(1 − φ^{−n}).
        let partial = phi * phi * (1.0 - phi.powi(-20));
        assert!((model.radii_sum() - partial).abs() < 1e-12);
        assert!((model.radii_sum() - (phi + 1.0)).abs() < 1e-3);
    }

    #[test]
    fn consecutive_lengths_shrink_by_exactly_phi() {
        let model = build_spiral(17, 4).unwrap();
        for pair in model.segments.windows(2) {
            assert_eq!(
                &pair[1].length_exact * &GoldenNumber::phi(),
                pair[0].length_exact
            );
        }
    }

    #[test]
    fn arc_chain_is_continuous() {
        let model = build_spiral(40, 16).unwrap();
        assert!(model.max_endpoint_gap() <= 1e-9, "gap {}", model.max_endpoint_gap());
    }

    #[test]
    fn arc_length_obeys_the_geometric_tail_bound() {
        let model = build_spiral(20, 4).unwrap();
        let phi = phi_f64();
        let limit = std::f64::consts::FRAC_PI_2 * phi * phi;
        let tail_bound = std::f64::consts::FRAC_PI_2 * phi.powi(1 - 20) * phi * phi;
        assert!((model.total_arc_length() - limit).abs() <= tail_bound);
    }

    #[test]
    fn recurrence_check_passes_for_built_models() {
        let model = build_spiral(17, 4).unwrap();
        let report = segment_recurrence_check(&model);
        assert!(report.passed());
        assert_eq!(report.segments, 17);
    }

    #[test]
    fn degenerate_segments_are_flagged_as_shape_violations() {
        let zero = SpiralSegment {
            index: 1,
            length_exact: GoldenNumber::zero(),
            radius: 0.0,
            start: Point::new(0.0, 0.0),
            center: Point::new(0.0, 0.0),
            start_angle: 0.0,
            sweep: Sweep::CounterClockwise,
        };
        let mut segments = vec![zero.clone(), zero.clone(), zero];
        segments[1].index = 2;
        segments[2].index = 3;
        let model = SpiralModel {
            segments,
            points_per_arc: 4,
        };
        let report = segment_recurrence_check(&model);
        // 0 = 0 − 0, so the recurrence itself holds; the shape does not.
        assert!(report.recurrence_violations.is_empty());
        assert_eq!(report.shape_violations, vec![1, 2, 3]);
        assert!(!report.passed());
    }

    #[test]
    fn resolution_caps_are_enforced() {
        assert!(matches!(build_spiral(0, 8), Err(Error::Resolution(_))));
        assert!(matches!(build_spiral(5, 1), Err(Error::Resolution(_))));
        assert!(matches!(
            build_spiral(MAX_SEGMENTS + 1, 8),
            Err(Error::Resolution(_))
        ));
        assert!(matches!(
            build_spiral(5, MAX_POINTS_PER_ARC + 1),
            Err(Error::Resolution(_))
        ));
    }

    #[test]
    fn polyline_covers_every_arc_at_the_requested_resolution() {
        let model = build_spiral(5, 9).unwrap();
        let points: Vec<_> = model.polyline().collect();
        assert_eq!(points.len(), 5 * 9);
        assert_eq!(points[0].0, 1);
        assert_eq!(points[0].1, 0.0);
        assert_eq!(points[8].1, 1.0);
        // Samples of one arc stay at the arc's radius.
        for (idx, _, p) in &points {
            let segment = &model.segments[(*idx - 1) as usize];
            let r = p.distance(&segment.center);
            assert!((r - segment.radius).abs() < 1e-12);
        }
    }

    #[test]
    fn spiral_stays_inside_the_golden_rectangle() {
        let model = build_spiral(30, 32).unwrap();
        let phi = phi_f64();
        for (_, _, p) in model.polyline() {
            assert!(p.x >= -1e-12 && p.x <= 1.0 + 1e-12);
            assert!(p.y >= 1.0 - phi - 1e-12 && p.y <= 1.0 + 1e-12);
        }
    }
}
