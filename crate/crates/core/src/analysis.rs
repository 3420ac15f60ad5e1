//! Circle quality measurement.
//!
//! Error is per pixel: the absolute difference between the pixel's distance
//! from the centre and the requested radius. Reports aggregate it over a
//! whole deduplicated pixel set. Floating point is used here for measurement
//! only; no value computed in this module feeds back into rasterization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rasterizer::{
    arc_pixels, derive_params, rasterize_circle, Algorithm, CircleSpec, Pixel, PixelSet,
    RasterError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("cannot measure an empty pixel set")]
    EmptySet,
    #[error("jaccard similarity of two empty sets is undefined")]
    UndefinedJaccard,
    #[error("negative radius {0}")]
    NegativeRadius(i64),
    #[error(transparent)]
    Raster(#[from] RasterError),
}

/// Residual error of one rasterized circle. Field order is the JSON order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub radius_px: i64,
    pub algo: Algorithm,
    pub corrected: bool,
    pub pixel_count: usize,
    pub average_error_px: f64,
    pub maximum_error_px: f64,
    pub degenerate: bool,
}

pub fn radial_error(p: Pixel, spec: &CircleSpec) -> f64 {
    radial_error_at(p, spec.cx(), spec.cy(), spec.radius())
}

fn radial_error_at(p: Pixel, cx: i64, cy: i64, radius: i64) -> f64 {
    let dx = (p.px - cx) as f64;
    let dy = (p.py - cy) as f64;
    (dx.hypot(dy) - radius as f64).abs()
}

/// Mean and maximum radial error over arbitrary pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorStats {
    pub count: usize,
    pub average: f64,
    pub maximum: f64,
    pub minimum: f64,
}

pub fn measure<'a, I>(pixels: I, spec: &CircleSpec) -> Result<ErrorStats, AnalysisError>
where
    I: IntoIterator<Item = &'a Pixel>,
{
    let mut count = 0usize;
    let mut sum = 0.0;
    let mut maximum = 0.0f64;
    let mut minimum = f64::INFINITY;
    for p in pixels {
        let e = radial_error(*p, spec);
        count += 1;
        sum += e;
        maximum = maximum.max(e);
        minimum = minimum.min(e);
    }
    if count == 0 {
        return Err(AnalysisError::EmptySet);
    }
    Ok(ErrorStats {
        count,
        average: sum / count as f64,
        maximum,
        minimum,
    })
}

pub fn report_for_set(
    set: &PixelSet,
    spec: &CircleSpec,
    algo: Algorithm,
    corrected: bool,
) -> Result<ErrorReport, AnalysisError> {
    let stats = measure(set, spec)?;
    Ok(ErrorReport {
        radius_px: spec.radius(),
        algo,
        corrected,
        pixel_count: set.len(),
        average_error_px: stats.average,
        maximum_error_px: stats.maximum,
        degenerate: spec.is_degenerate(),
    })
}

/// Rasterizes and measures the full (duplicated) circle.
pub fn error_report(
    spec: CircleSpec,
    algo: Algorithm,
    correct: bool,
) -> Result<ErrorReport, AnalysisError> {
    let set = rasterize_circle(spec, algo, correct)?;
    report_for_set(&set, &spec, algo, correct)
}

/// Measures only the computed arc, before any mirroring.
pub fn arc_error_report(
    spec: CircleSpec,
    algo: Algorithm,
    correct: bool,
) -> Result<ErrorReport, AnalysisError> {
    let params = derive_params(spec, algo)?;
    let set: PixelSet = arc_pixels(&params, correct)?
        .into_iter()
        .map(|a| a.pixel)
        .collect();
    report_for_set(&set, &spec, algo, correct)
}

/// Residual errors after correction for the octant algorithm, as
/// `(radius, average, maximum)`.
pub const PUBLISHED_RESIDUALS: [(i64, f64, f64); 5] = [
    (20, 0.21, 0.52),
    (40, 0.32, 0.78),
    (60, 0.35, 0.85),
    (80, 0.30, 0.99),
    (100, 0.37, 0.89),
];

/// Averages further than this from the published figure get flagged.
pub const PUBLISHED_DEVIATION_FLAG: f64 = 0.25;

pub fn published_residual(radius: i64) -> Option<(f64, f64)> {
    PUBLISHED_RESIDUALS
        .iter()
        .find(|(r, _, _)| *r == radius)
        .map(|&(_, avg, max)| (avg, max))
}

/// One row of a side-by-side comparison against the published table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub full: ErrorReport,
    pub arc_only: ErrorReport,
    pub published: Option<(f64, f64)>,
}

impl TableRow {
    pub fn compute(
        spec: CircleSpec,
        algo: Algorithm,
        correct: bool,
    ) -> Result<Self, AnalysisError> {
        Ok(TableRow {
            full: error_report(spec, algo, correct)?,
            arc_only: arc_error_report(spec, algo, correct)?,
            published: published_residual(spec.radius()),
        })
    }

    pub fn average_deviation(&self) -> Option<f64> {
        self.published
            .map(|(avg, _)| (self.full.average_error_px - avg).abs())
    }

    pub fn flagged(&self) -> bool {
        self.average_deviation()
            .is_some_and(|d| d > PUBLISHED_DEVIATION_FLAG)
    }

    /// Which measurement lands closer to the published average.
    pub fn closer_variant(&self) -> Option<&'static str> {
        let (avg, _) = self.published?;
        let full = (self.full.average_error_px - avg).abs();
        let arc = (self.arc_only.average_error_px - avg).abs();
        Some(if arc < full { "arc" } else { "full" })
    }
}

pub fn format_table(rows: &[TableRow]) -> String {
    let mut out = String::from(
        "radius  avg(full)  max(full)  avg(arc)  max(arc)  pub.avg  pub.max  closer  flag\n",
    );
    for row in rows {
        let (pa, pm) = match row.published {
            Some((a, m)) => (format!("{a:.2}"), format!("{m:.2}")),
            None => ("-".into(), "-".into()),
        };
        out.push_str(&format!(
            "{:>6}  {:>9.2}  {:>9.2}  {:>8.2}  {:>8.2}  {:>7}  {:>7}  {:>6}  {}\n",
            row.full.radius_px,
            row.full.average_error_px,
            row.full.maximum_error_px,
            row.arc_only.average_error_px,
            row.arc_only.maximum_error_px,
            pa,
            pm,
            row.closer_variant().unwrap_or("-"),
            if row.flagged() { "DEVIATES" } else { "" },
        ));
    }
    out
}

/// Midpoint circle rasterizer, used as an independent reference.
///
/// Walks the octant from `(0, r)` while `x <= y`, stepping `y` down whenever
/// the midpoint `(x + 1, y - 1/2)` falls outside the circle, then mirrors.
pub fn midpoint_reference(cx: i64, cy: i64, radius: i64) -> Result<PixelSet, AnalysisError> {
    if radius < 0 {
        return Err(AnalysisError::NegativeRadius(radius));
    }
    let mut set = PixelSet::new();
    let (mut x, mut y) = (0i64, radius);
    let r2 = 4 * radius * radius;
    while x <= y {
        for (a, b) in [
            (x, y),
            (-x, y),
            (x, -y),
            (-x, -y),
            (y, x),
            (-y, x),
            (y, -x),
            (-y, -x),
        ] {
            set.insert(Pixel::new(cx + a, cy + b));
        }
        // 4 ((x+1)^2 + (y-1/2)^2) against 4 r^2
        if 4 * (x + 1) * (x + 1) + (2 * y - 1) * (2 * y - 1) >= r2 {
            y -= 1;
        }
        x += 1;
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SetComparison {
    pub only_a: usize,
    pub only_b: usize,
    pub both: usize,
    pub jaccard: f64,
}

pub fn compare_sets(a: &PixelSet, b: &PixelSet) -> Result<SetComparison, AnalysisError> {
    if a.is_empty() && b.is_empty() {
        return Err(AnalysisError::UndefinedJaccard);
    }
    let both = a.intersection_len(b);
    let only_a = a.len() - both;
    let only_b = b.len() - both;
    Ok(SetComparison {
        only_a,
        only_b,
        both,
        jaccard: both as f64 / (only_a + only_b + both) as f64,
    })
}

/// Uncorrected average error at two radii.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthDiagnostic {
    pub small: ErrorReport,
    pub large: ErrorReport,
}

impl GrowthDiagnostic {
    pub fn grows(&self) -> bool {
        self.large.average_error_px > self.small.average_error_px
    }
}

pub fn error_growth(
    small_radius: i64,
    large_radius: i64,
    algo: Algorithm,
) -> Result<GrowthDiagnostic, AnalysisError> {
    Ok(GrowthDiagnostic {
        small: error_report(CircleSpec::new(0, 0, small_radius)?, algo, false)?,
        large: error_report(CircleSpec::new(0, 0, large_radius)?, algo, false)?,
    })
}
