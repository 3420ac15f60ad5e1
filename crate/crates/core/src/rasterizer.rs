//! Circle rasterization from chord-envelope intersections.
//!
//! A circle of radius `rr` centred at `(xx, yy)` is drawn by running the chord
//! family over a frame of extent `x = 5 rr / 4`, taking the intersection of
//! chords `i - 1` and `i` for `i` between `r / 10 + 1` and `dist`, rounding
//! each to a pixel with integer division and mirroring the result into the
//! rest of the circle. [`Algorithm::Quadrant`] computes a quarter arc and
//! mirrors it four ways; [`Algorithm::Octant`] computes an eighth and mirrors
//! it eight ways.
//!
//! Loop indices are independent of one another. [`rasterize_circle_parallel`]
//! splits them across worker threads and merges through a set union, so the
//! result never depends on the worker count.

use std::collections::btree_set::{self, BTreeSet};
use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::envelope::{normalize_adjacent_pair, Chord, EnvelopeError};
use crate::intmath::{div_round_half, long_divide, ArithError};

/// Largest supported radius; keeps `x2 (x2 + 1)` inside 64 bits.
pub const MAX_RADIUS: i64 = 1 << 28;
/// Largest supported absolute centre coordinate.
pub const MAX_CENTER: i64 = 1 << 40;
/// Below this radius the frame is too coarse for the calibration ratios.
pub const DEGENERATE_BELOW: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RasterError {
    #[error("invalid radius {0}: must be at least 1")]
    InvalidRadius(i64),
    #[error("radius {0} exceeds the supported maximum of 2^28")]
    RadiusTooLarge(i64),
    #[error("centre ({0}, {1}) is outside the supported range of +/-2^40")]
    CenterOutOfRange(i64, i64),
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error(transparent)]
    Envelope(#[from] EnvelopeError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Requested circle: centre `(cx, cy)` and radius, in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircleSpec {
    cx: i64,
    cy: i64,
    radius: i64,
}

impl CircleSpec {
    pub fn new(cx: i64, cy: i64, radius: i64) -> Result<Self, RasterError> {
        if radius < 1 {
            return Err(RasterError::InvalidRadius(radius));
        }
        if radius > MAX_RADIUS {
            return Err(RasterError::RadiusTooLarge(radius));
        }
        if cx.abs() > MAX_CENTER || cy.abs() > MAX_CENTER {
            return Err(RasterError::CenterOutOfRange(cx, cy));
        }
        Ok(CircleSpec { cx, cy, radius })
    }

    pub fn cx(&self) -> i64 {
        self.cx
    }

    pub fn cy(&self) -> i64 {
        self.cy
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn is_degenerate(&self) -> bool {
        self.radius < DEGENERATE_BELOW
    }
}

#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Quarter arc, four-fold duplication.
    #[value(name = "one")]
    #[serde(rename = "one")]
    Quadrant,
    /// Eighth arc, eight-fold duplication.
    #[default]
    #[value(name = "two")]
    #[serde(rename = "two")]
    Octant,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Quadrant => "one",
            Algorithm::Octant => "two",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub const fn new(num: i64, den: i64) -> Self {
        Ratio { num, den }
    }
}

/// Constants measured once on a reference circle of radius 160 inside a
/// 200 x 200 frame, reused unchanged for every circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Calibration {
    /// Envelope-frame radius to circle radius.
    pub radius_ratio: Ratio,
    /// Duplication half-extent to circle radius.
    pub width_ratio: Ratio,
    /// Frame radius to the distance cut off each end of the arc.
    pub dd_ratio: Ratio,
    /// Gap between the frame edge and the circle at the reference scale.
    pub disp: i64,
    /// The `t : tt` split of the reference radius.
    pub arc_span: Ratio,
}

pub const CALIBRATION: Calibration = Calibration {
    radius_ratio: Ratio::new(5, 4),
    width_ratio: Ratio::new(41, 40),
    dd_ratio: Ratio::new(10, 1),
    disp: 3,
    arc_span: Ratio::new(160, 37),
};

/// Radius of the reference circle the calibration was measured on.
pub const REFERENCE_RADIUS: i64 = 160;

/// Working parameters of the arc loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DerivedParams {
    pub r: i64,
    pub x: i64,
    pub width: i64,
    pub xoffset: i64,
    pub yoffset: i64,
    /// Last loop index, inclusive.
    pub dist: i64,
    /// First loop index.
    pub i0: i64,
}

fn to_u64(v: i64) -> u64 {
    u64::try_from(v).expect("non-negative by construction")
}

fn scale_round_half(value: i64, ratio: Ratio) -> Result<i64, ArithError> {
    Ok(div_round_half(to_u64(value * ratio.num), to_u64(ratio.den))? as i64)
}

fn ceil_div(num: i64, den: i64) -> Result<i64, ArithError> {
    let d = long_divide(to_u64(num), to_u64(den))?;
    Ok((d.quotient + u64::from(d.remainder != 0)) as i64)
}

pub fn derive_params(spec: CircleSpec, algo: Algorithm) -> Result<DerivedParams, RasterError> {
    let cal = CALIBRATION;
    let rr = spec.radius;
    let r = scale_round_half(rr, cal.radius_ratio)?;
    let x = r;
    let width = scale_round_half(rr, cal.width_ratio)?;
    let cut = cal.dd_ratio.num / cal.dd_ratio.den;
    let i0 = long_divide(to_u64(r), to_u64(cut))?.quotient as i64 + 1;
    let dist = match algo {
        Algorithm::Quadrant => ceil_div(cut * x - r, cut)? + 2,
        Algorithm::Octant => ceil_div(x, 2)? + 2,
    };
    Ok(DerivedParams {
        r,
        x,
        width,
        xoffset: spec.cx - width,
        yoffset: spec.cy - width,
        dist,
        i0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pixel {
    pub px: i64,
    pub py: i64,
}

impl Pixel {
    pub const fn new(px: i64, py: i64) -> Self {
        Pixel { px, py }
    }

    pub fn translate(self, dx: i64, dy: i64) -> Self {
        Pixel::new(self.px + dx, self.py + dy)
    }
}

impl From<(i64, i64)> for Pixel {
    fn from((px, py): (i64, i64)) -> Self {
        Pixel::new(px, py)
    }
}

/// Deduplicated pixels. Iteration is in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PixelSet(BTreeSet<Pixel>);

impl PixelSet {
    pub fn new() -> Self {
        PixelSet(BTreeSet::new())
    }

    pub fn insert(&mut self, p: Pixel) -> bool {
        self.0.insert(p)
    }

    pub fn contains(&self, p: &Pixel) -> bool {
        self.0.contains(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Pixel> {
        self.0.iter()
    }

    pub fn union_with(&mut self, other: PixelSet) {
        self.0.extend(other.0);
    }

    pub fn intersection_len(&self, other: &PixelSet) -> usize {
        self.0.intersection(&other.0).count()
    }

    pub fn translated(&self, dx: i64, dy: i64) -> PixelSet {
        self.iter().map(|p| p.translate(dx, dy)).collect()
    }

    /// Smallest and largest corners, or `None` when empty.
    pub fn bounds(&self) -> Option<(Pixel, Pixel)> {
        let mut it = self.iter();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| {
            (
                Pixel::new(lo.px.min(p.px), lo.py.min(p.py)),
                Pixel::new(hi.px.max(p.px), hi.py.max(p.py)),
            )
        }))
    }
}

impl FromIterator<Pixel> for PixelSet {
    fn from_iter<I: IntoIterator<Item = Pixel>>(iter: I) -> Self {
        PixelSet(iter.into_iter().collect())
    }
}

impl Extend<Pixel> for PixelSet {
    fn extend<I: IntoIterator<Item = Pixel>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for PixelSet {
    type Item = Pixel;
    type IntoIter = btree_set::IntoIter<Pixel>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a PixelSet {
    type Item = &'a Pixel;
    type IntoIter = btree_set::Iter<'a, Pixel>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// One computed arc pixel, before duplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcPixel {
    pub index: i64,
    /// Position inside the envelope frame, origin at the frame corner.
    pub frame: Pixel,
    /// `frame` translated by the offsets.
    pub pixel: Pixel,
}

/// The chord pair the loop evaluates at index `i`: `((0, i-1), (x-i+1, 0))`
/// and `((0, i), (x-i, 0))`. `None` when either chord touches the origin.
pub fn loop_chords(params: &DerivedParams, i: i64) -> Option<(Chord, Chord)> {
    let a = Chord::new(i - 1, params.x - i + 1).ok()?;
    let b = Chord::new(i, params.x - i).ok()?;
    Some((a, b))
}

/// `(x2, y3, x4)` for loop index `i`.
///
/// For proper chords this goes through [`normalize_adjacent_pair`]. Small
/// frames reach indices where a chord collapses onto an axis; there the raw
/// triple `(x - i, i - 1, x - i + 1)` is used as long as `x4 >= 1`, and the
/// index is skipped otherwise.
fn loop_triple(params: &DerivedParams, i: i64) -> Result<Option<(i64, i64, i64)>, RasterError> {
    if let Some((a, b)) = loop_chords(params, i) {
        let pair = normalize_adjacent_pair(a, b)?;
        return Ok(Some((pair.x2(), pair.y3(), pair.x4())));
    }
    let (x2, y3, x4) = (params.x - i, i - 1, params.x - i + 1);
    if x4 < 1 || y3 < 0 {
        return Ok(None);
    }
    Ok(Some((x2, y3, x4)))
}

/// Integer pipeline for one loop index: numerator and denominator of each
/// coordinate exact, one rounding division each, rounded x feeding y.
pub fn arc_pixel(
    params: &DerivedParams,
    i: i64,
    correct: bool,
) -> Result<Option<ArcPixel>, RasterError> {
    let Some((x2, y3, x4)) = loop_triple(params, i)? else {
        return Ok(None);
    };
    let x = div_round_half(to_u64(x2 * (x2 + 1)), to_u64(y3 + x4))? as i64;
    let mut y = div_round_half(to_u64(y3 * (x4 - x)), to_u64(x4))? as i64;
    if correct {
        y += 1;
    }
    let frame = Pixel::new(x, y);
    Ok(Some(ArcPixel {
        index: i,
        frame,
        pixel: frame.translate(params.xoffset, params.yoffset),
    }))
}

pub fn arc_pixels(params: &DerivedParams, correct: bool) -> Result<Vec<ArcPixel>, RasterError> {
    let mut out = Vec::new();
    for i in params.i0..=params.dist {
        if let Some(p) = arc_pixel(params, i, correct)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Mirrors a translated arc pixel into the four quadrants of the
/// `2 width` square.
pub fn quadrant_expand(p: Pixel, params: &DerivedParams) -> Vec<Pixel> {
    let (x, y) = (p.px - params.xoffset, p.py - params.yoffset);
    let far = 2 * params.width;
    let mut out = vec![
        Pixel::new(x + params.xoffset, y + params.yoffset),
        Pixel::new(far - x + params.xoffset, y + params.yoffset),
        Pixel::new(far - x + params.xoffset, far - y + params.yoffset),
        Pixel::new(x + params.xoffset, far - y + params.yoffset),
    ];
    out.sort_unstable();
    out.dedup();
    out
}

/// The plotted pixel plus its seven mirrors about the circle centre.
pub fn octant_expand(p: Pixel, spec: &CircleSpec) -> Vec<Pixel> {
    let (xx, yy) = (spec.cx, spec.cy);
    let (dx, dy) = (xx - p.px, yy - p.py);
    let mut out = vec![
        p,
        Pixel::new(xx + dx, yy + dy),
        Pixel::new(xx - dx, yy + dy),
        Pixel::new(xx + dx, yy - dy),
        Pixel::new(xx + dy, yy + dx),
        Pixel::new(xx - dy, yy + dx),
        Pixel::new(xx + dy, yy - dx),
        Pixel::new(xx - dy, yy - dx),
    ];
    out.sort_unstable();
    out.dedup();
    out
}

fn expand(p: Pixel, spec: &CircleSpec, params: &DerivedParams, algo: Algorithm) -> Vec<Pixel> {
    match algo {
        Algorithm::Quadrant => quadrant_expand(p, params),
        Algorithm::Octant => octant_expand(p, spec),
    }
}

pub fn rasterize_circle(
    spec: CircleSpec,
    algo: Algorithm,
    correct: bool,
) -> Result<PixelSet, RasterError> {
    rasterize_circle_parallel(spec, algo, correct, 1)
}

/// Same output as [`rasterize_circle`] for every `workers >= 1`. Loop indices
/// are split into contiguous blocks, one per scoped thread.
pub fn rasterize_circle_parallel(
    spec: CircleSpec,
    algo: Algorithm,
    correct: bool,
    workers: usize,
) -> Result<PixelSet, RasterError> {
    if workers == 0 {
        return Err(RasterError::NoWorkers);
    }
    let params = derive_params(spec, algo)?;
    let indices: Vec<i64> = (params.i0..=params.dist).collect();
    let block = indices.len().div_ceil(workers).max(1);

    let run_block = |block: &[i64]| -> Result<PixelSet, RasterError> {
        let mut set = PixelSet::new();
        for &i in block {
            if let Some(arc) = arc_pixel(&params, i, correct)? {
                set.extend(expand(arc.pixel, &spec, &params, algo));
            }
        }
        Ok(set)
    };

    if workers == 1 || indices.len() <= 1 {
        return run_block(&indices);
    }

    let partials: Vec<Result<PixelSet, RasterError>> = thread::scope(|s| {
        let handles: Vec<_> = indices
            .chunks(block)
            .map(|chunk| s.spawn(|| run_block(chunk)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rasterizer worker panicked"))
            .collect()
    });

    let mut out = PixelSet::new();
    for part in partials {
        out.union_with(part?);
    }
    Ok(out)
}
