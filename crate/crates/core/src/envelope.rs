//! The chord family whose adjacent intersections trace a parabolic envelope.
//!
//! Chord `j` of a family of size `n` joins `(0, n - j + 1)` on the vertical axis
//! to `(j, 0)` on the horizontal axis. Two routes compute where neighbouring
//! chords cross: [`intersect_exact`] solves the 2x2 line system by Cramer's
//! rule, and [`intersect_adjacent_fast`] uses the closed form that only holds
//! for neighbours (`x = x2 (x2 + 1) / (y3 + x4)`, `y = y3 (x4 - x) / x4`).
//! Everything here is exact; rounding to pixels is the rasterizer's job.

use thiserror::Error;

use crate::intmath::{ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvelopeError {
    #[error("chord family must contain at least one chord")]
    EmptyFamily,
    #[error("chord intercepts must be positive, got (0, {y_intercept}) and ({x_intercept}, 0)")]
    InvalidChord { y_intercept: i64, x_intercept: i64 },
    #[error("chords are parallel")]
    Parallel,
    #[error("chords are coincident")]
    Coincident,
    #[error("chords are not adjacent: {0}")]
    NotAdjacent(String),
    #[error("invalid adjacent pair (x2 = {x2}, y3 = {y3}, x4 = {x4})")]
    InvalidPair { x2: i64, y3: i64, x4: i64 },
    #[error("degenerate denominator y3 + x4 = 0")]
    DegenerateDenominator,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A segment from `(0, y_intercept)` to `(x_intercept, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    y_intercept: i64,
    x_intercept: i64,
}

impl Chord {
    pub fn new(y_intercept: i64, x_intercept: i64) -> Result<Self, EnvelopeError> {
        if y_intercept < 1 || x_intercept < 1 {
            return Err(EnvelopeError::InvalidChord {
                y_intercept,
                x_intercept,
            });
        }
        Ok(Chord {
            y_intercept,
            x_intercept,
        })
    }

    pub fn y_intercept(&self) -> i64 {
        self.y_intercept
    }

    pub fn x_intercept(&self) -> i64 {
        self.x_intercept
    }

    /// Endpoint on the vertical axis.
    pub fn y_end(&self) -> (i64, i64) {
        (0, self.y_intercept)
    }

    /// Endpoint on the horizontal axis.
    pub fn x_end(&self) -> (i64, i64) {
        (self.x_intercept, 0)
    }

    pub fn line(&self) -> ExactLine {
        ExactLine {
            slope: Rational::new(-i128::from(self.y_intercept), i128::from(self.x_intercept))
                .expect("x intercept is positive"),
            intercept: Rational::from(self.y_intercept),
        }
    }
}

/// `y = slope * x + intercept`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLine {
    pub slope: Rational,
    pub intercept: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

/// Neighbouring chords in normal orientation: `((0, y3 + 1), (x2, 0))` and
/// `((0, y3), (x4, 0))` with `x4 = x2 + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdjacentPair {
    x2: i64,
    y3: i64,
    x4: i64,
}

impl AdjacentPair {
    pub fn new(x2: i64, y3: i64, x4: i64) -> Result<Self, EnvelopeError> {
        if x2 < 1 || y3 < 0 || x4 != x2 + 1 {
            return Err(EnvelopeError::InvalidPair { x2, y3, x4 });
        }
        Ok(AdjacentPair { x2, y3, x4 })
    }

    pub fn x2(&self) -> i64 {
        self.x2
    }

    pub fn y3(&self) -> i64 {
        self.y3
    }

    pub fn x4(&self) -> i64 {
        self.x4
    }

    /// Vertical intercept of the shallower chord.
    pub fn y1(&self) -> i64 {
        self.y3 + 1
    }
}

pub fn chord_family(n: u32) -> Result<Vec<Chord>, EnvelopeError> {
    if n == 0 {
        return Err(EnvelopeError::EmptyFamily);
    }
    let n = i64::from(n);
    (1..=n).map(|j| Chord::new(n - j + 1, j)).collect()
}

/// Solves `-m1 x + y = c1`, `-m2 x + y = c2` by Cramer's rule.
pub fn intersect_exact(a: Chord, b: Chord) -> Result<RationalPoint, EnvelopeError> {
    if a == b {
        return Err(EnvelopeError::Coincident);
    }
    let ExactLine {
        slope: m1,
        intercept: c1,
    } = a.line();
    let ExactLine {
        slope: m2,
        intercept: c2,
    } = b.line();
    let det = m2 - m1;
    if det.is_zero() {
        return Err(EnvelopeError::Parallel);
    }
    let x = (c1 - c2).checked_div(det)?;
    let y = (m2 * c1 - m1 * c2).checked_div(det)?;
    Ok(RationalPoint { x, y })
}

pub fn intersect_adjacent_fast(p: AdjacentPair) -> Result<RationalPoint, EnvelopeError> {
    let denom = p.y3 + p.x4;
    if denom == 0 {
        return Err(EnvelopeError::DegenerateDenominator);
    }
    let x = Rational::new(i128::from(p.x2) * i128::from(p.x2 + 1), i128::from(denom))?;
    let x4 = Rational::from(p.x4);
    let y = (Rational::from(p.y3) * (x4 - x)).checked_div(x4)?;
    Ok(RationalPoint { x, y })
}

/// Puts two neighbouring chords into [`AdjacentPair`] orientation regardless
/// of argument order.
///
/// The arc loop hands over `((0, i-1), (x-i+1, 0))` first, which is the steeper
/// chord, whereas the closed form wants `x2` to be the smaller horizontal
/// intercept. Only that orientation reproduces the true intersection.
pub fn normalize_adjacent_pair(a: Chord, b: Chord) -> Result<AdjacentPair, EnvelopeError> {
    let dy = (a.y_intercept - b.y_intercept).abs();
    let dx = (a.x_intercept - b.x_intercept).abs();
    if dy != 1 || dx != 1 {
        return Err(EnvelopeError::NotAdjacent(format!(
            "intercept gaps are {dy} (vertical) and {dx} (horizontal), expected 1 and 1"
        )));
    }
    let (near, far) = if a.x_intercept < b.x_intercept {
        (a, b)
    } else {
        (b, a)
    };
    if near.y_intercept < far.y_intercept {
        return Err(EnvelopeError::NotAdjacent(
            "the chord nearer the origin on one axis must be farther on the other".into(),
        ));
    }
    AdjacentPair::new(near.x_intercept, far.y_intercept, far.x_intercept)
}
