//! Binary canvas, plain PBM encoding and string-art drawing.

use thiserror::Error;

use crate::envelope::{chord_family, EnvelopeError};
use crate::intmath::{div_round_half_signed, ArithError};
use crate::rasterizer::{Pixel, PixelSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("invalid canvas size {0}x{1}")]
    InvalidCanvas(usize, usize),
    #[error("invalid cell size {0}")]
    InvalidCell(u32),
    #[error("malformed PBM: {0}")]
    MalformedPbm(String),
    #[error(transparent)]
    Envelope(#[from] EnvelopeError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Row-major 1-bit raster; `true` is a plotted pixel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canvas {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl Canvas {
    pub fn new(width: usize, height: usize) -> Result<Self, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError::InvalidCanvas(width, height));
        }
        Ok(Canvas {
            width,
            height,
            bits: vec![false; width * height],
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    /// Sets the pixel if it is on the canvas; returns whether it was.
    pub fn plot(&mut self, p: Pixel) -> bool {
        match (usize::try_from(p.px), usize::try_from(p.py)) {
            (Ok(x), Ok(y)) if x < self.width && y < self.height => {
                self.bits[y * self.width + x] = true;
                true
            }
            _ => false,
        }
    }

    pub fn count_set(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }
}

/// Plots every in-bounds pixel and returns the canvas with the number of
/// pixels clipped.
pub fn render_to_canvas(
    pixels: &PixelSet,
    width: usize,
    height: usize,
) -> Result<(Canvas, usize), RenderError> {
    let mut canvas = Canvas::new(width, height)?;
    let clipped = pixels.iter().filter(|p| !canvas.plot(**p)).count();
    Ok((canvas, clipped))
}

/// Plain (P1) PBM: header, dimensions, then one line of space-separated bits
/// per row.
pub fn write_pbm(canvas: &Canvas) -> Vec<u8> {
    let mut out = format!("P1\n{} {}\n", canvas.width, canvas.height).into_bytes();
    out.reserve(canvas.bits.len() * 2);
    for row in canvas.bits.chunks(canvas.width) {
        for (i, bit) in row.iter().enumerate() {
            if i > 0 {
                out.push(b' ');
            }
            out.push(if *bit { b'1' } else { b'0' });
        }
        out.push(b'\n');
    }
    out
}

/// Parses a plain PBM. Accepts comments and free whitespace as well as the
/// packed digit layout.
pub fn read_pbm(bytes: &[u8]) -> Result<Canvas, RenderError> {
    let text = std::str::from_utf8(bytes).map_err(|e| RenderError::MalformedPbm(e.to_string()))?;
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("P1") {
        return Err(RenderError::MalformedPbm("missing P1 magic".into()));
    }
    let mut dim = || -> Result<usize, RenderError> {
        tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| RenderError::MalformedPbm("bad dimensions".into()))
    };
    let (width, height) = (dim()?, dim()?);
    let mut canvas = Canvas::new(width, height)?;
    let mut bits = tokens.flat_map(str::chars);
    for slot in canvas.bits.iter_mut() {
        *slot = match bits.next() {
            Some('1') => true,
            Some('0') => false,
            Some(c) => return Err(RenderError::MalformedPbm(format!("unexpected {c:?}"))),
            None => return Err(RenderError::MalformedPbm("truncated raster".into())),
        };
    }
    if bits.next().is_some() {
        return Err(RenderError::MalformedPbm("trailing data".into()));
    }
    Ok(canvas)
}

/// Integer line from `a` to `b`, one pixel per step along the major axis with
/// the minor coordinate rounded half up.
///
/// The result depends only on the unordered endpoint pair, and swapping the
/// axes of both endpoints swaps the axes of every pixel.
pub fn line_pixels(a: Pixel, b: Pixel) -> Result<Vec<Pixel>, ArithError> {
    let (dx, dy) = (b.px - a.px, b.py - a.py);
    if dx == 0 && dy == 0 {
        return Ok(vec![a]);
    }
    let x_major = dx.abs() >= dy.abs();
    let (lo, hi) = if x_major {
        if a.px <= b.px {
            (a, b)
        } else {
            (b, a)
        }
    } else if a.py <= b.py {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = Vec::new();
    if x_major {
        let span = hi.px - lo.px;
        for t in 0..=span {
            let y = lo.py + div_round_half_signed((hi.py - lo.py) * t, span)?;
            out.push(Pixel::new(lo.px + t, y));
        }
    } else {
        let span = hi.py - lo.py;
        for t in 0..=span {
            let x = lo.px + div_round_half_signed((hi.px - lo.px) * t, span)?;
            out.push(Pixel::new(x, lo.py + t));
        }
    }
    Ok(out)
}

/// Draws the whole chord family of size `n`, each unit scaled to `cell`
/// pixels, on a square canvas of side `n * cell + 1`.
pub fn render_string_art(n: u32, cell: u32) -> Result<Canvas, RenderError> {
    let family = chord_family(n)?;
    if cell == 0 {
        return Err(RenderError::InvalidCell(cell));
    }
    let side = n as usize * cell as usize + 1;
    let mut canvas = Canvas::new(side, side)?;
    let cell = i64::from(cell);
    for chord in family {
        let (x0, y0) = chord.y_end();
        let (x1, y1) = chord.x_end();
        for p in line_pixels(
            Pixel::new(x0 * cell, y0 * cell),
            Pixel::new(x1 * cell, y1 * cell),
        )? {
            canvas.plot(p);
        }
    }
    Ok(canvas)
}
