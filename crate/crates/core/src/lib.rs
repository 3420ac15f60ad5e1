//! Integer-only circle rasterization from the envelope of a family of
//! straight lines.
//!
//! The chord family joining `(0, n - j + 1)` to `(j, 0)` has a parabolic
//! envelope. Rescaling a stretch of that envelope and mirroring it about the
//! centre yields a circle whose pixels are each computed independently, with
//! nothing but integer multiplication and shift-subtract division.
//!
//! ```
//! use envelope_circle::{rasterize_circle, Algorithm, CircleSpec};
//!
//! let spec = CircleSpec::new(100, 100, 40).unwrap();
//! let pixels = rasterize_circle(spec, Algorithm::Octant, true).unwrap();
//! assert_eq!(pixels.len(), 156);
//! ```
//!
//! Modules, bottom up: [`intmath`] (division and rounding), [`envelope`]
//! (chords and their intersections), [`rasterizer`] (the arc loop and
//! symmetry expansion), [`analysis`] (error measurement and a midpoint
//! reference), [`render`] (canvas, PBM, string art) and [`cli`].

pub mod analysis;
pub mod cli;
pub mod envelope;
pub mod intmath;
pub mod rasterizer;
pub mod render;

pub use analysis::{error_report, ErrorReport};
pub use envelope::{chord_family, Chord};
pub use rasterizer::{
    rasterize_circle, rasterize_circle_parallel, Algorithm, CircleSpec, Pixel, PixelSet,
};
pub use render::{render_string_art, write_pbm, Canvas};
