//! Command-line front end: `circle`, `stringart`, `errors` and `compare`.
//!
//! Exit codes: 0 on success, 1 for usage or validation errors, 2 for
//! failures while running (I/O and the like).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    compare_sets, format_table, midpoint_reference, report_for_set, AnalysisError, TableRow,
};
use crate::rasterizer::{
    derive_params, rasterize_circle, rasterize_circle_parallel, Algorithm, CircleSpec, RasterError,
};
use crate::render::{render_string_art, render_to_canvas, write_pbm, RenderError};

/// Blank border around an auto-sized `circle` canvas.
pub const CANVAS_MARGIN: i64 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

impl From<RasterError> for CliError {
    fn from(e: RasterError) -> Self {
        match e {
            RasterError::InvalidRadius(_)
            | RasterError::RadiusTooLarge(_)
            | RasterError::CenterOutOfRange(..)
            | RasterError::NoWorkers => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Raster(inner) => inner.into(),
            AnalysisError::NegativeRadius(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> Self {
        match e {
            RenderError::InvalidCanvas(..)
            | RenderError::InvalidCell(_)
            | RenderError::Envelope(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "envelope-circle",
    about = "Draw circles as the envelope of intersecting straight lines",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pbm,
    Json,
}

/// `WxH`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanvasSize {
    pub width: usize,
    pub height: usize,
}

impl FromStr for CanvasSize {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|n| *n > 0)
                .ok_or_else(|| format!("invalid canvas dimension {v:?}"))
        };
        Ok(CanvasSize {
            width: parse(w)?,
            height: parse(h)?,
        })
    }
}

/// Comma-separated radii.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radii(pub Vec<i64>);

impl FromStr for Radii {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("invalid radius {t:?}"))
            })
            .collect::<Result<_, _>>()
            .map(Radii)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rasterize one circle to a PBM image or a JSON error report.
    Circle {
        #[arg(long, allow_hyphen_values = true)]
        cx: i64,
        #[arg(long, allow_hyphen_values = true)]
        cy: i64,
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
        #[arg(long, value_enum, default_value_t = Algorithm::Octant)]
        algo: Algorithm,
        /// Skip the one-pixel y correction.
        #[arg(long)]
        no_correct: bool,
        /// Worker threads for the arc loop.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Canvas size in absolute coordinates; auto-sized around the circle when omitted.
        #[arg(long)]
        canvas: Option<CanvasSize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pbm)]
        format: OutputFormat,
    },
    /// Draw the chord family itself.
    Stringart {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cell: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Residual error reports for a list of radii.
    Errors {
        #[arg(long)]
        radii: Radii,
        #[arg(long, value_enum, default_value_t = Algorithm::Octant)]
        algo: Algorithm,
        #[arg(long)]
        no_correct: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare against a midpoint-circle reference.
    Compare {
        #[arg(long)]
        radius: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub radius_px: i64,
    pub algo: Algorithm,
    pub corrected: bool,
    pub envelope_pixels: usize,
    pub midpoint_pixels: usize,
    pub only_envelope: usize,
    pub only_midpoint: usize,
    pub both: usize,
    pub jaccard: f64,
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes =
        serde_json::to_vec_pretty(value).map_err(|e| CliError::Runtime(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

pub fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Circle {
            cx,
            cy,
            radius,
            algo,
            no_correct,
            parallel,
            canvas,
            out,
            format,
        } => {
            let spec = CircleSpec::new(cx, cy, radius)?;
            let correct = !no_correct;
            let set = rasterize_circle_parallel(spec, algo, correct, parallel)?;
            match format {
                OutputFormat::Json => {
                    let report = report_for_set(&set, &spec, algo, correct)?;
                    write_file(&out, &to_json(&report)?)?;
                }
                OutputFormat::Pbm => {
                    let (canvas, clipped) = match canvas {
                        Some(size) => render_to_canvas(&set, size.width, size.height)?,
                        None => {
                            let width = derive_params(spec, algo)?.width;
                            let half = width + CANVAS_MARGIN;
                            let side = usize::try_from(2 * half)
                                .map_err(|_| CliError::Usage("canvas too large".into()))?;
                            let local = set.translated(half - cx, half - cy);
                            render_to_canvas(&local, side, side)?
                        }
                    };
                    write_file(&out, &write_pbm(&canvas))?;
                    if clipped > 0 {
                        writeln!(stdout, "{clipped} pixel(s) fell outside the canvas")
                            .map_err(|e| CliError::Runtime(e.to_string()))?;
                    }
                }
            }
        }
        Command::Stringart { n, cell, out } => {
            let canvas = render_string_art(n, cell)?;
            write_file(&out, &write_pbm(&canvas))?;
        }
        Command::Errors {
            radii,
            algo,
            no_correct,
            out,
        } => {
            let correct = !no_correct;
            let mut rows = Vec::with_capacity(radii.0.len());
            for rr in radii.0 {
                let spec = CircleSpec::new(0, 0, rr)?;
                rows.push(TableRow::compute(spec, algo, correct)?);
            }
            let reports: Vec<_> = rows.iter().map(|r| r.full.clone()).collect();
            write_file(&out, &to_json(&reports)?)?;
            write!(stdout, "{}", format_table(&rows))
                .map_err(|e| CliError::Runtime(e.to_string()))?;
        }
        Command::Compare { radius, out } => {
            let spec = CircleSpec::new(0, 0, radius)?;
            let envelope = rasterize_circle(spec, Algorithm::Octant, true)?;
            let reference = midpoint_reference(0, 0, radius)?;
            let cmp = compare_sets(&envelope, &reference)?;
            let report = ComparisonReport {
                radius_px: radius,
                algo: Algorithm::Octant,
                corrected: true,
                envelope_pixels: envelope.len(),
                midpoint_pixels: reference.len(),
                only_envelope: cmp.only_a,
                only_midpoint: cmp.only_b,
                both: cmp.both,
                jaccard: cmp.jaccard,
            };
            write_file(&out, &to_json(&report)?)?;
            writeln!(stdout, "jaccard similarity vs midpoint: {:.4}", cmp.jaccard)
                .map_err(|e| CliError::Runtime(e.to_string()))?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    1
                }
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
