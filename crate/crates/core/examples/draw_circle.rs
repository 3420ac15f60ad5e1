//! Rasterize one circle, print it as text and optionally save a PBM.
//!
//! ```bash
//! cargo run -p envelope-circle --example draw_circle -- 24 circle.pbm
//! ```

use envelope_circle::rasterizer::derive_params;
use envelope_circle::render::render_to_canvas;
use envelope_circle::{error_report, rasterize_circle, write_pbm, Algorithm, CircleSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let radius: i64 = args
        .next()
        .map(|a| a.parse().expect("radius must be an integer"))
        .unwrap_or(24);
    let out = args.next();

    let spec = CircleSpec::new(0, 0, radius).expect("valid radius");
    let params = derive_params(spec, Algorithm::Octant).unwrap();
    println!("{params:?}");

    let pixels = rasterize_circle(spec, Algorithm::Octant, true).unwrap();
    let half = params.width + 2;
    let side = (2 * half) as usize;
    let (canvas, _) = render_to_canvas(&pixels.translated(half, half), side, side).unwrap();

    for y in 0..canvas.height() {
        let row: String = (0..canvas.width())
            .map(|x| if canvas.get(x, y) { '#' } else { '.' })
            .collect();
        println!("{row}");
    }

    let report = error_report(spec, Algorithm::Octant, true).unwrap();
    println!(
        "{} pixels, average error {:.3}, maximum {:.3}",
        report.pixel_count, report.average_error_px, report.maximum_error_px
    );

    if let Some(path) = out {
        std::fs::write(&path, write_pbm(&canvas)).expect("write PBM");
        println!("wrote {path}");
    }
}
