//! Draw the chord family itself; the parabolic envelope shows up where the
//! lines stop.
//!
//! ```bash
//! cargo run -p envelope-circle --example string_art -- 16 4 strings.pbm
//! ```

use envelope_circle::{render_string_art, write_pbm};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map(|a| a.parse().unwrap()).unwrap_or(12);
    let cell: u32 = args.next().map(|a| a.parse().unwrap()).unwrap_or(3);
    let out = args.next();

    let canvas = render_string_art(n, cell).expect("n and cell must be positive");
    for y in 0..canvas.height() {
        let row: String = (0..canvas.width())
            .map(|x| if canvas.get(x, y) { '#' } else { ' ' })
            .collect();
        println!("{}", row.trim_end());
    }
    if let Some(path) = out {
        std::fs::write(&path, write_pbm(&canvas)).expect("write PBM");
        println!("wrote {path}");
    }
}
