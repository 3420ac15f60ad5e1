//! The chord family and its adjacent intersections, computed by Cramer's
//! rule and by the closed form, side by side.
//!
//! ```bash
//! cargo run -p envelope-circle --example envelope_intersections -- 8
//! ```

use envelope_circle::envelope::{
    chord_family, intersect_adjacent_fast, intersect_exact, normalize_adjacent_pair,
};

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be a positive integer"))
        .unwrap_or(8);
    let family = chord_family(n).expect("n >= 1");

    println!("chords:");
    for (j, c) in family.iter().enumerate() {
        println!("  k{:<3} {:?} -> {:?}", j + 1, c.y_end(), c.x_end());
    }

    println!("\nadjacent intersections (x2, y3, x4 | cramer | closed form):");
    for w in family.windows(2) {
        let pair = normalize_adjacent_pair(w[0], w[1]).unwrap();
        let exact = intersect_exact(w[0], w[1]).unwrap();
        let fast = intersect_adjacent_fast(pair).unwrap();
        println!(
            "  ({:>3}, {:>3}, {:>3}) | ({}, {}) | ({}, {}){}",
            pair.x2(),
            pair.y3(),
            pair.x4(),
            exact.x,
            exact.y,
            fast.x,
            fast.y,
            if exact == fast { "" } else { "  MISMATCH" }
        );
    }
}
