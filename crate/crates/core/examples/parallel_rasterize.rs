//! Split the arc loop across worker threads and check the result does not
//! depend on how many there are.
//!
//! ```bash
//! cargo run --release -p envelope-circle --example parallel_rasterize -- 200000
//! ```

use std::time::Instant;

use envelope_circle::{rasterize_circle_parallel, Algorithm, CircleSpec};

fn main() {
    let radius: i64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("radius must be an integer"))
        .unwrap_or(100_000);
    let spec = CircleSpec::new(0, 0, radius).expect("valid radius");

    let mut baseline = None;
    for workers in [1, 2, 4, 8, 16] {
        let start = Instant::now();
        let set = rasterize_circle_parallel(spec, Algorithm::Octant, true, workers).unwrap();
        let elapsed = start.elapsed();
        let same = match &baseline {
            None => {
                baseline = Some(set.clone());
                true
            }
            Some(b) => *b == set,
        };
        println!(
            "{workers:>2} workers: {:>8} pixels in {elapsed:>10.2?}  identical to 1 worker: {same}",
            set.len()
        );
    }
}
