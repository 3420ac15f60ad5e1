//! How the envelope circle compares with a midpoint-circle reference.
//!
//! ```bash
//! cargo run -p envelope-circle --example midpoint_comparison
//! ```

use envelope_circle::analysis::{compare_sets, error_report, measure, midpoint_reference};
use envelope_circle::{rasterize_circle, Algorithm, CircleSpec};

fn main() {
    println!("radius  envelope  midpoint  shared  jaccard  env.avg  mid.avg");
    for rr in [10, 20, 40, 80, 160, 320] {
        let spec = CircleSpec::new(0, 0, rr).unwrap();
        let envelope = rasterize_circle(spec, Algorithm::Octant, true).unwrap();
        let reference = midpoint_reference(0, 0, rr).unwrap();
        let cmp = compare_sets(&envelope, &reference).unwrap();
        let env = error_report(spec, Algorithm::Octant, true).unwrap();
        let mid = measure(&reference, &spec).unwrap();
        println!(
            "{rr:>6}  {:>8}  {:>8}  {:>6}  {:>7.3}  {:>7.3}  {:>7.3}",
            envelope.len(),
            reference.len(),
            cmp.both,
            cmp.jaccard,
            env.average_error_px,
            mid.average
        );
    }
}
