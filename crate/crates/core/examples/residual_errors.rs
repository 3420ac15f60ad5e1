//! Residual error per radius next to the published figures, for both the
//! corrected and the uncorrected pipeline.
//!
//! ```bash
//! cargo run -p envelope-circle --example residual_errors
//! ```

use envelope_circle::analysis::{error_growth, format_table, TableRow};
use envelope_circle::{Algorithm, CircleSpec};

fn main() {
    for correct in [true, false] {
        println!(
            "octant algorithm, {}",
            if correct { "corrected" } else { "uncorrected" }
        );
        let rows: Vec<TableRow> = [20, 40, 60, 80, 100]
            .into_iter()
            .map(|rr| {
                TableRow::compute(
                    CircleSpec::new(0, 0, rr).unwrap(),
                    Algorithm::Octant,
                    correct,
                )
                .unwrap()
            })
            .collect();
        println!("{}", format_table(&rows));
    }

    println!("uncorrected average error by radius:");
    for (small, large) in [(100, 1000), (1000, 10_000)] {
        let g = error_growth(small, large, Algorithm::Octant).unwrap();
        println!(
            "  rr={small:>5}: {:.3}   rr={large:>5}: {:.3}",
            g.small.average_error_px, g.large.average_error_px
        );
    }
}
