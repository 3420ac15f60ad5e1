//! Shift-subtract division and the half-threshold rounding rule.
//!
//! ```bash
//! cargo run -p envelope-circle --example binary_division -- 31 10
//! ```

use envelope_circle::intmath::{div_round_half, long_divide};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("expected non-negative integers"))
        .collect();
    let pairs = if args.len() == 2 {
        vec![(args[0], args[1])]
    } else {
        vec![(31, 10), (1023, 32), (7, 2), (1980, 50), (25, 45)]
    };

    for (n, d) in pairs {
        match long_divide(n, d) {
            Ok(res) => {
                let rounded = div_round_half(n, d).unwrap();
                let rule = if res.remainder << 1 < d {
                    "floor"
                } else {
                    "ceiling"
                };
                println!(
                    "{n:>6} / {d:<4} = {:b}b r {:b}b  ->  {rounded} ({rule}; remainder << 1 = {} vs divisor {d})",
                    res.quotient,
                    res.remainder,
                    res.remainder << 1
                );
            }
            Err(e) => println!("{n} / {d}: {e}"),
        }
    }
}
