//! Rational points on symmetric powers of real Brauer–Severi varieties.
//!
//! Run with `cargo run --example rational_points`.

use sodkit::brauer::{sym_power_has_point, CsaDescriptor};

fn main() {
    for degree in [2, 4, 6] {
        for a in [
            CsaDescriptor::split(degree).unwrap(),
            CsaDescriptor::quaternionic(degree).unwrap(),
        ] {
            let row: Vec<String> = (1..degree)
                .map(|l| {
                    format!(
                        "S^{l}:{}",
                        if sym_power_has_point(&a, l).unwrap() {
                            "yes"
                        } else {
                            "no"
                        }
                    )
                })
                .collect();
            println!("{:<8} ind {}  {}", a.to_string(), a.index(), row.join(" "));
        }
    }
}
