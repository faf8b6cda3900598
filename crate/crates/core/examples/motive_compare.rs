//! Deciding isomorphism of direct sums of noncommutative motives of central
//! simple algebras by comparing Brauer-class multisets of every power.
//!
//! Run with `cargo run --example motive_compare`.

use sodkit::brauer::{first_failing_power, motive_cancel, motive_iso, Motive};

fn main() {
    let m6 = |v: &[u64]| Motive::from_values(6, v.iter().copied());
    let x = m6(&[1, 5]);
    let y = m6(&[5, 1]);
    let z = m6(&[2, 4]);
    println!("{:?} ≅ {:?}: {}", x.values(), y.values(), motive_iso(&x, &y));
    println!(
        "{:?} vs {:?}: first failing power {:?}",
        x.values(),
        z.values(),
        first_failing_power(&x, &z)
    );
    // Cancelling a common summand preserves the answer.
    let c = m6(&[3]);
    println!(
        "cancel {:?}: {}",
        c.values(),
        motive_cancel(&x.direct_sum(&c), &y.direct_sum(&c), &c)
    );
}
