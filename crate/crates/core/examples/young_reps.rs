//! Young's natural representation of symmetric groups over ℚ, and the
//! Young subgroups that stabilize multi-indices.
//!
//! Run with `cargo run --example young_reps`.

use sodkit::symrep::{
    check_coxeter, complex_irrep_count, partitions, real_irreps, stabilizer, young_natural_matrices, MultiIndex,
};

fn main() {
    for lambda in partitions(4) {
        let gens = young_natural_matrices(&lambda);
        println!(
            "S4 irrep {lambda}: dimension {}, Coxeter relations {}",
            lambda.dimension(),
            if check_coxeter(&gens) { "hold" } else { "FAIL" }
        );
    }
    let alpha = MultiIndex::new(vec![0, 0, 1, 2, 2]);
    let h = stabilizer(&alpha).unwrap();
    println!("stabilizer of {alpha} is {h}, order {}", h.order());
    let irreps: Vec<String> = real_irreps(&h).iter().map(|r| r.to_string()).collect();
    println!("irreps ({}): {}", complex_irrep_count(&h), irreps.join(", "));
}
