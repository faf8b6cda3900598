//! Invariants of a finite group of algebra automorphisms: the swap on
//! `ℍ ⊗ ℍ` fixes a 10-dimensional subalgebra `ℚ × M_3(ℚ)`.
//!
//! Run with `cargo run --example fixed_subalgebra`.

use sodkit::algebra::{classify_real, fixed_subalgebra, quaternions, tensor, AlgebraAutomorphism};
use sodkit::exact::RatMatrix;

fn main() {
    let h = quaternions();
    let hh = tensor(&[&h, &h]).unwrap();
    // e_a ⊗ e_b ↦ e_b ⊗ e_a on the basis index 4a + b.
    let mut swap = RatMatrix::zeros(16, 16);
    for a in 0..4 {
        for b in 0..4 {
            swap.set(4 * b + a, 4 * a + b, sodkit::exact::rat(1));
        }
    }
    let g = AlgebraAutomorphism::from_matrix(&swap);
    let fixed = fixed_subalgebra(&hh, &[g]).expect("swap is an automorphism");
    println!("dim (H⊗H)^swap = {}", fixed.dim());
    let rep = classify_real(&fixed.algebra).unwrap();
    let fs: Vec<String> = rep.factors.iter().map(|f| f.to_string()).collect();
    println!("over R: {}", fs.join(" × "));
}
