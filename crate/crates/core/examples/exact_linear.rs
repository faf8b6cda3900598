//! Exact building blocks: factorization over ℚ, Sturm root counts, the
//! Sylvester signature of a symmetric matrix, minimal polynomials.
//!
//! Run with `cargo run --example exact_linear`.

use sodkit::exact::{count_real_roots, factor_over_q, RatMatrix, RatPoly};

fn main() {
    // (x^2 - 2)(x^2 + 1)(x - 3)^2, coefficients from degree 0 up.
    let p = RatPoly::from_i64(&[-18, 12, -11, 6, 8, -6, 1]);
    println!("p = {p}");
    for (f, e) in factor_over_q(&p).expect("nonzero") {
        println!(
            "  factor {f}  ^{e}  real roots {}",
            count_real_roots(&f).expect("nonzero")
        );
    }

    let gram = RatMatrix::from_i64(&[&[2, 1, 0], &[1, -1, 0], &[0, 0, 0]]);
    let (pos, neg, zero) = gram.signature().expect("symmetric");
    println!("signature of [[2,1,0],[1,-1,0],[0,0,0]]: +{pos} -{neg} zero {zero}");

    let rot = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
    println!(
        "minimal polynomial of a quarter turn: {}",
        rot.minimal_polynomial().expect("square")
    );
}
