//! Wedderburn decomposition over ℝ of ℚ-algebras given by structure
//! constants, through both independent classifiers.
//!
//! Run with `cargo run --example classify_algebra`.

use sodkit::algebra::{
    classify_real, classify_real_oracle, matrix_algebra, polynomial_quotient, quaternions, tensor, AlgebraJson,
    QAlgebra,
};
use sodkit::exact::RatPoly;

fn show(name: &str, a: &QAlgebra) {
    let primary = classify_real(a).expect("semisimple with supported center");
    let oracle = classify_real_oracle(a, 0).expect("oracle succeeds");
    let fs: Vec<String> = primary.factors.iter().map(|f| f.to_string()).collect();
    println!("{name:<12} dim {:>2}  {}", a.dim(), fs.join(" × "));
    assert_eq!(primary.factors, oracle.factors, "classifiers disagree on {name}");
}

fn main() {
    let h = quaternions();
    let m2 = matrix_algebra(2);
    show("H_Q", &h);
    show("M_2(Q)", &m2);
    show("H⊗H", &tensor(&[&h, &h]).unwrap());
    show("M_2⊗H", &tensor(&[&m2, &h]).unwrap());
    show("Q(i)", &polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap());
    show(
        "Q[x]/x⁴+1",
        &polynomial_quotient(&RatPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap(),
    );
    show(
        "Q[x]/x²-1",
        &polynomial_quotient(&RatPoly::from_i64(&[-1, 0, 1])).unwrap(),
    );

    // The wire format accepted by `sodkit classify-algebra`.
    let wire = serde_json::to_string(&AlgebraJson::from(
        &polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap(),
    ))
    .unwrap();
    println!("Q(i) as JSON: {wire}");
}
