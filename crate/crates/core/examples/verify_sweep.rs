//! The claim-level verification sweep, and what a corrupted axiom does to it.
//!
//! Run with `cargo run --release --example verify_sweep`.

use sodkit::collection::ReportOptions;
use sodkit::verify::{render_summary, theorem_level_ok, AxiomRegistry, Verifier, BS_POINT_SPLIT};

fn main() {
    let opts = ReportOptions {
        max_n: 2,
        ..Default::default()
    };
    let mut v = Verifier::new(AxiomRegistry::standard(), opts);
    let verdicts = v.sweep().expect("engine run");
    print!("{}", render_summary(&verdicts));
    println!("all theorem-level verdicts hold: {}", theorem_level_ok(&verdicts));

    let mut broken = Verifier::new(AxiomRegistry::corrupted(BS_POINT_SPLIT).unwrap(), opts);
    let verdicts = broken.sweep().expect("engine run");
    println!(
        "with {BS_POINT_SPLIT} negated: theorem-level ok = {}",
        theorem_level_ok(&verdicts)
    );
}
