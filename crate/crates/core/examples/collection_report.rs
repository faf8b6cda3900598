//! The weak exceptional collection of the `S_n`-equivariant category of
//! `X^n`, with rank accounting and the rdim verdict.
//!
//! Run with `cargo run --release --example collection_report -- 2 quaternion 2`.

use sodkit::collection::{build_report, render_table, VarietyClass};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let degree = args.first().map_or(2, |s| s.parse().expect("degree"));
    let class = match args.get(1).map(String::as_str) {
        None | Some("quaternion") => VarietyClass::Quaternion,
        Some("split") => VarietyClass::Split,
        Some(other) => panic!("unknown class {other}"),
    };
    let n = args.get(2).map_or(2, |s| s.parse().expect("n"));
    let rep = build_report(degree, class.brauer(), n).expect("engine run");
    print!("{}", render_table(&rep));
    for g in &rep.alpha_groups {
        if g.naive_blocks != g.q_r + g.q_h + g.q_c {
            println!(
                "alpha {}: {} naive blocks identified to {} ({:?})",
                g.alpha,
                g.naive_blocks,
                g.q_r + g.q_h + g.q_c,
                g.rule
            );
        }
    }
}
