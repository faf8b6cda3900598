use std::fmt::Write;

use super::CollectionReport;

/// Plain-text table, one row per block, followed by the rank summary.
pub fn render_table(rep: &CollectionReport) -> String {
    let header = ["alpha", "stabilizer", "irrep", "dim", "j", "End", "mult"];
    let mut rows: Vec<[String; 7]> = Vec::new();
    for c in &rep.cells {
        for (j, f) in c.factors.iter().enumerate() {
            rows.push([
                c.alpha.to_string(),
                c.stabilizer_label(),
                c.irrep_label(),
                c.algebra_dim.to_string(),
                (j + 1).to_string(),
                f.kind.to_string(),
                f.size.to_string(),
            ]);
        }
    }
    let mut widths = header.map(|h| h.chars().count());
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    let _ = writeln!(out, "{}", line(&header.map(String::from)));
    for r in &rows {
        let _ = writeln!(out, "{}", line(r));
    }
    let _ = writeln!(
        out,
        "\nX: degree {} {}, n = {}",
        rep.input.degree, rep.input.class, rep.input.n
    );
    let _ = writeln!(out, "r = {}, d = {}", rep.r, rep.d);
    let _ = writeln!(
        out,
        "rank: naive {}, complex {}, consistent {}{}",
        rep.rank_real_naive,
        rep.rank_complex,
        rep.rank_consistent,
        if rep.dedup_ambiguous { " (ambiguous)" } else { "" }
    );
    let e = &rep.end_multiset_consistent;
    let _ = writeln!(out, "End multiset (consistent): R x{}, C x{}, H x{}", e.r, e.c, e.h);
    let _ = writeln!(out, "rdim = {}", rep.rdim);
    out
}
