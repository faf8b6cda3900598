//! Cross-cell block identification constrained by the complex rank.
//!
//! Within one α, blocks of different cells may be the same indecomposable
//! object. Identified blocks share their factor kind. For each α we choose
//! class counts `q_R, q_H, q_C` with `q_R + q_H + 2 q_C = t_α` (the number of
//! complex irreducibles of the stabilizer), minimizing `q_R + q_H + q_C`.

use serde::{Deserialize, Serialize};

use crate::algebra::{RealKind, RealSimpleFactor};

/// Which blocks are allowed to be identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DedupRule {
    /// Only equal factors of cells whose invariant algebras coincide.
    EqualAlgebra,
    /// Any two blocks of the same kind within one α.
    SameKind,
    /// No consistent identification exists; naive counts are kept.
    Infeasible,
}

/// One cell of an α group as seen by the solver.
#[derive(Debug, Clone)]
pub struct DedupCell {
    /// Cells with equal ids have identical invariant algebras.
    pub algebra_id: usize,
    pub factors: Vec<RealSimpleFactor>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DedupOutcome {
    pub q_r: usize,
    pub q_h: usize,
    pub q_c: usize,
    pub ambiguous: bool,
    pub rule: DedupRule,
}

impl DedupOutcome {
    pub fn total(&self) -> usize {
        self.q_r + self.q_h + self.q_c
    }
}

/// `(kind, lo, hi)`: the number of classes in a pool lies in `lo..=hi`.
type Pool = (RealKind, usize, usize);

fn count_kind(factors: &[RealSimpleFactor], kind: RealKind) -> usize {
    factors.iter().filter(|f| f.kind == kind).count()
}

fn equal_algebra_pools(cells: &[DedupCell]) -> Vec<Pool> {
    let mut ids: Vec<usize> = cells.iter().map(|c| c.algebra_id).collect();
    ids.sort_unstable();
    ids.dedup();
    let mut pools = Vec::new();
    for id in ids {
        let group: Vec<&DedupCell> = cells.iter().filter(|c| c.algebra_id == id).collect();
        let g = group.len();
        let mut distinct = group[0].factors.clone();
        distinct.dedup();
        for f in distinct {
            let cnt = group[0].factors.iter().filter(|x| **x == f).count();
            pools.push((f.kind, cnt, g * cnt));
        }
    }
    pools
}

fn same_kind_pools(cells: &[DedupCell]) -> Vec<Pool> {
    [RealKind::R, RealKind::C, RealKind::H]
        .into_iter()
        .map(|k| {
            let counts = cells.iter().map(|c| count_kind(&c.factors, k));
            let lo = counts.clone().max().unwrap_or(0);
            (k, lo, counts.sum())
        })
        .filter(|(_, _, hi)| *hi > 0)
        .collect()
}

fn bounds(pools: &[Pool], kind: RealKind) -> (usize, usize) {
    pools
        .iter()
        .filter(|(k, _, _)| *k == kind)
        .fold((0, 0), |(l, u), (_, lo, hi)| (l + lo, u + hi))
}

fn solve(pools: &[Pool], target: usize, rule: DedupRule) -> Option<DedupOutcome> {
    let (lr, ur) = bounds(pools, RealKind::R);
    let (lh, uh) = bounds(pools, RealKind::H);
    let (lc, uc) = bounds(pools, RealKind::C);
    // Largest q_C first: every C class stands for two complex objects.
    for q_c in (lc..=uc).rev() {
        let Some(rest) = target.checked_sub(2 * q_c) else {
            continue;
        };
        let lo_r = lr.max(rest.saturating_sub(uh));
        let hi_r = ur.min(rest.saturating_sub(lh));
        if rest < lr + lh || rest > ur + uh || lo_r > hi_r {
            continue;
        }
        return Some(DedupOutcome {
            q_r: lo_r,
            q_h: rest - lo_r,
            q_c,
            ambiguous: lo_r != hi_r,
            rule,
        });
    }
    None
}

/// Identification for one α group with complex target `target`.
pub fn dedup_alpha(cells: &[DedupCell], target: usize) -> DedupOutcome {
    if let Some(o) = solve(&equal_algebra_pools(cells), target, DedupRule::EqualAlgebra) {
        return o;
    }
    if let Some(o) = solve(&same_kind_pools(cells), target, DedupRule::SameKind) {
        return o;
    }
    let all: Vec<RealSimpleFactor> = cells.iter().flat_map(|c| c.factors.iter().copied()).collect();
    DedupOutcome {
        q_r: count_kind(&all, RealKind::R),
        q_h: count_kind(&all, RealKind::H),
        q_c: count_kind(&all, RealKind::C),
        ambiguous: true,
        rule: DedupRule::Infeasible,
    }
}
