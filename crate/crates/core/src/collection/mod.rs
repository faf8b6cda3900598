//! The weak exceptional collection of the equivariant derived category of
//! `X^n` for a real Brauer–Severi variety `X`: base collections, cells
//! `(α, ρ)`, their invariant endomorphism algebras, block decomposition,
//! rank accounting and the rdim verdict.

mod dedup;
mod invariant;
mod render;

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{classify_real, classify_real_oracle, AlgebraError, RealKind, RealSimpleFactor};
use crate::brauer::{BrauerClass, BrauerError, Motive};
use crate::exact::sparse::SparseVec;
use crate::symrep::{
    complex_irrep_count, real_irreps, stabilizer, IrrepDescriptor, MultiIndex, Partition, SymrepError, YoungSubgroup,
};

pub use dedup::{dedup_alpha, DedupCell, DedupOutcome, DedupRule};
pub use invariant::{cell_generators, cell_tensor_algebra, invariant_algebra};
pub use render::render_table;

pub const DEFAULT_MAX_N: usize = 4;
pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollectionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cell {alpha} {irrep}: {source}")]
    Cell {
        alpha: MultiIndex,
        irrep: String,
        source: AlgebraError,
    },
    #[error("cell {alpha} {irrep}: classifiers disagree ({primary} vs {oracle})")]
    OracleMismatch {
        alpha: MultiIndex,
        irrep: String,
        primary: String,
        oracle: String,
    },
    #[error("rdim of an empty factor list")]
    EmptyFactors,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symrep(#[from] SymrepError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
}

impl CollectionError {
    /// Errors caused by the request rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(self, CollectionError::InvalidInput(_) | CollectionError::Brauer(_))
    }
}

/// Endomorphism algebra of a base object: ℚ standing for ℝ, or `ℍ_ℚ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndTag {
    Q,
    #[serde(rename = "H_Q")]
    HQ,
}

impl EndTag {
    pub fn algebra_dim(self) -> usize {
        match self {
            EndTag::Q => 1,
            EndTag::HQ => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseObject {
    pub index: usize,
    pub end_algebra: EndTag,
    pub label: String,
}

/// Brauer class of `X` as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarietyClass {
    Split,
    Quaternion,
}

impl VarietyClass {
    pub fn brauer(self) -> BrauerClass {
        match self {
            VarietyClass::Split => BrauerClass::SPLIT,
            VarietyClass::Quaternion => BrauerClass::HAMILTON,
        }
    }

    pub fn from_brauer(c: BrauerClass) -> Result<Self, CollectionError> {
        match (c.modulus(), c.value()) {
            (2, 0) => Ok(VarietyClass::Split),
            (2, 1) => Ok(VarietyClass::Quaternion),
            _ => Err(CollectionError::InvalidInput(format!(
                "class {c} is not a real Brauer class"
            ))),
        }
    }
}

impl fmt::Display for VarietyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VarietyClass::Split => "split",
            VarietyClass::Quaternion => "quaternion",
        })
    }
}

/// Full weak exceptional collection of the Brauer–Severi variety of a
/// central simple algebra of the given degree and class.
///
/// Split: `O, O(1), …, O(degree-1)`, all with End ℝ. Quaternionic of degree
/// `2r`: `O, V₁, O(2), V₁⊗O(2), …`, alternating End ℝ and ℍ.
pub fn base_collection(degree: usize, cls: BrauerClass) -> Result<Vec<BaseObject>, CollectionError> {
    if degree == 0 {
        return Err(CollectionError::InvalidInput("degree must be positive".into()));
    }
    let out = match VarietyClass::from_brauer(cls)? {
        VarietyClass::Split => (0..degree)
            .map(|i| BaseObject {
                index: i,
                end_algebra: EndTag::Q,
                label: if i == 0 { "O".into() } else { format!("O({i})") },
            })
            .collect(),
        VarietyClass::Quaternion => {
            if !degree.is_multiple_of(2) {
                return Err(CollectionError::InvalidInput(format!(
                    "a quaternionic class needs even degree, got {degree}"
                )));
            }
            (0..degree)
                .map(|i| {
                    let twist = if i / 2 == 0 {
                        String::new()
                    } else {
                        format!("O({})", 2 * (i / 2))
                    };
                    let (end_algebra, label) = if i % 2 == 0 {
                        (EndTag::Q, if twist.is_empty() { "O".to_string() } else { twist })
                    } else if twist.is_empty() {
                        (EndTag::HQ, "V₁".to_string())
                    } else {
                        (EndTag::HQ, format!("V₁⊗{twist}"))
                    };
                    BaseObject {
                        index: i,
                        end_algebra,
                        label,
                    }
                })
                .collect()
        }
    };
    Ok(out)
}

/// A pair `(α, ρ)`: non-decreasing multi-index and an irrep of its stabilizer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cell {
    pub alpha: MultiIndex,
    pub stab: YoungSubgroup,
    pub irrep: IrrepDescriptor,
}

/// Non-decreasing `α ∈ {0..base_size-1}^n` in lexicographic order.
pub fn nondecreasing_indices(n: usize, base_size: usize) -> Vec<MultiIndex> {
    fn go(n: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if cur.len() == n {
            out.push(MultiIndex(cur.clone()));
            return;
        }
        for v in lo..hi {
            cur.push(v);
            go(n, v, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, base_size, &mut Vec::new(), &mut out);
    out
}

/// All cells, ordered by ⊳ on α and then by the canonical irrep order.
pub fn enumerate_cells(n: usize, base_size: usize) -> Vec<Cell> {
    nondecreasing_indices(n, base_size)
        .into_iter()
        .flat_map(|alpha| {
            let stab = stabilizer(&alpha).expect("generated indices are non-decreasing");
            real_irreps(&stab).into_iter().map(move |irrep| Cell {
                alpha: alpha.clone(),
                stab: stab.clone(),
                irrep,
            })
        })
        .collect()
}

/// Number of exceptional objects after base change to ℂ.
pub fn complex_rank(n: usize, base_size: usize) -> usize {
    nondecreasing_indices(n, base_size)
        .iter()
        .map(|a| complex_irrep_count(&stabilizer(a).expect("non-decreasing")))
        .sum()
}

/// `0` iff no ℍ-type factor is present.
pub fn rdim_of_factors(kinds: &[RealKind]) -> Result<u8, CollectionError> {
    if kinds.is_empty() {
        return Err(CollectionError::EmptyFactors);
    }
    Ok(u8::from(kinds.contains(&RealKind::H)))
}

/// An indecomposable summand `T_j` with multiplicity `m_j` in a cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub alpha: MultiIndex,
    pub irrep: String,
    /// 1-based position within the cell.
    pub factor_index: usize,
    pub end_type: RealKind,
    pub multiplicity: usize,
    pub division_dim: usize,
}

fn blocks_of(alpha: &MultiIndex, irrep: &str, factors: &[RealSimpleFactor]) -> Vec<Block> {
    factors
        .iter()
        .enumerate()
        .map(|(j, f)| Block {
            alpha: alpha.clone(),
            irrep: irrep.to_string(),
            factor_index: j + 1,
            end_type: f.kind,
            multiplicity: f.size,
            division_dim: f.kind.division_dim(),
        })
        .collect()
}

#[derive(Debug, Clone)]
struct CellOutcome {
    algebra_dim: usize,
    tensor_dim: usize,
    basis: Vec<SparseVec>,
    factors: Vec<RealSimpleFactor>,
}

fn decompose(base: &[BaseObject], cell: &Cell, seed: u64, cross_check: bool) -> Result<CellOutcome, CollectionError> {
    let wrap = |source: AlgebraError| CollectionError::Cell {
        alpha: cell.alpha.clone(),
        irrep: cell.irrep.to_string(),
        source,
    };
    let sub = invariant::invariant_algebra(base, cell).map_err(|e| match e {
        CollectionError::Algebra(a) => wrap(a),
        other => other,
    })?;
    let primary = classify_real(&sub.algebra).map_err(wrap)?;
    if cross_check {
        let oracle = classify_real_oracle(&sub.algebra, seed).map_err(wrap)?;
        if oracle.factors != primary.factors {
            let show = |v: &[RealSimpleFactor]| v.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",");
            return Err(CollectionError::OracleMismatch {
                alpha: cell.alpha.clone(),
                irrep: cell.irrep.to_string(),
                primary: show(&primary.factors),
                oracle: show(&oracle.factors),
            });
        }
    }
    let tensor_dim = cell
        .alpha
        .entries()
        .iter()
        .map(|&a| base[a].end_algebra.algebra_dim())
        .product::<usize>()
        * cell.irrep.dimension
        * cell.irrep.dimension;
    Ok(CellOutcome {
        algebra_dim: sub.dim(),
        tensor_dim,
        basis: sub.basis().to_vec(),
        factors: primary.factors,
    })
}

/// Classifies the invariant algebra of one cell (cross-checked against the
/// independent classifier) and lists its blocks.
pub fn decompose_cell(base: &[BaseObject], cell: &Cell) -> Result<Vec<Block>, CollectionError> {
    let out = decompose(base, cell, 0, true)?;
    Ok(blocks_of(&cell.alpha, &cell.irrep.to_string(), &out.factors))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub seed: u64,
    pub max_n: usize,
    pub max_degree: usize,
    /// Run the idempotent oracle on every cell.
    pub cross_check: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 0,
            max_n: DEFAULT_MAX_N,
            max_degree: DEFAULT_MAX_DEGREE,
            cross_check: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInput {
    pub degree: usize,
    pub class: VarietyClass,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub alpha: MultiIndex,
    /// Block sizes of the stabilizer.
    pub stabilizer: Vec<usize>,
    /// One partition per stabilizer block.
    pub irrep: Vec<Partition>,
    pub irrep_dim: usize,
    pub algebra_dim: usize,
    pub factors: Vec<RealSimpleFactor>,
}

impl CellReport {
    pub fn irrep_label(&self) -> String {
        self.irrep.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("x")
    }

    pub fn stabilizer_label(&self) -> String {
        self.stabilizer
            .iter()
            .map(|m| format!("S{m}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Identification summary for the cells sharing one α.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaGroup {
    pub alpha: MultiIndex,
    /// Complex irreducibles of the stabilizer.
    pub target: usize,
    pub naive_blocks: usize,
    pub q_r: usize,
    pub q_h: usize,
    pub q_c: usize,
    pub rule: DedupRule,
    pub ambiguous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndCounts {
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "H")]
    pub h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionReport {
    pub input: ReportInput,
    pub base: Vec<BaseObject>,
    pub cells: Vec<CellReport>,
    /// Naive count of ℝ- and ℍ-type blocks.
    pub r: usize,
    /// Naive count of ℂ-type blocks.
    pub d: usize,
    pub rank_real_naive: usize,
    pub rank_complex: usize,
    pub rank_consistent: usize,
    pub r_consistent: usize,
    pub d_consistent: usize,
    pub dedup_ambiguous: bool,
    /// End kinds of the identified blocks.
    pub end_multiset_consistent: EndCounts,
    pub alpha_groups: Vec<AlphaGroup>,
    pub rdim: u8,
    /// One class per naive ℝ/ℍ block; ℂ blocks are counted by `d`.
    pub motive: Motive,
}

impl CollectionReport {
    /// Blocks in report order: cells under ⊳, then factor order.
    pub fn blocks(&self) -> Vec<Block> {
        self.cells
            .iter()
            .flat_map(|c| blocks_of(&c.alpha, &c.irrep_label(), &c.factors))
            .collect()
    }

    pub fn naive_kinds(&self) -> Vec<RealKind> {
        self.cells
            .iter()
            .flat_map(|c| c.factors.iter().map(|f| f.kind))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct CellKey {
    tags: Vec<EndTag>,
    mults: Vec<usize>,
    partitions: Vec<Partition>,
}

fn validate(degree: usize, cls: BrauerClass, n: usize, opts: &ReportOptions) -> Result<(), CollectionError> {
    if n == 0 || n > opts.max_n {
        return Err(CollectionError::InvalidInput(format!(
            "n must be in 1..={}, got {n}",
            opts.max_n
        )));
    }
    if degree == 0 || degree > opts.max_degree {
        return Err(CollectionError::InvalidInput(format!(
            "degree must be in 1..={}, got {degree}",
            opts.max_degree
        )));
    }
    VarietyClass::from_brauer(cls)?;
    Ok(())
}

pub fn build_report(degree: usize, cls: BrauerClass, n: usize) -> Result<CollectionReport, CollectionError> {
    build_report_with(degree, cls, n, &ReportOptions::default())
}

pub fn build_report_with(
    degree: usize,
    cls: BrauerClass,
    n: usize,
    opts: &ReportOptions,
) -> Result<CollectionReport, CollectionError> {
    validate(degree, cls, n, opts)?;
    let base = base_collection(degree, cls)?;
    let cells = enumerate_cells(n, base.len());

    // Cells with the same End tags, stabilizer shape and irrep have the same
    // invariant algebra; compute each once, in parallel, keyed deterministically.
    let key_of = |c: &Cell| CellKey {
        tags: c.alpha.entries().iter().map(|&a| base[a].end_algebra).collect(),
        mults: c.stab.multiplicities(),
        partitions: c.irrep.partitions.clone(),
    };
    let mut unique: Vec<(CellKey, &Cell)> = Vec::new();
    let mut seen: HashMap<CellKey, usize> = HashMap::new();
    for c in &cells {
        let k = key_of(c);
        if !seen.contains_key(&k) {
            seen.insert(k.clone(), unique.len());
            unique.push((k, c));
        }
    }
    let results: Vec<Result<CellOutcome, CollectionError>> = unique
        .par_iter()
        .map(|(_, c)| decompose(&base, c, opts.seed, opts.cross_check))
        .collect();
    let mut outcomes = Vec::with_capacity(results.len());
    for r in results {
        outcomes.push(r?);
    }
    let outcome_of = |c: &Cell| &outcomes[seen[&key_of(c)]];

    let cell_reports: Vec<CellReport> = cells
        .iter()
        .map(|c| {
            let o = outcome_of(c);
            CellReport {
                alpha: c.alpha.clone(),
                stabilizer: c.stab.multiplicities(),
                irrep: c.irrep.partitions.clone(),
                irrep_dim: c.irrep.dimension,
                algebra_dim: o.algebra_dim,
                factors: o.factors.clone(),
            }
        })
        .collect();

    let mut alpha_groups = Vec::new();
    let mut start = 0;
    while start < cells.len() {
        let alpha = &cells[start].alpha;
        let end = start + cells[start..].iter().take_while(|c| &c.alpha == alpha).count();
        let group = &cells[start..end];
        let mut reps: Vec<&CellOutcome> = Vec::new();
        let dedup_cells: Vec<DedupCell> = group
            .iter()
            .map(|c| {
                let o = outcome_of(c);
                let id = match reps
                    .iter()
                    .position(|r| r.tensor_dim == o.tensor_dim && r.basis == o.basis)
                {
                    Some(i) => i,
                    None => {
                        reps.push(o);
                        reps.len() - 1
                    }
                };
                DedupCell {
                    algebra_id: id,
                    factors: o.factors.clone(),
                }
            })
            .collect();
        let target = complex_irrep_count(&group[0].stab);
        let out = dedup_alpha(&dedup_cells, target);
        alpha_groups.push(AlphaGroup {
            alpha: alpha.clone(),
            target,
            naive_blocks: dedup_cells.iter().map(|c| c.factors.len()).sum(),
            q_r: out.q_r,
            q_h: out.q_h,
            q_c: out.q_c,
            rule: out.rule,
            ambiguous: out.ambiguous,
        });
        start = end;
    }

    let kinds: Vec<RealKind> = cell_reports
        .iter()
        .flat_map(|c| c.factors.iter().map(|f| f.kind))
        .collect();
    let d = kinds.iter().filter(|k| **k == RealKind::C).count();
    let r = kinds.len() - d;
    let end_counts = EndCounts {
        r: alpha_groups.iter().map(|g| g.q_r).sum(),
        c: alpha_groups.iter().map(|g| g.q_c).sum(),
        h: alpha_groups.iter().map(|g| g.q_h).sum(),
    };
    let motive = Motive::from_values(
        2,
        kinds
            .iter()
            .filter(|k| **k != RealKind::C)
            .map(|k| u64::from(*k == RealKind::H)),
    );
    Ok(CollectionReport {
        input: ReportInput {
            degree,
            class: VarietyClass::from_brauer(cls)?,
            n,
        },
        r,
        d,
        rank_real_naive: kinds.len(),
        rank_complex: complex_rank(n, base.len()),
        rank_consistent: end_counts.r + end_counts.c + end_counts.h,
        r_consistent: end_counts.r + end_counts.h,
        d_consistent: end_counts.c,
        dedup_ambiguous: alpha_groups.iter().any(|g| g.ambiguous),
        end_multiset_consistent: end_counts,
        alpha_groups,
        rdim: rdim_of_factors(&kinds)?,
        motive,
        cells: cell_reports,
        base,
    })
}
