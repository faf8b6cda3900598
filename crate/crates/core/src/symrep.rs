//! Multi-indices under the symmetric group, their stabilizers (Young
//! subgroups), and exact rational irreducible representations of those
//! stabilizers via Young's natural representation.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::sparse::Rref;
use crate::exact::{RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymrepError {
    #[error("multi-indices have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("multi-index {0} is not non-decreasing")]
    NotNondecreasing(MultiIndex),
    #[error("irrep does not match the subgroup: {0}")]
    InvalidIrrep(String),
    #[error("representation matrices violate the Coxeter relations")]
    CoxeterViolation,
}

/// `α = (α_1, …, α_n)` with entries indexing a base collection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `σ·α` with `(σ·α)_{σ(i)} = α_i`.
    pub fn permute(&self, sigma: &[usize]) -> MultiIndex {
        let mut out = vec![0; self.0.len()];
        for (i, &s) in sigma.iter().enumerate() {
            out[s] = self.0[i];
        }
        MultiIndex(out)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Non-decreasing representative of the orbit of `α`.
pub fn nd(alpha: &MultiIndex) -> MultiIndex {
    let mut v = alpha.0.clone();
    v.sort_unstable();
    MultiIndex(v)
}

/// The total order ⊳: first by `nd` lexicographically, then by `α` itself.
/// `Less` means `α` comes first.
pub fn compare(alpha: &MultiIndex, beta: &MultiIndex) -> Result<Ordering, SymrepError> {
    if alpha.len() != beta.len() {
        return Err(SymrepError::LengthMismatch(alpha.len(), beta.len()));
    }
    Ok(nd(alpha).cmp(&nd(beta)).then_with(|| alpha.cmp(beta)))
}

/// `∏_v S_{m_v}` permuting the positions of each run of equal values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YoungSubgroup {
    /// `(value, multiplicity)` in increasing value order.
    pub blocks: Vec<(usize, usize)>,
}

impl YoungSubgroup {
    pub fn degree(&self) -> usize {
        self.blocks.iter().map(|(_, m)| m).sum()
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|(_, m)| factorial(*m)).product()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(|(_, m)| *m).collect()
    }

    /// First position of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.blocks
            .iter()
            .map(|(_, m)| {
                let o = off;
                off += m;
                o
            })
            .collect()
    }

    /// Adjacent transpositions inside each block, in position order.
    pub fn generators(&self) -> Vec<Transposition> {
        let mut out = Vec::new();
        for (b, ((_, m), off)) in self.blocks.iter().zip(self.offsets()).enumerate() {
            for i in 0..m.saturating_sub(1) {
                out.push(Transposition {
                    block: b,
                    left: off + i,
                });
            }
        }
        out
    }
}

impl fmt::Display for YoungSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|(_, m)| format!("S{m}")).collect();
        f.write_str(&parts.join("x"))
    }
}

/// The transposition of positions `left` and `left + 1`, both in `block`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transposition {
    pub block: usize,
    pub left: usize,
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

pub fn stabilizer(alpha: &MultiIndex) -> Result<YoungSubgroup, SymrepError> {
    if !alpha.is_nondecreasing() {
        return Err(SymrepError::NotNondecreasing(alpha.clone()));
    }
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for &v in alpha.entries() {
        match blocks.last_mut() {
            Some((last, m)) if *last == v => *m += 1,
            _ => blocks.push((v, 1)),
        }
    }
    Ok(YoungSubgroup { blocks })
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|p| *p > 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Hook-length formula.
    pub fn dimension(&self) -> u128 {
        let n = self.size();
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = self.0[r + 1..].iter().filter(|l| **l > c).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(n) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|l| **l > c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `m`, largest first: `(3), (2,1), (1,1,1)`.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// An irreducible representation of a Young subgroup: one partition per block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepDescriptor {
    pub partitions: Vec<Partition>,
    pub dimension: usize,
}

impl IrrepDescriptor {
    pub fn new(partitions: Vec<Partition>) -> Self {
        let dimension = partitions.iter().map(|p| p.dimension() as usize).product();
        IrrepDescriptor { partitions, dimension }
    }

    pub fn is_trivial(&self) -> bool {
        self.partitions.iter().all(|p| p.0.len() <= 1)
    }
}

impl fmt::Display for IrrepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partitions.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

/// All irreducibles over ℚ (equivalently ℝ) in canonical order: lexicographic
/// on partition tuples, each block's partitions largest first.
pub fn real_irreps(h: &YoungSubgroup) -> Vec<IrrepDescriptor> {
    let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
    for (_, m) in &h.blocks {
        let ps = partitions(*m);
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                ps.iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p.clone());
                    t
                })
            })
            .collect();
    }
    tuples.into_iter().map(IrrepDescriptor::new).collect()
}

/// Number of complex irreducibles, from the partition-count recurrence
/// rather than from enumerating descriptors.
pub fn complex_irrep_count(h: &YoungSubgroup) -> usize {
    h.blocks.iter().map(|(_, m)| partition_count(*m)).product()
}

/// `p(m)` via Euler's pentagonal number recurrence.
pub fn partition_count(m: usize) -> usize {
    let mut p = vec![0i64; m + 1];
    p[0] = 1;
    for n in 1..=m {
        let mut acc = 0i64;
        for k in 1.. {
            let k = k as i64;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            acc += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                acc += sign * p[n - g2];
            }
        }
        p[n] = acc;
    }
    p[m] as usize
}

/// Standard Young tableaux of shape `λ` as `row_of[label]`, in lexicographic
/// order of that vector.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<usize>> {
    fn go(lambda: &[usize], filled: &mut Vec<usize>, row_of: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row_of.len() == lambda.iter().sum::<usize>() {
            out.push(row_of.clone());
            return;
        }
        for r in 0..lambda.len() {
            if filled[r] < lambda[r] && (r == 0 || filled[r - 1] > filled[r]) {
                filled[r] += 1;
                row_of.push(r);
                go(lambda, filled, row_of, out);
                row_of.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&lambda.0, &mut vec![0; lambda.0.len()], &mut Vec::new(), &mut out);
    out
}

/// Tableau as its grid of labels, `grid[row][col]`, from `row_of`.
fn grid(lambda: &Partition, row_of: &[usize]) -> Vec<Vec<usize>> {
    let mut g: Vec<Vec<usize>> = lambda.0.iter().map(|l| Vec::with_capacity(*l)).collect();
    for (label, &r) in row_of.iter().enumerate() {
        g[r].push(label);
    }
    g
}

fn permutations(items: &[usize]) -> Vec<(Vec<usize>, i32)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (mut p, s) in permutations(&rest) {
            p.insert(0, first);
            out.push((p, s * sign));
        }
    }
    out
}

/// Polytabloid `e_t = Σ_{σ ∈ C_t} sgn(σ) {σt}` of a filled grid, as
/// `tabloid → coefficient`. A tabloid is the row of each label.
fn polytabloid(g: &[Vec<usize>]) -> HashMap<Vec<usize>, i64> {
    let m: usize = g.iter().map(|r| r.len()).sum();
    let cols = g.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..cols)
        .map(|c| g.iter().filter_map(|r| r.get(c).copied()).collect())
        .collect();
    let mut acc: Vec<(Vec<usize>, i64)> = vec![(vec![0; m], 1)];
    for col in &columns {
        let mut next = Vec::new();
        for (tab, s) in &acc {
            for (perm, ps) in permutations(col) {
                // Entry col[k] moves to the row of perm[k]'s slot, i.e. row k.
                let mut t = tab.clone();
                for (row, label) in perm.iter().enumerate() {
                    t[*label] = row;
                }
                next.push((t, s * ps as i64));
            }
        }
        acc = next;
    }
    let mut out = HashMap::new();
    for (t, s) in acc {
        *out.entry(t).or_insert(0) += s;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Young's natural representation of `S_m` on Specht module `S^λ`: matrices
/// of the adjacent transpositions `(i, i+1)`, `i = 0..m-1`, in the standard
/// polytabloid basis.
pub fn young_natural_matrices(lambda: &Partition) -> Vec<RatMatrix> {
    let m = lambda.size();
    let tabs = standard_tableaux(lambda);
    let f = tabs.len();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let vec_of = |p: &HashMap<Vec<usize>, i64>, index: &mut HashMap<Vec<usize>, usize>| {
        let mut v: Vec<(usize, Rational)> = p
            .iter()
            .map(|(t, c)| {
                let n = index.len();
                (
                    *index.entry(t.clone()).or_insert(n),
                    Rational::from_integer((*c).into()),
                )
            })
            .collect();
        v.sort_by_key(|(k, _)| *k);
        v
    };
    let grids: Vec<Vec<Vec<usize>>> = tabs.iter().map(|t| grid(lambda, t)).collect();
    let basis: Vec<_> = grids.iter().map(|g| vec_of(&polytabloid(g), &mut index)).collect();
    // Transposed images may reach tabloids not seen yet; collect them first.
    let images: Vec<Vec<_>> = (0..m.saturating_sub(1))
        .map(|i| {
            grids
                .iter()
                .map(|g| {
                    let swapped: Vec<Vec<usize>> = g
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|&x| {
                                    if x == i {
                                        i + 1
                                    } else if x == i + 1 {
                                        i
                                    } else {
                                        x
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    vec_of(&polytabloid(&swapped), &mut index)
                })
                .collect()
        })
        .collect();
    let width = index.len();
    let mut aug = Rref::new(width + f);
    for (j, b) in basis.iter().enumerate() {
        let mut row = b.clone();
        row.push((width + j, Rational::one()));
        aug.insert(&row);
    }
    images
        .iter()
        .map(|cols| {
            let columns: Vec<_> = cols
                .iter()
                .map(|w| {
                    let red = aug.reduce(w);
                    let coords: Vec<(usize, Rational)> = red
                        .into_iter()
                        .map(|(c, x)| {
                            assert!(c >= width, "image lies outside the Specht module");
                            (c - width, -x)
                        })
                        .collect();
                    coords
                })
                .collect();
            RatMatrix::from_columns(f, &columns)
        })
        .collect()
}

/// `s_i² = 1`, `(s_i s_{i+1})³ = 1` and `s_i s_j = s_j s_i` for `|i - j| > 1`.
pub fn check_coxeter(gens: &[RatMatrix]) -> bool {
    let n = gens.first().map_or(0, |g| g.rows());
    let id = RatMatrix::identity(n);
    for (i, s) in gens.iter().enumerate() {
        if s * s != id {
            return false;
        }
        for (j, t) in gens.iter().enumerate().skip(i + 1) {
            let st = s * t;
            let ok = if j == i + 1 {
                &(&st * &st) * &st == id
            } else {
                st == t * s
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Matrices of the Young generators of `h` in the irrep `rho`, Kronecker
/// product over blocks with the first block most significant. Coxeter
/// relations are verified exactly.
pub fn irrep_matrices(
    h: &YoungSubgroup,
    rho: &IrrepDescriptor,
) -> Result<Vec<(Transposition, RatMatrix)>, SymrepError> {
    if rho.partitions.len() != h.blocks.len() {
        return Err(SymrepError::InvalidIrrep(format!(
            "{} partitions for {} blocks",
            rho.partitions.len(),
            h.blocks.len()
        )));
    }
    for (p, (_, m)) in rho.partitions.iter().zip(&h.blocks) {
        if !p.is_valid() || p.size() != *m {
            return Err(SymrepError::InvalidIrrep(format!("{p} is not a partition of {m}")));
        }
    }
    let per_block: Vec<Vec<RatMatrix>> = rho.partitions.iter().map(young_natural_matrices).collect();
    let dims: Vec<usize> = rho.partitions.iter().map(|p| p.dimension() as usize).collect();
    let mut out = Vec::new();
    for g in h.generators() {
        let local = g.left - h.offsets()[g.block];
        let mut acc = RatMatrix::identity(1);
        for (b, d) in dims.iter().enumerate() {
            let factor = if b == g.block {
                per_block[b][local].clone()
            } else {
                RatMatrix::identity(*d)
            };
            acc = acc.kron(&factor);
        }
        out.push((g, acc));
    }
    let all: Vec<RatMatrix> = out.iter().map(|(_, m)| m.clone()).collect();
    // Within-block Coxeter relations plus commutation across blocks.
    for b in 0..h.blocks.len() {
        let block: Vec<RatMatrix> = out
            .iter()
            .filter(|(g, _)| g.block == b)
            .map(|(_, m)| m.clone())
            .collect();
        if !check_coxeter(&block) {
            return Err(SymrepError::CoxeterViolation);
        }
    }
    for (i, (gi, a)) in out.iter().enumerate() {
        for (gj, b) in out.iter().skip(i + 1) {
            if gi.block != gj.block && (a * b) != (b * a) {
                return Err(SymrepError::CoxeterViolation);
            }
        }
    }
    if all.iter().any(|m| m.rows() != rho.dimension) {
        return Err(SymrepError::InvalidIrrep("dimension mismatch".into()));
    }
    Ok(out)
}
