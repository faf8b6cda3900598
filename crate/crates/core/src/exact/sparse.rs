//! Sparse exact vectors and an incremental reduced row echelon form.
//!
//! Most matrices built by the engine (tensor-slot permutations, conjugation by
//! small representation matrices) have a handful of nonzeros per row, so the
//! elimination works on sorted `(column, value)` lists.

use num_traits::{One, Zero};

use super::Rational;

/// Sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - f * b`, both inputs sorted.
pub fn sub_scaled(a: &[(usize, Rational)], f: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &mut SparseVec, f: &Rational) {
    for (_, x) in a.iter_mut() {
        *x = &*x * f;
    }
}

/// Accumulates `coeff * v` into an unsorted dense buffer; used for products.
pub fn axpy_dense(acc: &mut [Rational], coeff: &Rational, v: &[(usize, Rational)]) {
    for (k, x) in v {
        acc[*k] += coeff * x;
    }
}

/// Sorts unordered terms by index, sums repeated indices and drops zeros.
pub fn collect_terms(mut terms: Vec<(usize, Rational)>) -> SparseVec {
    terms.sort_unstable_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (k, x) in terms {
        match out.last_mut() {
            Some((lk, lx)) if *lk == k => *lx += x,
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Reduced row echelon form built one row at a time.
///
/// Invariant: every stored row has a leading 1 in its pivot column and zeros
/// in every other pivot column.
#[derive(Debug, Clone)]
pub struct Rref {
    cols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Rref {
    pub fn new(cols: usize) -> Self {
        Rref {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the current rows without inserting it.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row[*c].map(|r| (r, x.clone())))
            .collect();
        let mut out: SparseVec = v.to_vec();
        for (r, x) in hits {
            out = sub_scaled(&out, &x, &self.rows[r]);
        }
        out
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let mut red = self.reduce(v);
        if red.is_empty() {
            return false;
        }
        let (pc, lead) = red[0].clone();
        if !lead.is_one() {
            let inv = lead.recip();
            scale(&mut red, &inv);
        }
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pc, |(c, _)| *c) {
                let f = row[pos].1.clone();
                *row = sub_scaled(row, &f, &red);
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(red);
        self.pivots.push(pc);
        true
    }

    /// Null space basis of the row space: one vector per free column, with a
    /// 1 in that column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for f in 0..self.cols {
            if self.pivot_row[f].is_some() {
                continue;
            }
            let mut v: SparseVec = vec![(f, Rational::one())];
            for (r, row) in self.rows.iter().enumerate() {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v.push((self.pivots[r], -row[pos].1.clone()));
                }
            }
            v.sort_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }

    /// Coordinates of `v` with respect to the stored rows, if `v` lies in
    /// their span. Valid because each row has a unit pivot absent elsewhere.
    pub fn coordinates(&self, v: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let mut coords = vec![Rational::zero(); self.rows.len()];
        for (c, x) in v {
            if let Some(r) = self.pivot_row[*c] {
                coords[r] = x.clone();
            }
        }
        let mut rest: SparseVec = v.to_vec();
        for (r, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                rest = sub_scaled(&rest, x, &self.rows[r]);
            }
        }
        rest.is_empty().then_some(coords)
    }
}
