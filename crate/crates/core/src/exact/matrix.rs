use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use super::sparse::{self, Rref, SparseVec};
use super::{ExactError, RatPoly, Rational};

/// Dense matrix of exact rationals. Dimensions are fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ExactError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| super::rat(*x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(n_rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column_sparse(&self, c: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|r| {
                let x = self.get(r, c);
                (!x.is_zero()).then(|| (r, x.clone()))
            })
            .collect()
    }

    pub fn row_sparse(&self, r: usize) -> SparseVec {
        sparse::from_dense(self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn checked_mul(&self, o: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != o.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.data[r * o.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &RatMatrix) -> RatMatrix {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * o.rows + k) * c + j * o.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    fn row_echelon(&self) -> Rref {
        let mut rref = Rref::new(self.cols);
        for r in 0..self.rows {
            rref.insert(&self.row_sparse(r));
        }
        rref
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Basis of the null space `{v : M v = 0}`; `cols - rank` vectors.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.row_echelon()
            .kernel()
            .iter()
            .map(|v| sparse::to_dense(v, self.cols))
            .collect()
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // Row-reduce [M | I]; the right half of the RREF is the inverse.
        let mut rref = Rref::new(2 * n);
        for r in 0..n {
            let mut row = self.row_sparse(r);
            row.push((n + r, Rational::one()));
            rref.insert(&row);
        }
        if rref.rank() < n || rref.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for (row, &p) in rref.rows().iter().zip(rref.pivots()) {
            for (c, x) in row {
                if *c >= n {
                    inv.set(p, c - n, x.clone());
                }
            }
        }
        Some(inv)
    }

    /// Monic least-degree annihilating polynomial.
    pub fn minimal_polynomial(&self) -> Result<RatPoly, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut acc = RatPoly::one();
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            if apply_poly(&acc, &e, |v| self.mul_vec(v)).iter().all(|x| x.is_zero()) {
                continue;
            }
            let local = krylov_min_poly(&e, |v| self.mul_vec(v));
            let g = acc.gcd(&local);
            acc = (&acc * &local).div_rem(&g).0.monic();
        }
        Ok(acc)
    }

    /// Sylvester signature `(positive, negative, zero)` of a symmetric form,
    /// by congruence diagonalization.
    // Congruence moves touch a row and its column together, so indices are clearer than iterators.
    #[allow(clippy::needless_range_loop)]
    pub fn signature(&self) -> Result<(usize, usize, usize), ExactError> {
        if !self.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                    swap_sym(&mut a, k, i);
                } else if let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                {
                    // Diagonal is zero on k..n but a[i][j] ≠ 0: adding row/col j
                    // to i makes a[i][i] = 2 a[i][j] ≠ 0.
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[i][c] += v;
                    }
                    for r in 0..n {
                        let v = a[r][j].clone();
                        a[r][i] += v;
                    }
                    swap_sym(&mut a, k, i);
                } else {
                    diag.extend((k..n).map(|_| Rational::zero()));
                    break;
                }
            }
            let pivot = a[k][k].clone();
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                for c in k..n {
                    let v = &f * &a[k][c];
                    a[r][c] -= v;
                }
                for rr in k..n {
                    let v = &f * &a[rr][k];
                    a[rr][r] -= v;
                }
            }
            diag.push(pivot);
        }
        let pos = diag.iter().filter(|x| x.is_positive()).count();
        let neg = diag.iter().filter(|x| x.is_negative()).count();
        Ok((pos, neg, n - pos - neg))
    }
}

fn swap_sym(a: &mut [Vec<Rational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Evaluates `p(T) v` where `T` is given by `apply`.
pub(crate) fn apply_poly(p: &RatPoly, v: &[Rational], apply: impl Fn(&[Rational]) -> Vec<Rational>) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = apply(&acc);
        for (a, x) in acc.iter_mut().zip(v) {
            *a += c * x;
        }
    }
    acc
}

/// Monic generator of `{p : p(T) start = 0}`, found from the first linear
/// dependency among `start, T start, T² start, …`.
pub(crate) fn krylov_min_poly(start: &[Rational], apply: impl Fn(&[Rational]) -> Vec<Rational>) -> RatPoly {
    let len = start.len();
    let mut rref = Rref::new(len);
    // Track each echelon row as a combination of the Krylov vectors by
    // augmenting with coordinates past `len`.
    let mut aug = Rref::new(len + len + 1);
    let mut cur = start.to_vec();
    for k in 0..=len {
        let sv = sparse::from_dense(&cur);
        if !rref.insert(&sv) {
            let mut row = sv;
            row.push((len + k, Rational::one()));
            let red = aug.reduce(&row);
            // `red` has no entries below `len`; its tail is a relation
            // Σ c_i T^i start = 0 with c_k = 1 (up to scale).
            let mut coeffs = vec![Rational::zero(); k + 1];
            for (c, x) in red {
                debug_assert!(c >= len);
                coeffs[c - len] = x;
            }
            return RatPoly::new(coeffs).monic();
        }
        let mut row = sv;
        row.push((len + k, Rational::one()));
        aug.insert(&row);
        cur = apply(&cur);
    }
    unreachable!("Krylov sequence must become dependent within {len} steps")
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, o: &RatMatrix) -> RatMatrix {
        self.checked_mul(o).expect("dimension mismatch")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
