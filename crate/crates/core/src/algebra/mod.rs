//! Finite-dimensional unital associative ℚ-algebras given by structure
//! constants, their fixed subalgebras under automorphism groups, and their
//! Wedderburn decomposition classified over ℝ.

mod classify;
mod fixed;
mod json;
mod oracle;
mod standard;
mod structure;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::sparse::{self, SparseVec};
use crate::exact::{ExactError, RatMatrix, RatPoly, Rational};

pub use classify::{classify_real, ClassifierMethod, RealKind, RealSimpleFactor, WedderburnReport};
pub use fixed::{fixed_subalgebra, verify_automorphism, AlgebraAutomorphism};
pub use json::AlgebraJson;
pub use oracle::classify_real_oracle;
pub use standard::{direct_product, matrix_algebra, polynomial_quotient, quaternions, rationals, tensor};
pub use structure::{center, central_primitive_idempotents, radical, Subalgebra};

/// Bound on seeded retries in every randomized search.
pub const MAX_SEED_RETRIES: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constants have wrong length: expected {expected}, got {got}")]
    BadShape { expected: usize, got: usize },
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    NotUnital(usize),
    #[error("tensor product of an empty list")]
    EmptyTensor,
    #[error("automorphism #{0} is not a unital multiplicative bijection")]
    InvalidAutomorphism(usize),
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("algebra is not semisimple (radical of dimension {radical_dim})")]
    NotSemisimple { radical_dim: usize },
    #[error("center field of degree {degree} with {real_roots} real embeddings is not supported")]
    UnsupportedCenter { degree: usize, real_roots: usize },
    #[error("factor of dimension {dim} has inconsistent trace signature ({pos}, {neg})")]
    UnclassifiableFactor { dim: usize, pos: usize, neg: usize },
    #[error("randomized search exhausted {0} seeds")]
    SearchExhausted(u64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Algebra element in basis coordinates.
pub type Element = Vec<Rational>;

/// A finite-dimensional unital associative algebra over ℚ.
///
/// Basis products are stored sparsely: `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QAlgebra {
    dim: usize,
    products: Vec<SparseVec>,
    unit: Element,
}

impl QAlgebra {
    /// Builds an algebra from dense row-major constants `c[i][j][k]` and a
    /// unit vector, validating associativity on every basis triple and the
    /// unit law on every basis element.
    pub fn new(dim: usize, constants: &[Rational], unit: Element) -> Result<Self, AlgebraError> {
        if constants.len() != dim * dim * dim {
            return Err(AlgebraError::BadShape {
                expected: dim * dim * dim,
                got: constants.len(),
            });
        }
        let products = constants.chunks(dim.max(1)).map(sparse::from_dense).collect();
        Self::from_sparse(dim, products, unit)
    }

    pub fn from_sparse(dim: usize, products: Vec<SparseVec>, unit: Element) -> Result<Self, AlgebraError> {
        if products.len() != dim * dim {
            return Err(AlgebraError::BadShape {
                expected: dim * dim,
                got: products.len(),
            });
        }
        if unit.len() != dim {
            return Err(AlgebraError::BadShape {
                expected: dim,
                got: unit.len(),
            });
        }
        let alg = QAlgebra { dim, products, unit };
        alg.validate()?;
        Ok(alg)
    }

    /// For constructions that are associative and unital by construction
    /// (tensor products of validated algebras).
    pub(crate) fn from_parts_unchecked(dim: usize, products: Vec<SparseVec>, unit: Element) -> Self {
        debug_assert_eq!(products.len(), dim * dim);
        QAlgebra { dim, products, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Element {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// `e_i · e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim + j]
    }

    /// Dense row-major structure constants.
    pub fn constants(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim * self.dim * self.dim];
        for (ij, p) in self.products.iter().enumerate() {
            for (k, x) in p {
                out[ij * self.dim + k] = x.clone();
            }
        }
        out
    }

    pub fn mul_sparse(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = self.basis_product(*i, *j);
                if !p.is_empty() {
                    let ab = a * b;
                    terms.extend(p.iter().map(|(k, c)| (*k, &ab * c)));
                }
            }
        }
        sparse::collect_terms(terms)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Element {
        sparse::to_dense(
            &self.mul_sparse(&sparse::from_dense(x), &sparse::from_dense(y)),
            self.dim,
        )
    }

    /// Matrix of `y ↦ x·y` in the standard basis.
    pub fn left_mul_matrix(&self, x: &[Rational]) -> RatMatrix {
        let xs = sparse::from_dense(x);
        let cols: Vec<SparseVec> = (0..self.dim)
            .map(|j| self.mul_sparse(&xs, &[(j, Rational::one())]))
            .collect();
        RatMatrix::from_columns(self.dim, &cols)
    }

    /// `Tr(L_{e_k})` for every basis element.
    pub fn left_traces(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(Rational::zero(), |acc, m| {
                    let p = self.basis_product(k, m);
                    match p.binary_search_by_key(&m, |(c, _)| *c) {
                        Ok(pos) => acc + &p[pos].1,
                        Err(_) => acc,
                    }
                })
            })
            .collect()
    }

    /// Gram matrix of the trace form `(x, y) ↦ Tr(L_{xy})`.
    pub fn trace_form(&self) -> RatMatrix {
        let t = self.left_traces();
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self
                    .basis_product(i, j)
                    .iter()
                    .fold(Rational::zero(), |acc, (k, c)| acc + c * &t[*k]);
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Minimal polynomial of `x` inside the corner algebra with unit `e`
    /// (`e` must be an idempotent with `e x = x e = x`).
    pub fn min_poly_with_unit(&self, x: &[Rational], e: &[Rational]) -> RatPoly {
        let xs = sparse::from_dense(x);
        crate::exact::krylov_min_poly(e, |v| {
            sparse::to_dense(&self.mul_sparse(&xs, &sparse::from_dense(v)), self.dim)
        })
    }

    pub fn min_poly(&self, x: &[Rational]) -> RatPoly {
        self.min_poly_with_unit(x, &self.unit)
    }

    /// `p(x)` with constant term interpreted as `c·e`.
    pub fn eval_poly(&self, p: &RatPoly, x: &[Rational], e: &[Rational]) -> Element {
        let xs = sparse::from_dense(x);
        crate::exact::apply_poly(p, e, |v| {
            sparse::to_dense(&self.mul_sparse(&xs, &sparse::from_dense(v)), self.dim)
        })
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        let unit = sparse::from_dense(&self.unit);
        for i in 0..d {
            let ei: SparseVec = vec![(i, Rational::one())];
            if self.mul_sparse(&unit, &ei) != ei || self.mul_sparse(&ei, &unit) != ei {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        let mut lhs = vec![Rational::zero(); d];
        let mut rhs = vec![Rational::zero(); d];
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for l in 0..d {
                    for x in lhs.iter_mut().chain(rhs.iter_mut()) {
                        x.set_zero();
                    }
                    for (k, c) in ij {
                        sparse::axpy_dense(&mut lhs, c, self.basis_product(*k, l));
                    }
                    for (m, c) in self.basis_product(j, l) {
                        sparse::axpy_dense(&mut rhs, c, self.basis_product(i, *m));
                    }
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }
}
