use num_traits::One;

use super::structure::Subalgebra;
use super::{AlgebraError, QAlgebra};
use crate::exact::sparse::{self, Rref, SparseVec};
use crate::exact::{RatMatrix, Rational};

/// A linear map of an algebra given by the images of the basis vectors.
///
/// Holding one does not imply it is an automorphism; see
/// [`verify_automorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraAutomorphism {
    dim: usize,
    images: Vec<SparseVec>,
}

impl AlgebraAutomorphism {
    /// Column `j` of `matrix` is the image of `e_j`.
    pub fn from_matrix(matrix: &RatMatrix) -> Self {
        AlgebraAutomorphism {
            dim: matrix.rows(),
            images: (0..matrix.cols()).map(|j| matrix.column_sparse(j)).collect(),
        }
    }

    pub fn from_images(dim: usize, images: Vec<SparseVec>) -> Self {
        AlgebraAutomorphism { dim, images }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_images(dim, (0..dim).map(|j| vec![(j, Rational::one())]).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image(&self, j: usize) -> &SparseVec {
        &self.images[j]
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_columns(self.dim, &self.images)
    }

    pub fn apply_sparse(&self, v: &[(usize, Rational)]) -> SparseVec {
        let terms = v
            .iter()
            .flat_map(|(j, x)| self.images[*j].iter().map(move |(k, c)| (*k, x * c)))
            .collect();
        sparse::collect_terms(terms)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        sparse::to_dense(&self.apply_sparse(&sparse::from_dense(v)), self.dim)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraAutomorphism) -> AlgebraAutomorphism {
        AlgebraAutomorphism {
            dim: self.dim,
            images: other.images.iter().map(|v| self.apply_sparse(v)).collect(),
        }
    }
}

/// Checks that `g` is a bijective, unit-preserving, multiplicative map of `a`.
pub fn verify_automorphism(a: &QAlgebra, g: &AlgebraAutomorphism) -> bool {
    let d = a.dim();
    if g.dim != d || g.images.len() != d {
        return false;
    }
    let mut rref = Rref::new(d);
    for v in &g.images {
        rref.insert(v);
    }
    if rref.rank() != d {
        return false;
    }
    let unit = sparse::from_dense(a.unit());
    if g.apply_sparse(&unit) != unit {
        return false;
    }
    (0..d).all(|i| (0..d).all(|j| g.apply_sparse(a.basis_product(i, j)) == a.mul_sparse(&g.images[i], &g.images[j])))
}

/// `A^G = ∩_g ker(g - id)` for the group generated by `gens`.
///
/// Every generator is verified first; a failure reports its index.
pub fn fixed_subalgebra(a: &QAlgebra, gens: &[AlgebraAutomorphism]) -> Result<Subalgebra, AlgebraError> {
    for (idx, g) in gens.iter().enumerate() {
        if !verify_automorphism(a, g) {
            return Err(AlgebraError::InvalidAutomorphism(idx));
        }
    }
    fixed_subalgebra_trusted(a, gens)
}

/// As [`fixed_subalgebra`] for generators known to be automorphisms.
pub(crate) fn fixed_subalgebra_trusted(a: &QAlgebra, gens: &[AlgebraAutomorphism]) -> Result<Subalgebra, AlgebraError> {
    let d = a.dim();
    let mut rref = Rref::new(d);
    for g in gens {
        // Rows of (g - id): row r collects entry r of every image column.
        let mut rows: Vec<SparseVec> = vec![Vec::new(); d];
        for (j, col) in g.images.iter().enumerate() {
            for (r, x) in col {
                rows[*r].push((j, x.clone()));
            }
        }
        for (r, mut row) in rows.into_iter().enumerate() {
            match row.binary_search_by_key(&r, |(c, _)| *c) {
                Ok(pos) => {
                    row[pos].1 -= Rational::one();
                    if row[pos].1 == Rational::default() {
                        row.remove(pos);
                    }
                }
                Err(pos) => row.insert(pos, (r, -Rational::one())),
            }
            if !row.is_empty() {
                rref.insert(&row);
            }
        }
    }
    Subalgebra::from_span(a, &rref.kernel(), &sparse::from_dense(a.unit()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quaternions, tensor};
    use crate::exact::rat;

    fn swap(d: usize) -> AlgebraAutomorphism {
        let images = (0..d * d).map(|idx| vec![((idx % d) * d + idx / d, rat(1))]).collect();
        AlgebraAutomorphism::from_images(d * d, images)
    }

    #[test]
    fn symmetric_square_of_quaternions() {
        let h = quaternions();
        let hh = tensor(&[&h, &h]).unwrap();
        let g = swap(4);
        assert!(verify_automorphism(&hh, &g));
        let f = fixed_subalgebra(&hh, &[g]).unwrap();
        assert_eq!(f.dim(), 10);
        QAlgebra::new(f.dim(), &f.algebra.constants(), f.algebra.unit().clone()).unwrap();
    }

    #[test]
    fn rejects_non_multiplicative_map() {
        let h = quaternions();
        // Swapping i and j while fixing k breaks k = ij.
        let images = vec![
            vec![(0, rat(1))],
            vec![(2, rat(1))],
            vec![(1, rat(1))],
            vec![(3, rat(1))],
        ];
        let g = AlgebraAutomorphism::from_images(4, images);
        assert!(!verify_automorphism(&h, &g));
        assert_eq!(
            fixed_subalgebra(&h, &[AlgebraAutomorphism::identity(4), g]).unwrap_err(),
            AlgebraError::InvalidAutomorphism(1)
        );
    }

    #[test]
    fn conjugation_fixes_centralizer() {
        let h = quaternions();
        // x ↦ i x i⁻¹ fixes span{1, i}.
        let i = h.basis_vector(1);
        let inv: Vec<Rational> = i.iter().map(|x| -x).collect();
        let images = (0..4)
            .map(|j| sparse::from_dense(&h.mul(&h.mul(&i, &h.basis_vector(j)), &inv)))
            .collect();
        let g = AlgebraAutomorphism::from_images(4, images);
        let f = fixed_subalgebra(&h, &[g]).unwrap();
        assert_eq!(f.dim(), 2);
        assert!(f.algebra.is_commutative());
    }
}
