use std::fmt;

use serde::{Deserialize, Serialize};

use super::structure::{split_center, Subalgebra};
use super::{AlgebraError, Element, QAlgebra};
use crate::exact::sparse::{self, SparseVec};
use crate::exact::{count_real_roots, Rational};

/// Real division algebra underlying a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RealKind {
    R,
    C,
    H,
}

impl RealKind {
    /// Real dimension of the division algebra.
    pub fn division_dim(self) -> usize {
        match self {
            RealKind::R => 1,
            RealKind::C => 2,
            RealKind::H => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            RealKind::R => "R",
            RealKind::C => "C",
            RealKind::H => "H",
        }
    }
}

impl fmt::Display for RealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `M_size(kind)`; `dim_q` is `size² · division_dim(kind)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RealSimpleFactor {
    pub kind: RealKind,
    pub size: usize,
}

impl RealSimpleFactor {
    pub fn new(kind: RealKind, size: usize) -> Self {
        RealSimpleFactor { kind, size }
    }

    pub fn dim_q(&self) -> usize {
        self.size * self.size * self.kind.division_dim()
    }
}

impl fmt::Display for RealSimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.size)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassifierMethod {
    TraceSignature,
    IdempotentOracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnReport {
    /// Sorted by kind, then size.
    pub factors: Vec<RealSimpleFactor>,
    /// Central primitive idempotents over ℚ, in algebra coordinates.
    pub idempotents: Vec<Element>,
    pub method: ClassifierMethod,
}

pub(crate) fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|k| k * k == n)
}

/// `e·A` for a central idempotent `e`.
pub(crate) fn ideal_span(a: &QAlgebra, e: &[Rational]) -> Vec<SparseVec> {
    let es = sparse::from_dense(e);
    (0..a.dim())
        .map(|i| a.mul_sparse(&es, &[(i, Rational::from_integer(1.into()))]))
        .collect()
}

/// Wedderburn decomposition over ℝ from centers and trace-form signatures.
pub fn classify_real(a: &QAlgebra) -> Result<WedderburnReport, AlgebraError> {
    let blocks = split_center(a)?;
    let form = a.trace_form();
    let mut factors = Vec::new();
    for b in &blocks {
        let f = Subalgebra::from_span(a, &ideal_span(a, &b.idempotent), &sparse::from_dense(&b.idempotent))?;
        let dim = f.dim();
        if b.field_degree == 1 {
            let images: Vec<Element> = f
                .basis()
                .iter()
                .map(|v| form.mul_vec(&sparse::to_dense(v, a.dim())))
                .collect();
            let mut gram = crate::exact::RatMatrix::zeros(dim, dim);
            for (r, v) in f.basis().iter().enumerate() {
                for (s, tv) in images.iter().enumerate() {
                    let x = v.iter().fold(Rational::default(), |acc, (k, c)| acc + c * &tv[*k]);
                    gram.set(r, s, x);
                }
            }
            let (pos, neg, zero) = gram.signature()?;
            if zero != 0 {
                return Err(AlgebraError::NotSemisimple { radical_dim: zero });
            }
            let bad = AlgebraError::UnclassifiableFactor { dim, pos, neg };
            let factor = if pos >= neg {
                let k = pos - neg;
                (k * k == dim).then_some(RealSimpleFactor::new(RealKind::R, k))
            } else {
                let twice = neg - pos;
                (twice % 2 == 0 && twice * twice == dim).then_some(RealSimpleFactor::new(RealKind::H, twice / 2))
            };
            factors.push(factor.ok_or(bad)?);
        } else {
            let real_roots = count_real_roots(&b.field_poly)?;
            if real_roots > 0 {
                return Err(AlgebraError::UnsupportedCenter {
                    degree: b.field_degree,
                    real_roots,
                });
            }
            // Totally imaginary center: one complex place per conjugate pair.
            let k = (dim % b.field_degree == 0)
                .then(|| exact_sqrt(dim / b.field_degree))
                .flatten()
                .ok_or(AlgebraError::UnclassifiableFactor { dim, pos: 0, neg: 0 })?;
            for _ in 0..b.field_degree / 2 {
                factors.push(RealSimpleFactor::new(RealKind::C, k));
            }
        }
    }
    factors.sort();
    Ok(WedderburnReport {
        factors,
        idempotents: blocks.into_iter().map(|b| b.idempotent).collect(),
        method: ClassifierMethod::TraceSignature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, matrix_algebra, polynomial_quotient, quaternions, rationals, tensor};
    use crate::exact::RatPoly;

    fn kinds(a: &QAlgebra) -> Vec<String> {
        classify_real(a)
            .unwrap()
            .factors
            .iter()
            .map(|f| f.to_string())
            .collect()
    }

    #[test]
    fn small_algebras() {
        assert_eq!(kinds(&rationals()), ["R(1)"]);
        assert_eq!(kinds(&quaternions()), ["H(1)"]);
        assert_eq!(kinds(&matrix_algebra(3)), ["R(3)"]);
        assert_eq!(
            kinds(&polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap()),
            ["C(1)"]
        );
        assert_eq!(
            kinds(&polynomial_quotient(&RatPoly::from_i64(&[1, 1, 1])).unwrap()),
            ["C(1)"]
        );
        assert_eq!(
            kinds(&direct_product(&quaternions(), &matrix_algebra(2))),
            ["R(2)", "H(1)"]
        );
    }

    #[test]
    fn tensor_products() {
        let h = quaternions();
        let m2 = matrix_algebra(2);
        assert_eq!(kinds(&tensor(&[&h, &h]).unwrap()), ["R(4)"]);
        assert_eq!(kinds(&tensor(&[&m2, &h]).unwrap()), ["H(2)"]);
        assert_eq!(kinds(&tensor(&[&rationals(), &h]).unwrap()), ["H(1)"]);
    }

    #[test]
    fn real_quadratic_center_is_unsupported() {
        let a = polynomial_quotient(&RatPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(
            classify_real(&a).unwrap_err(),
            AlgebraError::UnsupportedCenter {
                degree: 2,
                real_roots: 2
            }
        );
    }

    #[test]
    fn quartic_cm_center() {
        // x⁴ + 1: totally imaginary, two complex places.
        let a = polynomial_quotient(&RatPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(kinds(&a), ["C(1)", "C(1)"]);
    }

    #[test]
    fn factor_dims_sum() {
        assert_eq!(RealSimpleFactor::new(RealKind::H, 2).dim_q(), 16);
        assert_eq!(RealSimpleFactor::new(RealKind::C, 3).dim_q(), 18);
        assert_eq!(exact_sqrt(49), Some(7));
        assert_eq!(exact_sqrt(50), None);
    }
}
