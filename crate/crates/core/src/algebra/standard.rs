use num_traits::{One, Zero};

use super::{AlgebraError, QAlgebra};
use crate::exact::sparse::SparseVec;
use crate::exact::{rat, ExactError, RatPoly, Rational};

/// ℚ itself.
pub fn rationals() -> QAlgebra {
    QAlgebra::from_parts_unchecked(1, vec![vec![(0, Rational::one())]], vec![Rational::one()])
}

/// Hamilton quaternions over ℚ, basis `1, i, j, k`.
pub fn quaternions() -> QAlgebra {
    // table[a][b] = (sign, index) of e_a e_b
    const T: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let products = T
        .iter()
        .flat_map(|row| row.iter().map(|&(s, k)| vec![(k, rat(s))]))
        .collect();
    let unit = vec![rat(1), rat(0), rat(0), rat(0)];
    QAlgebra::from_parts_unchecked(4, products, unit)
}

/// `M_d(ℚ)` on matrix units `E_ab`, basis index `a*d + b`.
pub fn matrix_algebra(d: usize) -> QAlgebra {
    let n = d * d;
    let mut products = vec![SparseVec::new(); n * n];
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                products[(a * d + b) * n + (b * d + c)] = vec![(a * d + c, Rational::one())];
            }
        }
    }
    let mut unit = vec![Rational::zero(); n];
    for a in 0..d {
        unit[a * d + a] = Rational::one();
    }
    QAlgebra::from_parts_unchecked(n, products, unit)
}

/// `ℚ[x]/(f)` on the monomial basis `1, x, …, x^{deg f - 1}`.
pub fn polynomial_quotient(f: &RatPoly) -> Result<QAlgebra, AlgebraError> {
    let n = match f.degree() {
        None => return Err(ExactError::ZeroPolynomial.into()),
        Some(0) => return Err(AlgebraError::BadShape { expected: 1, got: 0 }),
        Some(n) => n,
    };
    let f = f.monic();
    let mut powers = Vec::with_capacity(2 * n - 1);
    for k in 0..2 * n - 1 {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        let r = RatPoly::new(c).rem(&f);
        powers.push(crate::exact::sparse::from_dense(r.coeffs()));
    }
    let products = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| powers[i + j].clone())
        .collect();
    let mut unit = vec![Rational::zero(); n];
    unit[0] = Rational::one();
    Ok(QAlgebra::from_parts_unchecked(n, products, unit))
}

/// `A × B` with `A`'s basis first.
pub fn direct_product(a: &QAlgebra, b: &QAlgebra) -> QAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let n = da + db;
    let mut products = vec![SparseVec::new(); n * n];
    for i in 0..da {
        for j in 0..da {
            products[i * n + j] = a.basis_product(i, j).clone();
        }
    }
    for i in 0..db {
        for j in 0..db {
            products[(da + i) * n + da + j] = b.basis_product(i, j).iter().map(|(k, x)| (da + k, x.clone())).collect();
        }
    }
    let unit = a.unit().iter().chain(b.unit()).cloned().collect();
    QAlgebra::from_parts_unchecked(n, products, unit)
}

fn kron_sparse(x: &[(usize, Rational)], y: &[(usize, Rational)], dy: usize) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for (i, a) in x {
        for (j, b) in y {
            out.push((i * dy + j, a * b));
        }
    }
    out
}

fn tensor_pair(a: &QAlgebra, b: &QAlgebra) -> QAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut products = Vec::with_capacity(n * n);
    for i1 in 0..da {
        for i2 in 0..db {
            for j1 in 0..da {
                for j2 in 0..db {
                    products.push(kron_sparse(a.basis_product(i1, j1), b.basis_product(i2, j2), db));
                }
            }
        }
    }
    let unit = a
        .unit()
        .iter()
        .flat_map(|x| b.unit().iter().map(move |y| x * y))
        .collect();
    QAlgebra::from_parts_unchecked(n, products, unit)
}

/// Kronecker tensor product; the first factor's index is most significant.
pub fn tensor(factors: &[&QAlgebra]) -> Result<QAlgebra, AlgebraError> {
    let (first, rest) = factors.split_first().ok_or(AlgebraError::EmptyTensor)?;
    Ok(rest.iter().fold((*first).clone(), |acc, f| tensor_pair(&acc, f)))
}
