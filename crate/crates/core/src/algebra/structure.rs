use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraError, Element, QAlgebra, MAX_SEED_RETRIES};
use crate::exact::sparse::{self, Rref, SparseVec};
use crate::exact::{factor_over_q, rat, RatMatrix, RatPoly, Rational};

/// A subalgebra together with its basis in parent coordinates.
///
/// The basis is the reduced echelon basis of the spanning set, ordered by
/// pivot column, so it is canonical for the subspace.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: QAlgebra,
    basis: Vec<SparseVec>,
    echelon: Rref,
    parent_dim: usize,
}

impl Subalgebra {
    /// The subalgebra spanned by `spanning` with unit `unit` (both in parent
    /// coordinates). Fails with `NotClosed` unless the span is closed under
    /// multiplication and contains `unit`, and with `NotUnital` if `unit` is
    /// not a two-sided identity on it. Associativity is inherited.
    pub fn from_span(
        parent: &QAlgebra,
        spanning: &[SparseVec],
        unit: &[(usize, Rational)],
    ) -> Result<Self, AlgebraError> {
        let mut rref = Rref::new(parent.dim());
        for v in spanning {
            rref.insert(v);
        }
        let mut rows: Vec<(usize, SparseVec)> =
            rref.pivots().iter().copied().zip(rref.rows().iter().cloned()).collect();
        rows.sort_by_key(|(p, _)| *p);
        let mut echelon = Rref::new(parent.dim());
        for (_, r) in &rows {
            echelon.insert(r);
        }
        let basis: Vec<SparseVec> = rows.into_iter().map(|(_, r)| r).collect();
        let d = basis.len();
        let mut products = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                let p = parent.mul_sparse(x, y);
                let c = echelon.coordinates(&p).ok_or(AlgebraError::NotClosed)?;
                products.push(sparse::from_dense(&c));
            }
        }
        let unit_c = echelon.coordinates(unit).ok_or(AlgebraError::NotClosed)?;
        let algebra = QAlgebra::from_parts_unchecked(d, products, unit_c);
        let us = sparse::from_dense(algebra.unit());
        for i in 0..d {
            let ei: SparseVec = vec![(i, Rational::one())];
            if algebra.mul_sparse(&us, &ei) != ei || algebra.mul_sparse(&ei, &us) != ei {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        Ok(Subalgebra {
            algebra,
            basis,
            echelon,
            parent_dim: parent.dim(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Parent-coordinate image of a subalgebra element.
    pub fn lift(&self, coords: &[Rational]) -> Element {
        let mut acc = vec![Rational::zero(); self.parent_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                sparse::axpy_dense(&mut acc, c, b);
            }
        }
        acc
    }

    /// Subalgebra coordinates of a parent element, if it lies inside.
    pub fn project(&self, v: &[Rational]) -> Option<Element> {
        self.echelon.coordinates(&sparse::from_dense(v))
    }

    /// `parent_dim × dim` matrix whose columns are the basis vectors.
    pub fn embedding(&self) -> RatMatrix {
        RatMatrix::from_columns(self.parent_dim, &self.basis)
    }
}

/// Basis of the Jacobson radical: the kernel of the trace form.
pub fn radical(a: &QAlgebra) -> Vec<Element> {
    let t = a.trace_form();
    let mut rref = Rref::new(a.dim());
    for i in 0..a.dim() {
        rref.insert(&t.row_sparse(i));
    }
    rref.kernel().iter().map(|v| sparse::to_dense(v, a.dim())).collect()
}

/// The center `{z : z e_j = e_j z for all j}`.
#[allow(clippy::needless_range_loop)]
pub fn center(a: &QAlgebra) -> Subalgebra {
    let d = a.dim();
    let mut rref = Rref::new(d);
    for j in 0..d {
        // Row k of the map z ↦ z e_j - e_j z, as a function of z's coordinates.
        let mut rows = vec![vec![Rational::zero(); d]; d];
        for i in 0..d {
            for (k, c) in a.basis_product(i, j) {
                rows[*k][i] += c;
            }
            for (k, c) in a.basis_product(j, i) {
                rows[*k][i] -= c;
            }
        }
        for r in rows {
            rref.insert(&sparse::from_dense(&r));
            if rref.rank() == d {
                break;
            }
        }
    }
    let kernel = rref.kernel();
    Subalgebra::from_span(a, &kernel, &sparse::from_dense(a.unit())).expect("the center is a subalgebra")
}

/// One block of the center decomposition `Z = Π e_i Z`, each `e_i Z` a field.
#[derive(Debug, Clone)]
pub(crate) struct CentralBlock {
    /// Idempotent in the parent algebra's coordinates.
    pub idempotent: Element,
    /// `dim_ℚ e Z`.
    pub field_degree: usize,
    /// Minimal polynomial of a primitive element of `e Z`.
    pub field_poly: RatPoly,
}

pub(crate) fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-range..=range))).collect()
}

/// CRT idempotents `u_i` of `ℚ[x]/(m) ≅ Π ℚ[x]/(g_i)` evaluated at `x` with
/// unit `e`. `factors` are the distinct irreducible factors of a squarefree `m`.
pub(crate) fn crt_idempotents(
    alg: &QAlgebra,
    x: &[Rational],
    e: &[Rational],
    m: &RatPoly,
    factors: &[RatPoly],
) -> Vec<Element> {
    factors
        .iter()
        .map(|g| {
            let h = m.div_rem(g).0;
            let (one, s, _) = h.ext_gcd(g);
            debug_assert!(one.degree() == Some(0));
            let u = (&s * &h).rem(m);
            alg.eval_poly(&u, x, e)
        })
        .collect()
}

pub(crate) fn split_center(a: &QAlgebra) -> Result<Vec<CentralBlock>, AlgebraError> {
    let rad = radical(a);
    if !rad.is_empty() {
        return Err(AlgebraError::NotSemisimple { radical_dim: rad.len() });
    }
    let z = center(a);
    let za = &z.algebra;
    let mut pending = vec![za.unit().clone()];
    let mut done: Vec<(Element, usize, RatPoly)> = Vec::new();
    'outer: while let Some(e) = pending.pop() {
        let es = sparse::from_dense(&e);
        let span: Vec<SparseVec> = (0..za.dim())
            .map(|i| za.mul_sparse(&es, &[(i, Rational::one())]))
            .collect();
        let mut rref = Rref::new(za.dim());
        for v in &span {
            rref.insert(v);
        }
        let deg = rref.rank();
        let basis: Vec<Element> = rref.rows().iter().map(|r| sparse::to_dense(r, za.dim())).collect();
        for seed in 0..MAX_SEED_RETRIES {
            let mut candidates: Vec<Element> = if seed == 0 { basis.clone() } else { Vec::new() };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..4 {
                let c = random_coeffs(&mut rng, deg, 5);
                let mut x = vec![Rational::zero(); za.dim()];
                for (ci, b) in c.iter().zip(&basis) {
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi += ci * bi;
                    }
                }
                candidates.push(x);
            }
            for x in candidates {
                let m = za.min_poly_with_unit(&x, &e);
                let factors = factor_over_q(&m)?;
                if factors.iter().any(|(_, k)| *k > 1) {
                    return Err(AlgebraError::NotSemisimple { radical_dim: 0 });
                }
                if factors.len() == 1 && m.degree() == Some(deg) {
                    done.push((e, deg, m));
                    continue 'outer;
                }
                if factors.len() > 1 {
                    let gs: Vec<RatPoly> = factors.into_iter().map(|(g, _)| g).collect();
                    pending.extend(crt_idempotents(za, &x, &e, &m, &gs));
                    continue 'outer;
                }
            }
        }
        return Err(AlgebraError::SearchExhausted(MAX_SEED_RETRIES));
    }
    let mut blocks: Vec<CentralBlock> = done
        .into_iter()
        .map(|(e, deg, m)| CentralBlock {
            idempotent: z.lift(&e),
            field_degree: deg,
            field_poly: m,
        })
        .collect();
    blocks.sort_by(|x, y| x.idempotent.cmp(&y.idempotent).reverse());
    Ok(blocks)
}

/// Central primitive idempotents of a semisimple algebra, one per ℚ-simple
/// factor, summing to the unit.
pub fn central_primitive_idempotents(a: &QAlgebra) -> Result<Vec<Element>, AlgebraError> {
    Ok(split_center(a)?.into_iter().map(|b| b.idempotent).collect())
}
