//! Independent classification route: primitive idempotents and the division
//! algebra `eAe`, with quaternion algebras over ℚ decided by the Hilbert
//! symbol at the real place. No trace-form signatures are used here.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classify::{exact_sqrt, ideal_span, ClassifierMethod, RealKind, RealSimpleFactor, WedderburnReport};
use super::structure::{center, crt_idempotents, split_center, Subalgebra};
use super::{AlgebraError, Element, QAlgebra, MAX_SEED_RETRIES};
use crate::exact::sparse::{self, Rref, SparseVec};
use crate::exact::{count_real_roots, factor_over_q, rat, RatPoly, Rational};

/// Cross-check of [`super::classify_real`] by a different method.
pub fn classify_real_oracle(a: &QAlgebra, seed: u64) -> Result<WedderburnReport, AlgebraError> {
    let blocks = split_center(a)?;
    let mut factors = Vec::new();
    for b in &blocks {
        let f = Subalgebra::from_span(a, &ideal_span(a, &b.idempotent), &sparse::from_dense(&b.idempotent))?;
        factors.extend(classify_simple(&f.algebra, seed)?);
    }
    factors.sort();
    Ok(WedderburnReport {
        factors,
        idempotents: blocks.into_iter().map(|b| b.idempotent).collect(),
        method: ClassifierMethod::IdempotentOracle,
    })
}

enum Outcome {
    Done(Vec<RealSimpleFactor>),
    Retry,
}

fn classify_simple(f: &QAlgebra, seed: u64) -> Result<Vec<RealSimpleFactor>, AlgebraError> {
    for attempt in 0..MAX_SEED_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        if let Outcome::Done(v) = attempt_classify(f, &mut rng)? {
            return Ok(v);
        }
    }
    Err(AlgebraError::SearchExhausted(MAX_SEED_RETRIES))
}

fn corner(f: &QAlgebra, e: &[Rational]) -> Result<Subalgebra, AlgebraError> {
    let es = sparse::from_dense(e);
    let span: Vec<SparseVec> = (0..f.dim())
        .map(|i| f.mul_sparse(&f.mul_sparse(&es, &[(i, Rational::one())]), &es))
        .collect();
    Subalgebra::from_span(f, &span, &es)
}

fn candidates(d: &QAlgebra, rng: &mut ChaCha8Rng) -> Vec<Element> {
    let n = d.dim();
    let mut out: Vec<Element> = (0..n).map(|i| d.basis_vector(i)).collect();
    for i in 0..n.min(6) {
        for j in i + 1..n.min(6) {
            let mut v = d.basis_vector(i);
            v[j] = rat(1);
            out.push(v);
            out.push(d.mul(&d.basis_vector(i), &d.basis_vector(j)));
        }
    }
    for _ in 0..2 * n + 4 {
        let mut v = vec![Rational::zero(); n];
        for _ in 0..rng.gen_range(1..=3) {
            let pos = rng.gen_range(0..n);
            v[pos] += rat(rng.gen_range(-3..=3));
        }
        out.push(v);
    }
    out
}

/// Shrinks `e` to a corner with no idempotent found by the candidate
/// search, then classifies that corner as a division algebra.
fn attempt_classify(f: &QAlgebra, rng: &mut ChaCha8Rng) -> Result<Outcome, AlgebraError> {
    let mut e = f.unit().clone();
    'shrink: loop {
        let d = corner(f, &e)?;
        if d.dim() == 1 {
            return Ok(size_for(f.dim(), 1, RealKind::R));
        }
        for x in candidates(&d.algebra, rng) {
            let m = d.algebra.min_poly(&x);
            let fs = factor_over_q(&m)?;
            if fs.len() < 2 {
                continue;
            }
            if fs.iter().any(|(_, k)| *k > 1) {
                return Err(AlgebraError::NotSemisimple { radical_dim: 0 });
            }
            let gs: Vec<RatPoly> = fs.into_iter().map(|(g, _)| g).collect();
            let us = crt_idempotents(&d.algebra, &x, d.algebra.unit(), &m, &gs);
            let mut best: Option<(usize, Element)> = None;
            for u in us {
                let lifted = d.lift(&u);
                let size = corner(f, &lifted)?.dim();
                if best.as_ref().is_none_or(|(s, _)| size < *s) {
                    best = Some((size, lifted));
                }
            }
            e = best.expect("at least two factors").1;
            continue 'shrink;
        }
        return classify_division(f.dim(), &d.algebra, rng);
    }
}

fn size_for(dim_f: usize, dim_d: usize, kind: RealKind) -> Outcome {
    match exact_sqrt(dim_f / dim_d) {
        Some(k) if dim_f.is_multiple_of(dim_d) => Outcome::Done(vec![RealSimpleFactor::new(kind, k)]),
        _ => Outcome::Retry,
    }
}

fn scalar_of(d: &QAlgebra, v: &[Rational]) -> Option<Rational> {
    let u = d.unit();
    let (pos, lead) = u.iter().enumerate().find(|(_, x)| !x.is_zero())?;
    let c = &v[pos] / lead;
    v.iter().zip(u).all(|(a, b)| *a == &c * b).then_some(c)
}

fn classify_division(dim_f: usize, d: &QAlgebra, rng: &mut ChaCha8Rng) -> Result<Outcome, AlgebraError> {
    let z = center(d);
    let (dd, dz) = (d.dim(), z.dim());
    if dd == 1 {
        return Ok(size_for(dim_f, 1, RealKind::R));
    }
    if dz > 1 {
        // Center K of degree dz: F ⊗ ℝ is a product over the places of K;
        // only totally imaginary K is supported, giving dz/2 complex factors.
        let Some(m) = candidates(&z.algebra, rng)
            .into_iter()
            .map(|x| z.algebra.min_poly(&x))
            .find(|m| m.degree() == Some(dz))
        else {
            return Ok(Outcome::Retry);
        };
        let real_roots = count_real_roots(&m)?;
        if real_roots > 0 || dz % 2 != 0 {
            return Err(AlgebraError::UnsupportedCenter { degree: dz, real_roots });
        }
        return Ok(match size_for(dim_f, dz, RealKind::C) {
            Outcome::Done(v) => Outcome::Done(v.repeat(dz / 2)),
            Outcome::Retry => Outcome::Retry,
        });
    }
    if dz != 1 || dd != 4 {
        return Ok(Outcome::Retry);
    }
    // Quaternion algebra (a, b)_ℚ: trace-zero x with x² = a, y anticommuting
    // with x, y² = b. It is ℍ at the real place iff a < 0 and b < 0.
    let Some(x) = (0..4).map(|i| d.basis_vector(i)).find(|v| scalar_of(d, v).is_none()) else {
        return Ok(Outcome::Retry);
    };
    let m = d.min_poly(&x);
    if m.degree() != Some(2) {
        return Ok(Outcome::Retry);
    }
    let half_trace = -&m.coeffs()[1] / rat(2);
    let x0: Element = x.iter().zip(d.unit()).map(|(xi, ui)| xi - &half_trace * ui).collect();
    let Some(a) = scalar_of(d, &d.mul(&x0, &x0)) else {
        return Ok(Outcome::Retry);
    };
    let x0s = sparse::from_dense(&x0);
    let mut rref = Rref::new(4);
    let cols: Vec<SparseVec> = (0..4)
        .map(|j| {
            let ej = [(j, Rational::one())];
            let l = d.mul_sparse(&x0s, &ej);
            let r = d.mul_sparse(&ej, &x0s);
            sparse::sub_scaled(&l, &rat(-1), &r)
        })
        .collect();
    for r in 0..4 {
        let row: SparseVec = cols
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.iter().find(|(k, _)| *k == r).map(|(_, v)| (j, v.clone())))
            .collect();
        rref.insert(&row);
    }
    let Some(y) = rref.kernel().into_iter().next() else {
        return Ok(Outcome::Retry);
    };
    let y = sparse::to_dense(&y, 4);
    let Some(b) = scalar_of(d, &d.mul(&y, &y)) else {
        return Ok(Outcome::Retry);
    };
    Ok(if a.is_negative() && b.is_negative() {
        size_for(dim_f, 4, RealKind::H)
    } else {
        size_for(dim_f, 1, RealKind::R)
    })
}
