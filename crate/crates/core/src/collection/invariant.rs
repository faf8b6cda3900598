use num_traits::Zero;

use super::{BaseObject, Cell, CollectionError, EndTag};
use crate::algebra::{
    fixed_subalgebra, matrix_algebra, quaternions, rationals, tensor, AlgebraAutomorphism, QAlgebra, Subalgebra,
};
use crate::exact::sparse::{self, SparseVec};
use crate::symrep::irrep_matrices;

/// Slot dimensions of `B = ⊗_j End(V_{α_j}) ⊗ M_{dim ρ}(ℚ)`; the last slot
/// is the matrix algebra.
fn slot_dims(tags: &[EndTag], rho_dim: usize) -> Vec<usize> {
    tags.iter()
        .map(|t| t.algebra_dim())
        .chain(std::iter::once(rho_dim * rho_dim))
        .collect()
}

fn decode(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (o, d) in out.iter_mut().zip(dims).rev() {
        *o = idx % d;
        idx /= d;
    }
    out
}

fn encode(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (x, d)| acc * d + x)
}

/// The tensor algebra `B` of a cell.
pub fn cell_tensor_algebra(base: &[BaseObject], cell: &Cell) -> Result<QAlgebra, CollectionError> {
    let q = rationals();
    let hq = quaternions();
    let m = matrix_algebra(cell.irrep.dimension);
    let mut factors: Vec<&QAlgebra> = cell
        .alpha
        .entries()
        .iter()
        .map(|&a| match base[a].end_algebra {
            EndTag::Q => &q,
            EndTag::HQ => &hq,
        })
        .collect();
    factors.push(&m);
    Ok(tensor(&factors)?)
}

/// Automorphisms of `B` for the Young generators of the cell's stabilizer:
/// swap of tensor slots `left, left+1` composed with conjugation by `ρ(h)`
/// on the matrix slot.
pub fn cell_generators(base: &[BaseObject], cell: &Cell) -> Result<Vec<AlgebraAutomorphism>, CollectionError> {
    let tags: Vec<EndTag> = cell.alpha.entries().iter().map(|&a| base[a].end_algebra).collect();
    let d = cell.irrep.dimension;
    let dims = slot_dims(&tags, d);
    let total: usize = dims.iter().product();
    let last = dims.len() - 1;
    let mut out = Vec::new();
    for (g, r) in irrep_matrices(&cell.stab, &cell.irrep)? {
        let rinv = r.inverse().expect("representation matrices are invertible");
        let images: Vec<SparseVec> = (0..total)
            .map(|idx| {
                let mut digits = decode(idx, &dims);
                digits.swap(g.left, g.left + 1);
                let (a, b) = (digits[last] / d, digits[last] % d);
                // ρ E_ab ρ⁻¹ = Σ_{c,e} ρ[c][a] ρ⁻¹[b][e] E_ce
                let mut img: SparseVec = Vec::new();
                for c in 0..d {
                    let rc = r.get(c, a);
                    if rc.is_zero() {
                        continue;
                    }
                    for e in 0..d {
                        let re = rinv.get(b, e);
                        if re.is_zero() {
                            continue;
                        }
                        digits[last] = c * d + e;
                        img.push((encode(&digits, &dims), rc * re));
                    }
                }
                sparse::collect_terms(img)
            })
            .collect();
        out.push(AlgebraAutomorphism::from_images(total, images));
    }
    Ok(out)
}

/// `(⊗_j End(V_{α_j}) ⊗ End(V_ρ))^{H_α}` as a subalgebra of the tensor
/// algebra. Every generator is verified to be an automorphism.
pub fn invariant_algebra(base: &[BaseObject], cell: &Cell) -> Result<Subalgebra, CollectionError> {
    let b = cell_tensor_algebra(base, cell)?;
    let gens = cell_generators(base, cell)?;
    Ok(fixed_subalgebra(&b, &gens)?)
}
