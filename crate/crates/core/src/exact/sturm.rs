use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactError, RatPoly};

/// Number of distinct real roots of a squarefree polynomial, via a Sturm
/// sequence over ℤ built from sign-corrected pseudo-remainders.
pub fn count_real_roots(p: &RatPoly) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(ExactError::NotSquarefree);
    }
    let seq = sturm_sequence(&p.primitive_integer());
    let at_neg = sign_changes(seq.iter().map(|q| {
        let lc = q.last().unwrap().signum();
        if (q.len() - 1) % 2 == 1 {
            -lc
        } else {
            lc
        }
    }));
    let at_pos = sign_changes(seq.iter().map(|q| q.last().unwrap().signum()));
    Ok(at_neg - at_pos)
}

fn sign_changes(signs: impl Iterator<Item = BigInt>) -> usize {
    let mut prev: Option<bool> = None;
    let mut count = 0;
    for s in signs {
        if s.is_zero() {
            continue;
        }
        let pos = s.is_positive();
        if prev.is_some_and(|p| p != pos) {
            count += 1;
        }
        prev = Some(pos);
    }
    count
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content_reduce(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`, computed in ℤ[x].
fn pseudo_rem(a: &[BigInt], d: &[BigInt]) -> (Vec<BigInt>, BigInt) {
    let dd = d.len() - 1;
    let lc = d[dd].clone();
    let mut r = a.to_vec();
    let steps = a.len().saturating_sub(dd);
    let mut mult = BigInt::from(1);
    for _ in 0..steps {
        r = trim(r);
        if r.len() < d.len() {
            for c in r.iter_mut() {
                *c *= &lc;
            }
            mult *= &lc;
            continue;
        }
        let shift = r.len() - d.len();
        let top = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        mult *= &lc;
        for (i, dc) in d.iter().enumerate() {
            r[shift + i] -= &top * dc;
        }
    }
    (trim(r), mult)
}

fn sturm_sequence(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let deriv: Vec<BigInt> = trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect());
    let mut seq = vec![p.to_vec()];
    if deriv.is_empty() {
        return seq;
    }
    seq.push(content_reduce(deriv));
    loop {
        let n = seq.len();
        let (r, mult) = pseudo_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        // Next term is -rem up to a positive factor; `mult` may be negative.
        let flip = mult.is_positive();
        let r = content_reduce(r);
        let r: Vec<BigInt> = if flip { r.into_iter().map(|c| -c).collect() } else { r };
        seq.push(r);
    }
    seq
}
