//! Factorization over ℚ by the Zassenhaus method: factor modulo a small
//! prime, Hensel-lift to a modulus beyond the coefficient bound, then
//! recombine lifted factors by trial division over ℤ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ExactError, RatPoly};

/// Irreducible monic factors with multiplicities; the product of
/// `factor^multiplicity` equals `p` up to its leading coefficient.
/// Output is sorted by degree, then coefficients.
pub fn factor_over_q(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>, ExactError> {
    let parts = p.squarefree_decomposition()?;
    let mut out = Vec::new();
    for (part, mult) in parts {
        for g in factor_squarefree_int(&part.primitive_integer()) {
            out.push((RatPoly::from_integer_coeffs(&g).monic(), mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(out)
}

type IntPoly = Vec<BigInt>;
type ModPoly = Vec<u64>;

fn int_trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn int_deg(v: &IntPoly) -> usize {
    v.len().saturating_sub(1)
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    int_trim(out)
}

fn int_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    int_trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn int_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    int_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    int_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn primitive(a: &IntPoly) -> IntPoly {
    let g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return a.clone();
    }
    let g = if a.last().unwrap().is_negative() { -g } else { g };
    a.iter().map(|c| c / &g).collect()
}

/// Exact quotient over ℤ when `d` divides `a`.
fn int_exact_div(a: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    let dd = int_deg(d);
    if a.len() < d.len() {
        return None;
    }
    let lc = d.last().unwrap();
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + dd];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (i, c) in d.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    rem.iter().all(|c| c.is_zero()).then(|| int_trim(quot))
}

fn factor_squarefree_int(f: &IntPoly) -> Vec<IntPoly> {
    let f = int_trim(f.clone());
    if f.len() <= 1 {
        return Vec::new();
    }
    if f[0].is_zero() {
        let rest: IntPoly = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_int(&rest));
        return out;
    }
    if f.len() == 2 {
        return vec![primitive(&f)];
    }
    zassenhaus(&primitive(&f))
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp(p);
        let fbar = fp.reduce(f);
        if fp.gcd(&fbar, &fp.derivative(&fbar)).len() != 1 {
            continue;
        }
        let monic = fp.monic(&fbar);
        let factors = fp.factor(&monic, &mut rng);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, factors) = best.expect("no suitable prime for factorization");

    // Coefficients of lc * g for any factor g of f are below this bound.
    let n = int_deg(f);
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1 * 2 + 1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let lifted = lift_all(f, &factors, p, k, &modulus);
    recombine(f, lifted, &modulus)
}

fn lift_all(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32, modulus: &BigInt) -> Vec<IntPoly> {
    let lc = f.last().unwrap();
    if factors.len() == 1 {
        let inv = lc.extended_gcd(modulus).x.mod_floor(modulus);
        return vec![int_mod(&f.iter().map(|c| c * &inv).collect(), modulus)];
    }
    let fp = Fp(p);
    let a0 = factors[0].clone();
    let lc_p = lc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let mut b0 = vec![lc_p];
    for g in &factors[1..] {
        b0 = fp.mul(&b0, g);
    }
    let (a, b) = hensel_pair(f, &a0, &b0, p, k, modulus);
    let mut out = vec![a];
    out.extend(lift_all(&b, &factors[1..], p, k, modulus));
    out
}

/// Lifts `f ≡ a0 * b0 (mod p)` to `f ≡ a * b (mod p^k)`, `a` monic.
fn hensel_pair(f: &IntPoly, a0: &ModPoly, b0: &ModPoly, p: u64, k: u32, modulus: &BigInt) -> (IntPoly, IntPoly) {
    let fp = Fp(p);
    let (g, s, t) = fp.ext_gcd(a0, b0);
    debug_assert_eq!(g, vec![1]);
    let to_int = |v: &ModPoly| -> IntPoly { v.iter().map(|c| BigInt::from(*c)).collect() };
    let mut a = to_int(a0);
    let mut b = to_int(b0);
    let pb = BigInt::from(p);
    let mut pm = pb.clone();
    for _ in 1..k {
        let diff = int_sub(f, &int_mul(&a, &b));
        let e: IntPoly = diff.iter().map(|c| c / &pm).collect();
        let ep = fp.reduce(&e);
        let (q, r) = fp.div_rem(&fp.mul(&t, &ep), a0);
        let db = fp.add(&fp.mul(&s, &ep), &fp.mul(&q, b0));
        let grow = |x: &IntPoly, d: &ModPoly| -> IntPoly {
            let n = x.len().max(d.len());
            int_trim(
                (0..n)
                    .map(|i| x.get(i).cloned().unwrap_or_default() + &pm * BigInt::from(d.get(i).copied().unwrap_or(0)))
                    .collect(),
            )
        };
        a = grow(&a, &r);
        b = grow(&b, &db);
        pm *= &pb;
    }
    (int_mod(&a, modulus), int_mod(&b, modulus))
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), size) {
            let lc = cur.last().unwrap().clone();
            let mut g: IntPoly = vec![lc];
            for &i in &subset {
                g = int_mod(&int_mul(&g, &lifted[i]), modulus);
            }
            let g = primitive(&symmetric(&g, modulus));
            if let Some(q) = int_exact_div(&cur, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                cur = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x)
                    .collect();
            }
            None => size += 1,
        }
    }
    if cur.len() > 1 {
        out.push(primitive(&cur));
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Arithmetic in 𝔽_p[x] for small odd primes.
#[derive(Clone, Copy)]
struct Fp(u64);

impl Fp {
    fn trim(&self, mut v: ModPoly) -> ModPoly {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn reduce(&self, f: &IntPoly) -> ModPoly {
        let p = BigInt::from(self.0);
        self.trim(f.iter().map(|c| c.mod_floor(&p).to_u64().unwrap()).collect())
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let p = self.0;
        let mut r = 1;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    fn add(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.0)
                .collect(),
        )
    }

    fn sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + self.0 - b.get(i).copied().unwrap_or(0)) % self.0)
                .collect(),
        )
    }

    fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.0;
            }
        }
        self.trim(out)
    }

    fn monic(&self, a: &ModPoly) -> ModPoly {
        let inv = self.inv(*a.last().unwrap());
        a.iter().map(|c| c * inv % self.0).collect()
    }

    fn div_rem(&self, a: &ModPoly, d: &ModPoly) -> (ModPoly, ModPoly) {
        let p = self.0;
        let dd = d.len() - 1;
        if a.len() <= dd {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(d[dd]);
        let mut rem = a.clone();
        let mut quot = vec![0u64; a.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * inv % p;
            if c == 0 {
                continue;
            }
            for (i, dc) in d.iter().enumerate() {
                rem[k + i] = (rem[k + i] + p - c * dc % p) % p;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (self.trim(quot), self.trim(rem))
    }

    fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.div_rem(&a, &b).1;
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            self.monic(&a)
        }
    }

    fn ext_gcd(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let inv = vec![self.inv(*r0.last().unwrap())];
        (self.mul(&r0, &inv), self.mul(&s0, &inv), self.mul(&t0, &inv))
    }

    fn derivative(&self, a: &ModPoly) -> ModPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| (i as u64 % self.0) * c % self.0)
                .collect(),
        )
    }

    fn powmod(&self, base: &ModPoly, exp: &BigUint, m: &ModPoly) -> ModPoly {
        let mut result = vec![1u64];
        let base = self.div_rem(base, m).1;
        for i in (0..exp.bits()).rev() {
            result = self.div_rem(&self.mul(&result, &result), m).1;
            if exp.bit(i) {
                result = self.div_rem(&self.mul(&result, &base), m).1;
            }
        }
        result
    }

    /// Complete factorization of a monic squarefree polynomial.
    fn factor(&self, f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let p = BigUint::from(self.0);
        let x = vec![0u64, 1];
        let mut rest = f.clone();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut i = 1;
        while rest.len() > 2 * i {
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.div_rem(&h, &rest).1;
                out.extend(self.equal_degree(&g, i, rng));
            }
            i += 1;
        }
        if rest.len() > 1 {
            out.push(rest);
        }
        out
    }

    fn equal_degree(&self, g: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let n = g.len() - 1;
        if n == d {
            return vec![g.clone()];
        }
        let exp = (BigUint::from(self.0).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: ModPoly = self.trim((0..n).map(|_| rng.gen_range(0..self.0)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &exp, g), &vec![1]);
            let u = self.gcd(&b, g);
            if u.len() > 1 && u.len() < g.len() {
                let v = self.div_rem(g, &u).0;
                let mut out = self.equal_degree(&u, d, rng);
                out.extend(self.equal_degree(&self.monic(&v), d, rng));
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(c: &[i64]) -> Vec<(RatPoly, usize)> {
        factor_over_q(&RatPoly::from_i64(c)).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            fac(&[-1, 0, 1]),
            vec![(RatPoly::from_i64(&[-1, 1]), 1), (RatPoly::from_i64(&[1, 1]), 1)]
        );
        assert_eq!(fac(&[1, 0, 1]), vec![(RatPoly::from_i64(&[1, 0, 1]), 1)]);
        assert_eq!(
            fac(&[-1, 0, 0, 0, 1]),
            vec![
                (RatPoly::from_i64(&[-1, 1]), 1),
                (RatPoly::from_i64(&[1, 1]), 1),
                (RatPoly::from_i64(&[1, 0, 1]), 1)
            ]
        );
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factor_over_q(&RatPoly::zero()), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over ℚ but splits modulo every prime.
        assert_eq!(fac(&[1, 0, -10, 0, 1]).len(), 1);
        // (x^2 - 2)(x^2 - 3)(x + 5)^2 with a non-monic factor 3x - 1.
        let p = &(&(&RatPoly::from_i64(&[-2, 0, 1]) * &RatPoly::from_i64(&[-3, 0, 1]))
            * &RatPoly::from_i64(&[5, 1]).pow(2))
            * &RatPoly::from_i64(&[-1, 3]);
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.contains(&(RatPoly::from_i64(&[5, 1]), 2)));
        assert!(f.contains(&(RatPoly::new(vec![crate::exact::ratio(-1, 3), crate::exact::rat(1)]), 1)));
    }
}
