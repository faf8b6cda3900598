//! Property tests of the engine invariants. Each property is checked
//! against a reference computed in this file by a different route.

use std::collections::BTreeSet;

use proptest::prelude::*;

use sodkit::algebra::{
    classify_real, classify_real_oracle, direct_product, matrix_algebra, polynomial_quotient, quaternions, rationals,
    tensor, AlgebraJson, QAlgebra,
};
use sodkit::brauer::{motive_cancel, motive_iso, BrauerClass, Motive};
use sodkit::collection::{
    build_report, build_report_with, complex_rank, enumerate_cells, nondecreasing_indices, CollectionReport,
    ReportOptions,
};
use sodkit::exact::{factor_over_q, rat, RatMatrix, RatPoly, Rational};
use sodkit::symrep::{compare, nd, real_irreps, stabilizer, MultiIndex};
use sodkit::verify::{AxiomRegistry, Verdict, Verifier};

fn poly_strategy() -> impl Strategy<Value = RatPoly> {
    (1usize..=3)
        .prop_flat_map(|deg| {
            (
                prop::collection::vec(-5i64..=5, deg),
                prop_oneof![Just(1i64), Just(-2), Just(3)],
            )
        })
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            RatPoly::from_i64(&c)
        })
}

/// Rational roots by the rational root test on the integer primitive form.
fn has_rational_root(p: &RatPoly) -> bool {
    let ints = p.primitive_integer();
    let to_i = |b: &num_bigint::BigInt| -> i64 { b.try_into().expect("small coefficients") };
    let c0 = to_i(&ints[0]);
    let cn = to_i(ints.last().unwrap());
    if c0 == 0 {
        return true;
    }
    let divisors = |n: i64| (1..=n.abs()).filter(move |d| n % d == 0);
    for a in divisors(c0) {
        for b in divisors(cn) {
            for s in [1, -1] {
                if p.eval(&Rational::new((s * a).into(), b.into())) == rat(0) {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factors_reassemble(fs in prop::collection::vec(poly_strategy(), 1..=3), rep in 1usize..=2) {
        let mut p = RatPoly::one();
        for f in &fs {
            p = &p * f;
        }
        p = &p * &fs[0].pow(rep as u32 - 1);
        let factors = factor_over_q(&p).unwrap();
        let mut q = RatPoly::one();
        let mut degree = 0;
        for (g, e) in &factors {
            prop_assert!(g.is_monic());
            // Inputs are built from factors of degree ≤ 3, where irreducible
            // is the same as having no rational root (or being linear).
            prop_assert!(g.degree() == Some(1) || !has_rational_root(g), "{g} reducible");
            q = &q * &g.pow(*e as u32);
            degree += g.degree().unwrap() * e;
        }
        prop_assert_eq!(q, p.monic());
        prop_assert_eq!(Some(degree), p.degree());
        for (i, (a, _)) in factors.iter().enumerate() {
            for (b, _) in &factors[i + 1..] {
                prop_assert_eq!(a.gcd(b).degree(), Some(0));
            }
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(
        upper in prop::collection::vec(-4i64..=4, 10),
        p_upper in prop::collection::vec(-3i64..=3, 6),
        diag_sign in prop::collection::vec(prop_oneof![Just(1i64), Just(-1)], 4),
    ) {
        let mut s = RatMatrix::zeros(4, 4);
        let mut k = 0;
        for i in 0..4 {
            for j in i..4 {
                s.set(i, j, rat(upper[k]));
                s.set(j, i, rat(upper[k]));
                k += 1;
            }
        }
        // Unit upper-triangular times a sign diagonal: invertible.
        let mut p = RatMatrix::identity(4);
        let mut k = 0;
        for (i, &sign) in diag_sign.iter().enumerate() {
            p.set(i, i, rat(sign));
            for j in i + 1..4 {
                p.set(i, j, rat(p_upper[k]));
                k += 1;
            }
        }
        let congruent = &(&p.transpose() * &s) * &p;
        prop_assert_eq!(congruent.signature().unwrap(), s.signature().unwrap());
        let (pos, neg, zero) = s.signature().unwrap();
        prop_assert_eq!(pos + neg + zero, 4);
        prop_assert_eq!(pos + neg, s.rank());
    }

    #[test]
    fn diagonal_signature_counts_signs(d in prop::collection::vec(-3i64..=3, 1..=6)) {
        let m = RatMatrix::diagonal(&d.iter().map(|x| rat(*x)).collect::<Vec<_>>());
        let expect = (
            d.iter().filter(|x| **x > 0).count(),
            d.iter().filter(|x| **x < 0).count(),
            d.iter().filter(|x| **x == 0).count(),
        );
        prop_assert_eq!(m.signature().unwrap(), expect);
    }
}

fn motive_strategy(modulus: u64, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..modulus, 0..=max_len)
}

fn counts_equal(x: &[u64], y: &[u64]) -> bool {
    let mut a = x.to_vec();
    let mut b = y.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn motive_iso_is_an_equivalence(
        m in 2u64..=6,
        seeds in prop::collection::vec(prop::collection::vec(0u64..1000, 0..=4), 3),
        perm_shift in 0usize..4,
    ) {
        let [x, y, z]: [Vec<u64>; 3] = seeds
            .into_iter()
            .map(|v| v.into_iter().map(|c| c % m).collect())
            .collect::<Vec<_>>()
            .try_into()
            .unwrap();
        let mo = |v: &[u64]| Motive::from_values(m, v.iter().copied());
        let mut xp = x.clone();
        if !xp.is_empty() {
            let k = perm_shift % xp.len();
            xp.rotate_left(k);
        }
        prop_assert!(motive_iso(&mo(&x), &mo(&xp)));
        prop_assert_eq!(motive_iso(&mo(&x), &mo(&y)), motive_iso(&mo(&y), &mo(&x)));
        if motive_iso(&mo(&x), &mo(&y)) && motive_iso(&mo(&y), &mo(&z)) {
            prop_assert!(motive_iso(&mo(&x), &mo(&z)));
        }
        prop_assert_eq!(motive_iso(&mo(&x), &mo(&y)), counts_equal(&x, &y));
    }

    #[test]
    fn motive_json_round_trip(x in motive_strategy(6, 6)) {
        let m = Motive::from_values(6, x);
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Motive>(&text).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cancellation_over_z6(
        x in motive_strategy(6, 5),
        other in motive_strategy(6, 5),
        c in motive_strategy(6, 4),
        same in any::<bool>(),
    ) {
        // Half the cases compare x with a reordering of itself.
        let y = if same { x.iter().rev().copied().collect() } else { other };
        let mo = |v: &[u64]| Motive::from_values(6, v.iter().copied());
        prop_assert_eq!(motive_cancel(&mo(&x), &mo(&y), &mo(&c)), counts_equal(&x, &y));
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn partitions_brute(m: usize, max_part: usize) -> usize {
    if m == 0 {
        return 1;
    }
    (1..=max_part.min(m)).map(|k| partitions_brute(m - k, k)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn nd_and_order(a in prop::collection::vec(0usize..4, 1..=6), b_seed in prop::collection::vec(0usize..4, 6), shift in 0usize..6) {
        let alpha = MultiIndex::new(a.clone());
        let beta = MultiIndex::new(b_seed[..a.len()].to_vec());
        let n = nd(&alpha);
        prop_assert!(n.is_nondecreasing());
        prop_assert!(counts_equal(
            &n.entries().iter().map(|x| *x as u64).collect::<Vec<_>>(),
            &a.iter().map(|x| *x as u64).collect::<Vec<_>>()
        ));
        let len = a.len();
        let sigma: Vec<usize> = (0..len).map(|i| (i + shift) % len).collect();
        prop_assert_eq!(&nd(&alpha.permute(&sigma)), &n);
        let ab = compare(&alpha, &beta).unwrap();
        prop_assert_eq!(ab, compare(&beta, &alpha).unwrap().reverse());
        prop_assert_eq!(compare(&alpha, &alpha).unwrap(), std::cmp::Ordering::Equal);
        // nd(α) is the ⊳-least element of its orbit.
        prop_assert_ne!(compare(&alpha, &n).unwrap(), std::cmp::Ordering::Less);
    }

    #[test]
    fn orbit_stabilizer(a in prop::collection::vec(0usize..3, 1..=5)) {
        let alpha = nd(&MultiIndex::new(a));
        let n = alpha.len();
        let orbit: BTreeSet<Vec<usize>> = all_permutations(n)
            .iter()
            .map(|s| alpha.permute(s).entries().to_vec())
            .collect();
        let h = stabilizer(&alpha).unwrap();
        prop_assert_eq!(orbit.len() as u128 * h.order(), factorial(n));
        // Irreps of a Young subgroup: Σ dim² = |H|, count = Π p(m_v).
        let irreps = real_irreps(&h);
        let sum_sq: u128 = irreps.iter().map(|r| (r.dimension as u128).pow(2)).sum();
        prop_assert_eq!(sum_sq, h.order());
        let brute: usize = h.multiplicities().iter().map(|m| partitions_brute(*m, *m)).product();
        prop_assert_eq!(irreps.len(), brute);
    }
}

#[test]
fn cell_count_identity() {
    for n in 1..=4 {
        for base in 1..=4 {
            let cells = enumerate_cells(n, base).len();
            let brute: usize = nondecreasing_indices(n, base)
                .iter()
                .map(|a| {
                    stabilizer(a)
                        .unwrap()
                        .multiplicities()
                        .iter()
                        .map(|m| partitions_brute(*m, *m))
                        .product::<usize>()
                })
                .sum();
            assert_eq!(cells, brute, "n={n} base={base}");
            // Every irrep of a Young subgroup is realized over ℚ.
            assert_eq!(complex_rank(n, base), cells);
        }
    }
}

fn check_dimension_conservation(rep: &CollectionReport) {
    for c in &rep.cells {
        let total: usize = c.factors.iter().map(|f| f.dim_q()).sum();
        assert_eq!(total, c.algebra_dim, "{} {}", c.alpha, c.irrep_label());
    }
}

#[test]
fn invariant_algebras_decompose_without_loss() {
    for (degree, class, n) in [
        (2, BrauerClass::HAMILTON, 3),
        (4, BrauerClass::HAMILTON, 2),
        (3, BrauerClass::SPLIT, 3),
    ] {
        check_dimension_conservation(&build_report(degree, class, n).unwrap());
    }
}

fn generalized_quaternions(a: i64, b: i64) -> QAlgebra {
    let table = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (a, 0), (1, 3), (a, 2)],
        [(1, 2), (-1, 3), (b, 0), (-b, 1)],
        [(1, 3), (-a, 2), (b, 1), (-a * b, 0)],
    ];
    let mut c = vec![rat(0); 64];
    for (i, row) in table.iter().enumerate() {
        for (j, (coef, k)) in row.iter().enumerate() {
            c[(i * 4 + j) * 4 + k] = rat(*coef);
        }
    }
    QAlgebra::new(4, &c, vec![rat(1), rat(0), rat(0), rat(0)]).unwrap()
}

fn pool() -> Vec<QAlgebra> {
    vec![
        rationals(),
        quaternions(),
        matrix_algebra(2),
        polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap(),
        polynomial_quotient(&RatPoly::from_i64(&[1, 1, 1])).unwrap(),
        generalized_quaternions(-1, -3),
        generalized_quaternions(2, -1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn classifiers_agree_on_products(i in 0usize..7, j in 0usize..7, op in 0usize..3, seed in any::<u64>()) {
        let p = pool();
        let a = match op {
            0 => p[i].clone(),
            1 => direct_product(&p[i], &p[j]),
            _ => tensor(&[&p[i], &p[j]]).unwrap(),
        };
        let primary = classify_real(&a).unwrap();
        let oracle = classify_real_oracle(&a, seed).unwrap();
        prop_assert_eq!(&primary.factors, &oracle.factors);
        let total: usize = primary.factors.iter().map(|f| f.dim_q()).sum();
        prop_assert_eq!(total, a.dim());
    }

    #[test]
    fn algebra_json_round_trip(i in 0usize..7, j in 0usize..7) {
        let p = pool();
        let a = direct_product(&p[i], &p[j]);
        let text = serde_json::to_string(&AlgebraJson::from(&a)).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(QAlgebra::try_from(&back).unwrap(), a);
    }
}

#[test]
fn report_json_round_trip() {
    for (degree, class, n) in [
        (2, BrauerClass::HAMILTON, 2),
        (3, BrauerClass::SPLIT, 2),
        (4, BrauerClass::HAMILTON, 1),
    ] {
        let rep = build_report(degree, class, n).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        assert_eq!(serde_json::from_str::<CollectionReport>(&text).unwrap(), rep);
    }
}

#[test]
fn report_independent_of_seed() {
    let opts = |seed| ReportOptions {
        seed,
        ..Default::default()
    };
    let a = build_report_with(2, BrauerClass::HAMILTON, 3, &opts(0)).unwrap();
    let b = build_report_with(2, BrauerClass::HAMILTON, 3, &opts(987_654)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn verdicts_reproducible_and_recheckable() {
    let opts = ReportOptions {
        max_n: 2,
        ..Default::default()
    };
    let first = Verifier::new(AxiomRegistry::standard(), opts).sweep().unwrap();
    let second = Verifier::new(AxiomRegistry::standard(), opts).sweep().unwrap();
    let a = serde_json::to_string(&first).unwrap();
    assert_eq!(a, serde_json::to_string(&second).unwrap());
    let parsed: Vec<Verdict> = serde_json::from_str(&a).unwrap();
    for v in &parsed {
        assert_eq!(v.holds, v.witness.holds(), "{}", v.claim);
    }
}
