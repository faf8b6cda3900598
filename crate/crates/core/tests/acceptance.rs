//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Reference values are recomputed here by independent means where the
//! engine's own answer would otherwise be compared to itself: complex ranks
//! by brute-force partition enumeration, rational points from the class
//! directly, motive isomorphism from class counts.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use sodkit::algebra::{
    classify_real, classify_real_oracle, direct_product, fixed_subalgebra, matrix_algebra, polynomial_quotient,
    quaternions, tensor, AlgebraAutomorphism, QAlgebra, RealKind, RealSimpleFactor,
};
use sodkit::brauer::{motive_cancel, motive_iso, sym_power_has_point, BrauerClass, CsaDescriptor, Motive};
use sodkit::collection::{
    base_collection, build_report, enumerate_cells, invariant_algebra, CollectionReport, EndTag, VarietyClass,
};
use sodkit::exact::{rat, RatMatrix, RatPoly};
use sodkit::verify::{ClaimLevel, Verifier, Witness, CLAIM_SPLIT_CUBE_ENDS};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Box<dyn FnOnce(&mut Verifier) -> Check>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || {
        format!("took {:.2}s, limit {:.0}s", t.as_secs_f64(), limit.as_secs_f64())
    })
}

/// Number of partitions of `m` by direct recursion on the largest part.
fn partitions_brute(m: usize, max_part: usize) -> usize {
    if m == 0 {
        return 1;
    }
    (1..=max_part.min(m)).map(|k| partitions_brute(m - k, k)).sum()
}

/// `Σ_α Π_v p(m_v)` over multisets of size `n` from `base` elements.
fn complex_rank_brute(n: usize, base: usize) -> usize {
    fn go(n: usize, base: usize, first: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (first..base)
            .flat_map(|a| {
                go(n - 1, base, a).into_iter().map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
            })
            .collect()
    }
    go(n, base, 0)
        .iter()
        .map(|alpha| {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for a in alpha {
                *counts.entry(*a).or_default() += 1;
            }
            counts.values().map(|m| partitions_brute(*m, *m)).product::<usize>()
        })
        .sum()
}

fn c1_base_collections() -> Check {
    let t = Instant::now();
    let tags = |d, c| -> Result<Vec<EndTag>, String> {
        Ok(base_collection(d, c)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|b| b.end_algebra)
            .collect())
    };
    ensure(tags(2, BrauerClass::HAMILTON)? == [EndTag::Q, EndTag::HQ], || {
        "conic pattern".into()
    })?;
    for r in 1..=3 {
        let expect: Vec<EndTag> = (0..2 * r)
            .map(|i| if i % 2 == 0 { EndTag::Q } else { EndTag::HQ })
            .collect();
        let got = tags(2 * r, BrauerClass::HAMILTON)?;
        ensure(got == expect, || format!("degree {}: {got:?}", 2 * r))?;
    }
    for d in 1..=6 {
        let got = tags(d, BrauerClass::SPLIT)?;
        ensure(got == vec![EndTag::Q; d], || format!("split degree {d}: {got:?}"))?;
    }
    within(t, Duration::from_secs(1))?;
    Ok(format!("{:.3}s", t.elapsed().as_secs_f64()))
}

fn classify_both(name: &str, a: &QAlgebra) -> Result<Vec<RealSimpleFactor>, String> {
    let p = classify_real(a).map_err(|e| format!("{name}: primary {e}"))?;
    let o = classify_real_oracle(a, 0).map_err(|e| format!("{name}: oracle {e}"))?;
    ensure(p.factors == o.factors, || {
        format!("{name}: {:?} vs {:?}", p.factors, o.factors)
    })?;
    Ok(p.factors)
}

/// `(a, b)_ℚ` on the basis `1, i, j, k` with `i² = a`, `j² = b`, `k = ij = -ji`.
fn generalized_quaternions(a: i64, b: i64) -> QAlgebra {
    // (left, right) -> (coefficient, basis index)
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
    QAlgebra::new(4, &c, vec![rat(1), rat(0), rat(0), rat(0)]).expect("associative")
}

fn c2_classifier_oracle() -> Check {
    let t = Instant::now();
    let h = quaternions();
    let m2 = matrix_algebra(2);
    let mut corpus: Vec<(String, QAlgebra)> = (1..=4).map(|k| (format!("M_{k}(Q)"), matrix_algebra(k))).collect();
    corpus.push(("H_Q".into(), h.clone()));
    corpus.push(("M_2(Q)⊗H_Q".into(), tensor(&[&m2, &h]).unwrap()));
    corpus.push((
        "Q(i)".into(),
        polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap(),
    ));
    corpus.push((
        "Q(ζ₃)".into(),
        polynomial_quotient(&RatPoly::from_i64(&[1, 1, 1])).unwrap(),
    ));
    let qi = polynomial_quotient(&RatPoly::from_i64(&[1, 0, 1])).unwrap();
    corpus.push((
        "Q[x]/(x⁴+1)".into(),
        polynomial_quotient(&RatPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap(),
    ));
    corpus.push((
        "Q[C4]".into(),
        polynomial_quotient(&RatPoly::from_i64(&[-1, 0, 0, 0, 1])).unwrap(),
    ));
    corpus.push(("H_Q⊗Q(i)".into(), tensor(&[&h, &qi]).unwrap()));
    corpus.push(("H_Q×M_2(Q)".into(), direct_product(&h, &m2)));
    for (a, b) in [(-1, -3), (-2, -5), (2, 5), (-1, 3)] {
        corpus.push((format!("({a},{b})_Q"), generalized_quaternions(a, b)));
    }
    let mut fixed = 0;
    for degree in 2..=4 {
        for class in [VarietyClass::Split, VarietyClass::Quaternion] {
            if class == VarietyClass::Quaternion && degree % 2 != 0 {
                continue;
            }
            let base = base_collection(degree, class.brauer()).unwrap();
            for n in 1..=3 {
                for cell in enumerate_cells(n, base.len()) {
                    let sub = invariant_algebra(&base, &cell).map_err(|e| e.to_string())?;
                    let name = format!("{degree}/{class}/{} {}", cell.alpha, cell.irrep);
                    if !corpus.iter().any(|(_, a)| *a == sub.algebra) {
                        corpus.push((name, sub.algebra));
                        fixed += 1;
                    }
                }
            }
        }
    }
    ensure(corpus.len() >= 20, || {
        format!("corpus has only {} algebras", corpus.len())
    })?;
    for (name, a) in &corpus {
        classify_both(name, a)?;
    }
    within(t, Duration::from_secs(30))?;
    Ok(format!(
        "{} algebras ({fixed} distinct fixed subalgebras), 0 mismatches, {:.2}s",
        corpus.len(),
        t.elapsed().as_secs_f64()
    ))
}

fn c3_quaternion_square() -> Check {
    let t = Instant::now();
    let h = quaternions();
    let hh = tensor(&[&h, &h]).unwrap();
    let mut swap = RatMatrix::zeros(16, 16);
    for a in 0..4 {
        for b in 0..4 {
            swap.set(4 * b + a, 4 * a + b, rat(1));
        }
    }
    let sub = fixed_subalgebra(&hh, &[AlgebraAutomorphism::from_matrix(&swap)]).map_err(|e| e.to_string())?;
    ensure(sub.dim() == 10, || format!("dimension {}", sub.dim()))?;
    let f = classify_both("(H⊗H)^S2", &sub.algebra)?;
    let expect = vec![
        RealSimpleFactor::new(RealKind::R, 1),
        RealSimpleFactor::new(RealKind::R, 3),
    ];
    ensure(f == expect, || format!("factors {f:?}"))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("dim 10, [R(1), R(3)], {:.3}s", t.elapsed().as_secs_f64()))
}

fn report(v: &mut Verifier, degree: usize, class: VarietyClass, n: usize) -> Result<CollectionReport, String> {
    v.report(degree, class, n)
        .cloned()
        .map_err(|e| format!("{degree}/{class}/n={n}: {e}"))
}

fn c4_split_purity() -> Check {
    let t = Instant::now();
    let mut count = 0;
    for degree in 2..=5 {
        for n in 1..=3 {
            let rep = build_report(degree, BrauerClass::SPLIT, n).map_err(|e| e.to_string())?;
            ensure(!rep.naive_kinds().contains(&RealKind::H), || {
                format!("H block at {degree}/n={n}")
            })?;
            ensure(rep.rdim == 0, || format!("rdim {} at {degree}/n={n}", rep.rdim))?;
            count += 1;
        }
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!(
        "{count} reports, no H block, rdim 0, {:.2}s",
        t.elapsed().as_secs_f64()
    ))
}

fn c5_conic_rdim(v: &mut Verifier) -> Check {
    let mut witnesses = Vec::new();
    for n in 1..=3 {
        let rep = report(v, 2, VarietyClass::Quaternion, n)?;
        ensure(rep.rdim == 1, || format!("n={n}: rdim {}", rep.rdim))?;
        let b = rep
            .blocks()
            .into_iter()
            .find(|b| b.end_type == RealKind::H)
            .ok_or_else(|| format!("n={n}: no H block"))?;
        witnesses.push(format!("n={n}: {} {}", b.alpha, b.irrep));
    }
    Ok(format!("rdim 1; H witnesses {}", witnesses.join("; ")))
}

fn c6_rank_bookkeeping(v: &mut Verifier) -> Check {
    let mut checked = 0;
    for degree in 2..=6 {
        for class in [VarietyClass::Split, VarietyClass::Quaternion] {
            if class == VarietyClass::Quaternion && degree % 2 != 0 {
                continue;
            }
            let base_len = degree;
            for n in 1..=3 {
                let rep = report(v, degree, class, n)?;
                let brute = complex_rank_brute(n, base_len);
                ensure(rep.rank_complex == brute, || {
                    format!("{degree}/{class}/n={n}: rank_complex {} vs {brute}", rep.rank_complex)
                })?;
                if !rep.dedup_ambiguous {
                    ensure(rep.r_consistent + 2 * rep.d_consistent == rep.rank_complex, || {
                        format!(
                            "{degree}/{class}/n={n}: r'={} d'={} rank {}",
                            rep.r_consistent, rep.d_consistent, rep.rank_complex
                        )
                    })?;
                    checked += 1;
                }
            }
        }
    }
    let rep = report(v, 2, VarietyClass::Quaternion, 2)?;
    ensure(
        rep.rank_complex == 5 && rep.rank_consistent == 5 && rep.d == 0 && rep.rank_real_naive == 7,
        || {
            format!(
                "conic n=2: complex {} consistent {} d {} naive {}",
                rep.rank_complex, rep.rank_consistent, rep.d, rep.rank_real_naive
            )
        },
    )?;
    let finding: Vec<String> = rep
        .alpha_groups
        .iter()
        .filter(|g| g.naive_blocks != g.q_r + g.q_h + g.q_c)
        .map(|g| {
            format!(
                "{}: {} -> {} ({:?})",
                g.alpha,
                g.naive_blocks,
                g.q_r + g.q_h + g.q_c,
                g.rule
            )
        })
        .collect();
    ensure(!finding.is_empty(), || "conic n=2: no identification logged".into())?;
    Ok(format!(
        "r'+2d'=rank on {checked} reports; conic n=2 naive 7 -> 5, dedup {}",
        finding.join(", ")
    ))
}

/// Isomorphism from counts of each class among the first `modulus`
/// multiples; for ℤ/2 and ℤ/6 equal counts of classes suffice.
fn iso_by_counts(x: &[u64], y: &[u64], modulus: u64) -> bool {
    let count = |v: &[u64]| {
        let mut c = vec![0usize; modulus as usize];
        for a in v {
            c[*a as usize] += 1;
        }
        c
    };
    x.len() == y.len() && count(x) == count(y)
}

fn multisets(size: usize, modulus: u64) -> Vec<Vec<u64>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in multisets(size - 1, modulus) {
        let lo = rest.last().copied().unwrap_or(0);
        for c in lo..modulus {
            let mut v = rest.clone();
            v.push(c);
            out.push(v);
        }
    }
    out
}

fn c7_motives() -> Check {
    let all: Vec<Vec<u64>> = (0..=4).flat_map(|s| multisets(s, 2)).collect();
    let mut pairs = 0;
    for x in &all {
        for y in &all {
            // Permute y so that storage order is not what is being compared.
            let mut y_rev = y.clone();
            y_rev.reverse();
            let got = motive_iso(
                &Motive::from_values(2, x.iter().copied()),
                &Motive::from_values(2, y_rev),
            );
            ensure(got == iso_by_counts(x, y, 2), || format!("iso {x:?} {y:?}"))?;
            pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let rand_motive = |rng: &mut ChaCha8Rng| -> Vec<u64> {
        let n = rng.gen_range(0..=5);
        (0..n).map(|_| rng.gen_range(0..6)).collect()
    };
    for case in 0..1000 {
        let x = rand_motive(&mut rng);
        // Half the cases start from a permutation of x to exercise the iso branch.
        let y = if case % 2 == 0 {
            let mut y = x.clone();
            y.rotate_left(x.len().min(1));
            y
        } else {
            rand_motive(&mut rng)
        };
        let c = rand_motive(&mut rng);
        let m = |v: &[u64]| Motive::from_values(6, v.iter().copied());
        let got = motive_cancel(&m(&x), &m(&y), &m(&c));
        ensure(got == iso_by_counts(&x, &y, 6), || format!("cancel {x:?} {y:?} {c:?}"))?;
    }
    Ok(format!(
        "{pairs} exhaustive Z/2 pairs, 1000 Z/6 cancellation cases, 0 failures"
    ))
}

fn c8_rdim_split_point(v: &mut Verifier) -> Check {
    let mut cases = 0;
    for degree in 2..=6 {
        for class in [VarietyClass::Split, VarietyClass::Quaternion] {
            if class == VarietyClass::Quaternion && degree % 2 != 0 {
                continue;
            }
            // A real Brauer–Severi variety has a point iff its class is split.
            let split = class == VarietyClass::Split;
            let point = split;
            for n in 1..=3 {
                let rep = report(v, degree, class, n)?;
                ensure((rep.rdim == 0) == split && split == point, || {
                    format!("{degree}/{class}/n={n}: rdim {}", rep.rdim)
                })?;
                cases += 1;
            }
            let verdict = v.check_rdim_split_point(degree, class).map_err(|e| e.to_string())?;
            ensure(verdict.holds, || format!("{degree}/{class}: verdict fails"))?;
        }
    }
    Ok(format!("{cases} (degree, class, n) cases"))
}

fn c9_sym_cube(v: &mut Verifier) -> Check {
    let mut rows = Vec::new();
    for degree in 4..=6 {
        for class in [VarietyClass::Split, VarietyClass::Quaternion] {
            if class == VarietyClass::Quaternion && degree % 2 != 0 {
                continue;
            }
            let a = CsaDescriptor::new(degree, class.brauer()).unwrap();
            let point = sym_power_has_point(&a, 3).map_err(|e| e.to_string())?;
            let rdim = report(v, degree, class, 3)?.rdim;
            let (want_point, want_rdim) = match class {
                VarietyClass::Split => (true, 0),
                VarietyClass::Quaternion => (false, 1),
            };
            ensure(point == want_point && rdim == want_rdim, || {
                format!("{degree}/{class}: point {point} rdim {rdim}")
            })?;
            let verdict = v.check_sym_cube_point(degree, class).map_err(|e| e.to_string())?;
            ensure(verdict.holds, || format!("{degree}/{class}: verdict fails"))?;
            rows.push(format!("{degree}{}", if point { "s" } else { "q" }));
        }
    }
    Ok(format!("cases {}", rows.join(" ")))
}

fn c10_remark_probe(v: &mut Verifier) -> Check {
    let verdicts = v.sweep().map_err(|e| e.to_string())?;
    let mut findings = Vec::new();
    for degree in [2, 3] {
        let r = verdicts
            .iter()
            .find(|r| r.claim == CLAIM_SPLIT_CUBE_ENDS && r.inputs.degree == Some(degree))
            .ok_or_else(|| format!("degree {degree}: no split n=3 verdict"))?;
        ensure(r.level == ClaimLevel::Remark && !r.notes.is_empty(), || {
            format!("degree {degree}: no note")
        })?;
        let Witness::SplitCubeEnds { naive, .. } = &r.witness else {
            return Err(format!("degree {degree}: wrong witness"));
        };
        findings.push(format!(
            "degree {degree}: R{} C{} H{}, C-type {}",
            naive.r,
            naive.c,
            naive.h,
            if naive.c > 0 { "present" } else { "absent" }
        ));
    }
    Ok(findings.join("; "))
}

fn main() {
    let mut v = Verifier::default();
    let criteria: Vec<Criterion> = vec![
        ("base collections", Box::new(|_| c1_base_collections())),
        ("classifier oracle equivalence", Box::new(|_| c2_classifier_oracle())),
        ("(H⊗H)^S2", Box::new(|_| c3_quaternion_square())),
        ("split purity", Box::new(|_| c4_split_purity())),
        ("non-split conic rdim", Box::new(c5_conic_rdim)),
        ("rank bookkeeping", Box::new(c6_rank_bookkeeping)),
        ("motive criterion and cancellation", Box::new(|_| c7_motives())),
        ("rdim 0 ⇔ split ⇔ point", Box::new(c8_rdim_split_point)),
        ("symmetric cube point vs rdim", Box::new(c9_sym_cube)),
        ("split n=3 remark probe", Box::new(c10_remark_probe)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| f(&mut v)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("acceptance {:>2} PASS {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {:>2} FAIL {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
