//! Claim-level checks over engine output.
//!
//! A [`Verdict`] carries a typed [`Witness`]; `holds` is always
//! `witness.holds()`, so a serialized verdict can be rechecked without the
//! engine. Theorem-level verdicts fail the sweep; remark-level verdicts only
//! record findings.

mod axioms;

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::RealKind;
use crate::brauer::{motive_iso, sym_power_has_point, BrauerClass, BrauerError, BsDescriptor, CsaDescriptor, Motive};
use crate::collection::{
    base_collection, build_report_with, CollectionError, CollectionReport, EndCounts, EndTag, ReportOptions,
    VarietyClass,
};

pub use axioms::{
    Axiom, AxiomRegistry, BS_POINT_SPLIT, CONIC_SQUARE_RATIONAL, GBS_POINT_INDEX, LANG_NISHIMURA, SYM_POWER_BIRATIONAL,
};

/// Largest `n` any check asks for.
pub const CHECKED_N: usize = 3;
pub const SWEEP_DEGREES: std::ops::RangeInclusive<usize> = 2..=6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("empty list of endomorphism algebras")]
    NoEnds,
    #[error("sym-cube check needs degree > 3, got {0}")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Collection(#[from] CollectionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimLevel {
    Theorem,
    Remark,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictInputs {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub class: Option<VarietyClass>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub n: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub ends: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub has_point: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdimRow {
    pub n: usize,
    pub rdim: u8,
    /// ℍ classes in the report motive.
    pub h_classes: usize,
    /// Motive isomorphic to a sum of trivial classes.
    pub motive_trivial: bool,
}

/// A block cited as evidence: cell and factor position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRef {
    pub alpha: String,
    pub irrep: String,
    pub factor_index: usize,
    pub end_type: RealKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicRow {
    pub n: usize,
    pub rdim: u8,
    pub h_block: Option<BlockRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A point on X forces a point on each BS(End V), hence split ends.
    PointForcesSplit {
        forced_points: bool,
        nonsplit_ends: Vec<String>,
        /// `Some(0)` when the conclusion is drawn, `None` for no conclusion.
        rdim: Option<u8>,
    },
    RdimSplitPoint {
        split: bool,
        point: bool,
        rows: Vec<RdimRow>,
    },
    SymCubePoint {
        point: bool,
        rdim: u8,
    },
    ConicRdim {
        rows: Vec<ConicRow>,
        split_control_rdim: u8,
    },
    SplitCubeEnds {
        naive: EndCounts,
        consistent: EndCounts,
        complex_blocks: bool,
        control_n2: Option<EndCounts>,
    },
    ConicSquarePoint {
        point_exists: bool,
        rdim: u8,
        split_control_rdim: u8,
    },
}

impl Witness {
    pub fn holds(&self) -> bool {
        match self {
            Witness::PointForcesSplit {
                forced_points,
                nonsplit_ends,
                ..
            } => !forced_points || nonsplit_ends.is_empty(),
            Witness::RdimSplitPoint { split, point, rows } => {
                split == point
                    && rows
                        .iter()
                        .all(|r| (r.rdim == 0) == *split && (r.rdim != 0 || (r.h_classes == 0 && r.motive_trivial)))
            }
            Witness::SymCubePoint { point, rdim } => *point == (*rdim == 0),
            Witness::ConicRdim {
                rows,
                split_control_rdim,
            } => *split_control_rdim == 0 && rows.iter().all(|r| r.rdim == 1 && r.h_block.is_some()),
            Witness::SplitCubeEnds { .. } => true,
            Witness::ConicSquarePoint {
                point_exists,
                rdim,
                split_control_rdim,
            } => *point_exists && *rdim == 1 && *split_control_rdim == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub level: ClaimLevel,
    pub inputs: VerdictInputs,
    pub holds: bool,
    /// Registry ids this verdict trusts.
    pub axioms: Vec<String>,
    pub witness: Witness,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(
        claim: &str,
        level: ClaimLevel,
        inputs: VerdictInputs,
        axioms: &[&str],
        witness: Witness,
        notes: Vec<String>,
    ) -> Self {
        Verdict {
            claim: claim.into(),
            level,
            inputs,
            holds: witness.holds(),
            axioms: axioms.iter().map(|s| s.to_string()).collect(),
            witness,
            notes,
        }
    }

    /// `holds` agrees with the witness.
    pub fn is_self_consistent(&self) -> bool {
        self.holds == self.witness.holds()
    }
}

pub const CLAIM_POINT_FORCES_SPLIT: &str = "point-forces-split-ends";
pub const CLAIM_RDIM_SPLIT_POINT: &str = "rdim-zero-iff-split-iff-point";
pub const CLAIM_SYM_CUBE_POINT: &str = "sym-cube-point-iff-rdim-zero";
pub const CLAIM_CONIC_RDIM: &str = "nonsplit-conic-rdim-one";
pub const CLAIM_SPLIT_CUBE_ENDS: &str = "split-cube-end-multiset";
pub const CLAIM_CONIC_SQUARE_POINT: &str = "conic-square-point-vs-rdim";

fn end_descriptor(tag: EndTag) -> CsaDescriptor {
    match tag {
        EndTag::Q => CsaDescriptor::split(1),
        EndTag::HQ => CsaDescriptor::quaternionic(2),
    }
    .expect("valid descriptor")
}

fn kind_counts(kinds: impl IntoIterator<Item = RealKind>) -> EndCounts {
    let mut c = EndCounts { r: 0, c: 0, h: 0 };
    for k in kinds {
        match k {
            RealKind::R => c.r += 1,
            RealKind::C => c.c += 1,
            RealKind::H => c.h += 1,
        }
    }
    c
}

/// Runs checks against an axiom registry, caching reports by input.
#[derive(Debug)]
pub struct Verifier {
    registry: AxiomRegistry,
    options: ReportOptions,
    reports: HashMap<(usize, VarietyClass, usize), CollectionReport>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new(AxiomRegistry::standard(), ReportOptions::default())
    }
}

impl Verifier {
    pub fn new(registry: AxiomRegistry, options: ReportOptions) -> Self {
        Verifier {
            registry,
            options,
            reports: HashMap::new(),
        }
    }

    pub fn registry(&self) -> &AxiomRegistry {
        &self.registry
    }

    pub fn report(&mut self, degree: usize, class: VarietyClass, n: usize) -> Result<&CollectionReport, VerifyError> {
        let key = (degree, class, n);
        if !self.reports.contains_key(&key) {
            let rep = build_report_with(degree, class.brauer(), n, &self.options)?;
            self.reports.insert(key, rep);
        }
        Ok(&self.reports[&key])
    }

    fn x_has_point(&self, degree: usize, class: VarietyClass) -> Result<bool, VerifyError> {
        let bs = BsDescriptor {
            algebra: CsaDescriptor::new(degree, class.brauer())?,
        };
        Ok(self.registry.conclude(BS_POINT_SPLIT, bs.has_point()))
    }

    /// With a point on the variety, every End algebra of a full weak
    /// exceptional collection of pure bundles is split and rdim is 0.
    /// Without one nothing is concluded.
    pub fn check_point_forces_split(&self, ends: &[CsaDescriptor], has_point: bool) -> Result<Verdict, VerifyError> {
        if ends.is_empty() {
            return Err(VerifyError::NoEnds);
        }
        let forced_points = self.registry.conclude(LANG_NISHIMURA, has_point);
        let nonsplit_ends: Vec<String> = ends
            .iter()
            .filter(|a| {
                let bs = BsDescriptor { algebra: **a };
                !self.registry.conclude(BS_POINT_SPLIT, bs.has_point())
            })
            .map(|a| a.to_string())
            .collect();
        let mut notes = Vec::new();
        let rdim = match (forced_points, nonsplit_ends.is_empty()) {
            (false, _) => {
                notes.push("no point: no conclusion".into());
                None
            }
            (true, true) => Some(0),
            (true, false) => {
                notes.push(format!(
                    "inconsistent input: a point forces split ends, but {} are not split",
                    nonsplit_ends.join(", ")
                ));
                None
            }
        };
        let inputs = VerdictInputs {
            ends: ends.iter().map(|a| a.to_string()).collect(),
            has_point: Some(has_point),
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_POINT_FORCES_SPLIT,
            ClaimLevel::Theorem,
            inputs,
            &[LANG_NISHIMURA, BS_POINT_SPLIT],
            Witness::PointForcesSplit {
                forced_points,
                nonsplit_ends,
                rdim,
            },
            notes,
        ))
    }

    /// The base collection's End algebras against the point on `X`.
    pub fn check_point_forces_split_for(&self, degree: usize, class: VarietyClass) -> Result<Verdict, VerifyError> {
        let ends: Vec<CsaDescriptor> = base_collection(degree, class.brauer())?
            .iter()
            .map(|b| end_descriptor(b.end_algebra))
            .collect();
        let mut v = self.check_point_forces_split(&ends, self.x_has_point(degree, class)?)?;
        v.inputs.degree = Some(degree);
        v.inputs.class = Some(class);
        Ok(v)
    }

    /// `rdim(T) = 0 ⇔ split ⇔ X(ℝ) ≠ ∅` for `n = 1..=min(3, max_n)`, plus
    /// the motive of an rdim-0 report being a sum of trivial classes.
    pub fn check_rdim_split_point(&mut self, degree: usize, class: VarietyClass) -> Result<Verdict, VerifyError> {
        let split = class == VarietyClass::Split;
        let point = self.x_has_point(degree, class)?;
        let top = CHECKED_N.min(self.options.max_n);
        let mut rows = Vec::new();
        for n in 1..=top {
            let rep = self.report(degree, class, n)?;
            let trivial = Motive::from_values(rep.motive.modulus(), std::iter::repeat_n(0, rep.motive.len()));
            rows.push(RdimRow {
                n,
                rdim: rep.rdim,
                h_classes: rep.motive.values().iter().filter(|v| **v != 0).count(),
                motive_trivial: motive_iso(&rep.motive, &trivial),
            });
        }
        let inputs = VerdictInputs {
            degree: Some(degree),
            class: Some(class),
            n: (1..=top).collect(),
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_RDIM_SPLIT_POINT,
            ClaimLevel::Theorem,
            inputs,
            &[BS_POINT_SPLIT],
            Witness::RdimSplitPoint { split, point, rows },
            Vec::new(),
        ))
    }

    /// `S³(X)(ℝ) ≠ ∅ ⇔ rdim(T) = 0` at `n = 3`, for degree > 3.
    pub fn check_sym_cube_point(&mut self, degree: usize, class: VarietyClass) -> Result<Verdict, VerifyError> {
        if degree <= 3 {
            return Err(VerifyError::DegreeTooSmall(degree));
        }
        let a = CsaDescriptor::new(degree, class.brauer())?;
        let gbs = self.registry.conclude(GBS_POINT_INDEX, sym_power_has_point(&a, 3)?);
        let point = self.registry.conclude(SYM_POWER_BIRATIONAL, gbs);
        let rdim = self.report(degree, class, 3)?.rdim;
        let notes = vec![format!(
            "ind = {}, {} 3",
            a.index(),
            if 3 % a.index() == 0 {
                "divides"
            } else {
                "does not divide"
            }
        )];
        let inputs = VerdictInputs {
            degree: Some(degree),
            class: Some(class),
            n: vec![3],
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_SYM_CUBE_POINT,
            ClaimLevel::Theorem,
            inputs,
            &[GBS_POINT_INDEX, SYM_POWER_BIRATIONAL, LANG_NISHIMURA],
            Witness::SymCubePoint { point, rdim },
            notes,
        ))
    }

    /// The non-split conic has rdim 1 with an ℍ-type witness block for
    /// `n ∈ {2, 3}` (capped by `max_n`); the split conic at `n = 2` is rdim 0.
    pub fn check_conic_rdim(&mut self) -> Result<Verdict, VerifyError> {
        let ns: Vec<usize> = (2..=CHECKED_N.min(self.options.max_n)).collect();
        let mut rows = Vec::new();
        for &n in &ns {
            let rep = self.report(2, VarietyClass::Quaternion, n)?;
            let h_block = rep
                .blocks()
                .into_iter()
                .find(|b| b.end_type == RealKind::H)
                .map(|b| BlockRef {
                    alpha: b.alpha.to_string(),
                    irrep: b.irrep.clone(),
                    factor_index: b.factor_index,
                    end_type: b.end_type,
                });
            rows.push(ConicRow {
                n,
                rdim: rep.rdim,
                h_block,
            });
        }
        let control_n = ns.first().copied().unwrap_or(1);
        let split_control_rdim = self.report(2, VarietyClass::Split, control_n)?.rdim;
        let inputs = VerdictInputs {
            degree: Some(2),
            class: Some(VarietyClass::Quaternion),
            n: ns,
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_CONIC_RDIM,
            ClaimLevel::Theorem,
            inputs,
            &[],
            Witness::ConicRdim {
                rows,
                split_control_rdim,
            },
            Vec::new(),
        ))
    }

    /// Records the End multiset of the split variety at `n = 3` and whether
    /// any ℂ-type block occurs. Never fails on the finding itself.
    pub fn check_split_cube_ends(&mut self, degree: usize) -> Result<Verdict, VerifyError> {
        let control_n2 = if self.options.max_n >= 2 {
            let rep = self.report(degree, VarietyClass::Split, 2)?;
            Some(kind_counts(rep.naive_kinds()))
        } else {
            None
        };
        let rep = self.report(degree, VarietyClass::Split, 3)?;
        let naive = kind_counts(rep.naive_kinds());
        let consistent = rep.end_multiset_consistent.clone();
        let complex_blocks = naive.c > 0;
        let mut notes = vec![if complex_blocks {
            format!("{} C-type blocks present for split n=3", naive.c)
        } else {
            "finding: split n=3 yields no C-type block; every object has endomorphism algebra R".to_string()
        }];
        if let Some(c) = &control_n2 {
            if c.c != 0 || c.h != 0 {
                notes.push(format!("control n=2 not all R: {}R {}C {}H", c.r, c.c, c.h));
            }
        }
        let inputs = VerdictInputs {
            degree: Some(degree),
            class: Some(VarietyClass::Split),
            n: vec![3],
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_SPLIT_CUBE_ENDS,
            ClaimLevel::Remark,
            inputs,
            &[],
            Witness::SplitCubeEnds {
                naive,
                consistent,
                complex_blocks,
                control_n2,
            },
            notes,
        ))
    }

    /// The symmetric square of the non-split conic has a real point while
    /// its equivariant category has rdim 1: a point on `S^n(X)` does not
    /// force rdim 0.
    pub fn check_conic_square_point(&mut self) -> Result<Verdict, VerifyError> {
        let point_exists = self.registry.conclude(CONIC_SQUARE_RATIONAL, true);
        let rdim = self.report(2, VarietyClass::Quaternion, 2)?.rdim;
        let split_control_rdim = self.report(2, VarietyClass::Split, 2)?.rdim;
        let inputs = VerdictInputs {
            degree: Some(2),
            class: Some(VarietyClass::Quaternion),
            n: vec![2],
            ..Default::default()
        };
        Ok(Verdict::new(
            CLAIM_CONIC_SQUARE_POINT,
            ClaimLevel::Remark,
            inputs,
            &[CONIC_SQUARE_RATIONAL],
            Witness::ConicSquarePoint {
                point_exists,
                rdim,
                split_control_rdim,
            },
            vec!["degree-4 analogue: not applicable, no birationality input".into()],
        ))
    }

    /// Every check over degrees 2..=6, both classes where valid, `n ≤
    /// min(3, max_n)`. Checks needing an `n` above the cap are skipped.
    pub fn sweep(&mut self) -> Result<Vec<Verdict>, VerifyError> {
        let max_n = self.options.max_n;
        let mut out = Vec::new();
        for degree in SWEEP_DEGREES {
            for class in [VarietyClass::Split, VarietyClass::Quaternion] {
                if class == VarietyClass::Quaternion && degree % 2 != 0 {
                    continue;
                }
                out.push(self.check_point_forces_split_for(degree, class)?);
                out.push(self.check_rdim_split_point(degree, class)?);
                if degree > 3 && max_n >= 3 {
                    out.push(self.check_sym_cube_point(degree, class)?);
                }
            }
        }
        if max_n >= 2 {
            out.push(self.check_conic_rdim()?);
            out.push(self.check_conic_square_point()?);
        }
        if max_n >= 3 {
            for degree in [2, 3] {
                out.push(self.check_split_cube_ends(degree)?);
            }
        }
        Ok(out)
    }
}

/// All theorem-level verdicts hold.
pub fn theorem_level_ok(verdicts: &[Verdict]) -> bool {
    verdicts
        .iter()
        .filter(|v| v.level == ClaimLevel::Theorem)
        .all(|v| v.holds)
}

/// One line per verdict, then the notes and a count.
pub fn render_summary(verdicts: &[Verdict]) -> String {
    let mut s = String::new();
    for v in verdicts {
        let mut params = Vec::new();
        if let Some(d) = v.inputs.degree {
            params.push(format!("degree={d}"));
        }
        if let Some(c) = v.inputs.class {
            params.push(format!("class={c}"));
        }
        if !v.inputs.n.is_empty() {
            let ns: Vec<String> = v.inputs.n.iter().map(|n| n.to_string()).collect();
            params.push(format!("n={}", ns.join(",")));
        }
        let status = match (v.level, v.holds) {
            (_, true) => "ok",
            (ClaimLevel::Theorem, false) => "FAIL",
            (ClaimLevel::Remark, false) => "finding",
        };
        let _ = writeln!(
            s,
            "[{status}] {:<8} {} {}",
            format!("{:?}", v.level).to_lowercase(),
            v.claim,
            params.join(" ")
        );
        for n in &v.notes {
            let _ = writeln!(s, "         note: {n}");
        }
    }
    let theorem: Vec<&Verdict> = verdicts.iter().filter(|v| v.level == ClaimLevel::Theorem).collect();
    let _ = writeln!(
        s,
        "{} verdicts; theorem-level {}/{} hold",
        verdicts.len(),
        theorem.iter().filter(|v| v.holds).count(),
        theorem.len()
    );
    s
}

/// Descriptors from `(degree, class)` pairs.
pub fn ends_from_classes(items: &[(usize, BrauerClass)]) -> Result<Vec<CsaDescriptor>, VerifyError> {
    Ok(items
        .iter()
        .map(|(d, c)| CsaDescriptor::new(*d, *c))
        .collect::<Result<_, _>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast() -> Verifier {
        Verifier::new(
            AxiomRegistry::standard(),
            ReportOptions {
                max_n: 2,
                ..Default::default()
            },
        )
    }

    #[test]
    fn point_with_quaternion_end_is_inconsistent() {
        let v = fast();
        let ends = ends_from_classes(&[(2, BrauerClass::HAMILTON)]).unwrap();
        let r = v.check_point_forces_split(&ends, true).unwrap();
        assert!(!r.holds);
        assert!(r.notes[0].contains("inconsistent"));
        let r = v.check_point_forces_split(&ends, false).unwrap();
        assert!(r.holds);
        assert!(matches!(r.witness, Witness::PointForcesSplit { rdim: None, .. }));
    }

    #[test]
    fn split_ends_with_point_give_rdim_zero() {
        let v = fast();
        let ends = ends_from_classes(&[(3, BrauerClass::SPLIT), (3, BrauerClass::SPLIT)]).unwrap();
        let r = v.check_point_forces_split(&ends, true).unwrap();
        assert!(r.holds);
        assert!(matches!(r.witness, Witness::PointForcesSplit { rdim: Some(0), .. }));
        assert_eq!(v.check_point_forces_split(&[], true), Err(VerifyError::NoEnds));
    }

    #[test]
    fn conic_checks_at_n2() {
        let mut v = fast();
        let r = v.check_rdim_split_point(2, VarietyClass::Quaternion).unwrap();
        assert!(r.holds, "{r:?}");
        let r = v.check_conic_rdim().unwrap();
        assert!(r.holds, "{r:?}");
        let r = v.check_conic_square_point().unwrap();
        assert!(r.holds && r.is_self_consistent());
    }

    #[test]
    fn sym_cube_rejects_small_degree() {
        let mut v = fast();
        assert_eq!(
            v.check_sym_cube_point(3, VarietyClass::Split).unwrap_err(),
            VerifyError::DegreeTooSmall(3)
        );
    }

    #[test]
    fn corrupted_axiom_fails_a_theorem() {
        let mut v = Verifier::new(
            AxiomRegistry::corrupted(BS_POINT_SPLIT).unwrap(),
            ReportOptions {
                max_n: 1,
                ..Default::default()
            },
        );
        let r = v.check_rdim_split_point(3, VarietyClass::Split).unwrap();
        assert!(!r.holds);
    }
}
