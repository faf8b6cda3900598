//! Geometric facts the checks rely on but do not compute.
//!
//! Each axiom turns a computed predicate into a geometric conclusion. A
//! registry is immutable once built; [`AxiomRegistry::corrupted`] produces a
//! registry whose named axiom reports the negated conclusion, which lets the
//! harness prove that its checks can fail.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub id: &'static str,
    pub statement: &'static str,
    pub source: &'static str,
}

pub const BS_POINT_SPLIT: &str = "bs-point-split";
pub const LANG_NISHIMURA: &str = "lang-nishimura";
pub const GBS_POINT_INDEX: &str = "gbs-point-index";
pub const SYM_POWER_BIRATIONAL: &str = "sym-power-birational";
pub const CONIC_SQUARE_RATIONAL: &str = "conic-square-rational";

const STANDARD: [Axiom; 5] = [
    Axiom {
        id: BS_POINT_SPLIT,
        statement: "a Brauer–Severi variety has a rational point iff its algebra is split",
        source: "Châtelet's theorem",
    },
    Axiom {
        id: LANG_NISHIMURA,
        statement:
            "a rational map between smooth proper varieties carries a rational point of the source to one of the target",
        source: "Lang–Nishimura lemma",
    },
    Axiom {
        id: GBS_POINT_INDEX,
        statement:
            "the generalized Brauer–Severi variety of rank-l ideals of A has a rational point iff ind(A) divides l",
        source: "Blanchet, Arithmetic of generalized Brauer–Severi varieties",
    },
    Axiom {
        id: SYM_POWER_BIRATIONAL,
        statement: "S^l(X) is birational to X_l × ℙ^{l(l-1)} for a Brauer–Severi variety X",
        source: "Krashen–Saltman",
    },
    Axiom {
        id: CONIC_SQUARE_RATIONAL,
        statement: "the symmetric square of a conic is birational to ℙ²",
        source: "classical; the Hilbert scheme of two points on a conic",
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomRegistry {
    corrupted: Option<&'static str>,
}

impl Default for AxiomRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl AxiomRegistry {
    pub fn standard() -> Self {
        AxiomRegistry { corrupted: None }
    }

    /// A registry in which axiom `id` asserts the opposite conclusion.
    /// `None` for an unknown id.
    pub fn corrupted(id: &str) -> Option<Self> {
        STANDARD
            .iter()
            .find(|a| a.id == id)
            .map(|a| AxiomRegistry { corrupted: Some(a.id) })
    }

    pub fn axioms(&self) -> &'static [Axiom] {
        &STANDARD
    }

    pub fn get(&self, id: &str) -> Option<&'static Axiom> {
        STANDARD.iter().find(|a| a.id == id)
    }

    pub fn is_corrupted(&self) -> bool {
        self.corrupted.is_some()
    }

    /// The conclusion axiom `id` draws from a computed predicate.
    ///
    /// Panics on an id outside the registry; ids are the constants above.
    pub fn conclude(&self, id: &str, premise: bool) -> bool {
        assert!(self.get(id).is_some(), "unknown axiom {id}");
        if self.corrupted == Some(id) {
            !premise
        } else {
            premise
        }
    }
}
