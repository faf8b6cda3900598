//! Brauer classes over ℝ (and cyclic toy groups ℤ/m), central simple algebra
//! descriptors, motive comparison by Brauer classes of tensor powers, and
//! rational-point predicates for (generalized) Brauer–Severi varieties.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("a quaternionic algebra has even degree, got {0}")]
    OddQuaternionicDegree(usize),
    #[error("real Brauer classes live in Z/2, got modulus {0}")]
    NotReal(u64),
    #[error("need 1 <= l < degree, got l = {l} for degree {degree}")]
    LOutOfRange { l: usize, degree: usize },
    #[error("class {value} out of range for modulus {modulus}")]
    ClassOutOfRange { value: u64, modulus: u64 },
}

/// Element of the cyclic group `ℤ/modulus`. `Br(ℝ)` is the case `modulus = 2`
/// with `1 = [ℍ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerClass {
    value: u64,
    modulus: u64,
}

impl BrauerClass {
    pub fn new(value: u64, modulus: u64) -> Result<Self, BrauerError> {
        if modulus == 0 {
            return Err(BrauerError::ZeroModulus);
        }
        Ok(BrauerClass {
            value: value % modulus,
            modulus,
        })
    }

    pub fn zero(modulus: u64) -> Result<Self, BrauerError> {
        Self::new(0, modulus)
    }

    pub const SPLIT: BrauerClass = BrauerClass { value: 0, modulus: 2 };
    pub const HAMILTON: BrauerClass = BrauerClass { value: 1, modulus: 2 };

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Group law; panics on mismatched moduli.
    pub fn add(&self, other: &BrauerClass) -> BrauerClass {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        BrauerClass {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// `p · self`, the class of the `p`-th tensor power.
    pub fn times(&self, p: u64) -> BrauerClass {
        BrauerClass {
            value: ((self.value as u128 * p as u128) % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    pub fn order(&self) -> u64 {
        (1..=self.modulus).find(|p| self.times(*p).is_zero()).unwrap_or(1)
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.modulus, self.value) {
            (2, 0) => f.write_str("0"),
            (2, 1) => f.write_str("[H]"),
            (m, v) => write!(f, "{v} mod {m}"),
        }
    }
}

/// A central simple ℝ-algebra up to isomorphism: `M_degree(ℝ)` or
/// `M_{degree/2}(ℍ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CsaDescriptor {
    degree: usize,
    class: BrauerClass,
}

impl CsaDescriptor {
    pub fn new(degree: usize, class: BrauerClass) -> Result<Self, BrauerError> {
        if degree == 0 {
            return Err(BrauerError::ZeroDegree);
        }
        if class.modulus() != 2 {
            return Err(BrauerError::NotReal(class.modulus()));
        }
        if !class.is_zero() && !degree.is_multiple_of(2) {
            return Err(BrauerError::OddQuaternionicDegree(degree));
        }
        Ok(CsaDescriptor { degree, class })
    }

    pub fn split(degree: usize) -> Result<Self, BrauerError> {
        Self::new(degree, BrauerClass::SPLIT)
    }

    pub fn quaternionic(degree: usize) -> Result<Self, BrauerError> {
        Self::new(degree, BrauerClass::HAMILTON)
    }

    /// `√dim`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn class(&self) -> BrauerClass {
        self.class
    }

    pub fn is_split(&self) -> bool {
        self.class.is_zero()
    }

    /// Degree of the division algebra in the class.
    pub fn index(&self) -> usize {
        if self.is_split() {
            1
        } else {
            2
        }
    }

    /// Order of the class in the Brauer group.
    pub fn period(&self) -> usize {
        self.class.order() as usize
    }
}

impl fmt::Display for CsaDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_split() {
            write!(f, "M_{}(R)", self.degree)
        } else {
            write!(f, "M_{}(H)", self.degree / 2)
        }
    }
}

/// The Brauer–Severi variety of a central simple algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BsDescriptor {
    pub algebra: CsaDescriptor,
}

impl BsDescriptor {
    pub fn dimension(&self) -> usize {
        self.algebra.degree() - 1
    }

    /// A Brauer–Severi variety has a real point iff it is projective space.
    pub fn has_point(&self) -> bool {
        self.algebra.is_split()
    }
}

/// Direct sum of motives `U(A_i)`, recorded by Brauer class as a multiset.
///
/// Classes are stored sorted, so equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MotiveWire", into = "MotiveWire")]
pub struct Motive {
    modulus: u64,
    classes: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct MotiveWire {
    modulus: u64,
    classes: Vec<u64>,
}

impl TryFrom<MotiveWire> for Motive {
    type Error = BrauerError;
    fn try_from(w: MotiveWire) -> Result<Self, BrauerError> {
        if w.modulus == 0 {
            return Err(BrauerError::ZeroModulus);
        }
        if let Some(&value) = w.classes.iter().find(|c| **c >= w.modulus) {
            return Err(BrauerError::ClassOutOfRange {
                value,
                modulus: w.modulus,
            });
        }
        Ok(Motive::from_values(w.modulus, w.classes))
    }
}

impl From<Motive> for MotiveWire {
    fn from(m: Motive) -> Self {
        MotiveWire {
            modulus: m.modulus,
            classes: m.classes,
        }
    }
}

impl Motive {
    pub fn empty(modulus: u64) -> Self {
        Motive {
            modulus,
            classes: Vec::new(),
        }
    }

    /// Values are reduced mod `modulus`; panics if `modulus` is zero.
    pub fn from_values(modulus: u64, values: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let mut classes: Vec<u64> = values.into_iter().map(|v| v % modulus).collect();
        classes.sort_unstable();
        Motive { modulus, classes }
    }

    pub fn from_classes(modulus: u64, classes: &[BrauerClass]) -> Self {
        Self::from_values(modulus, classes.iter().map(|c| c.value()))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Sorted class values.
    pub fn values(&self) -> &[u64] {
        &self.classes
    }

    pub fn direct_sum(&self, other: &Motive) -> Motive {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        Motive::from_values(self.modulus, self.classes.iter().chain(&other.classes).copied())
    }

    /// Sorted multiset `{p·c}`.
    pub fn power_classes(&self, p: u64) -> Vec<u64> {
        Motive::from_values(
            self.modulus,
            self.classes
                .iter()
                .map(|c| ((*c as u128 * p as u128) % self.modulus as u128) as u64),
        )
        .classes
    }
}

/// First power `p` at which the class multisets of `x` and `y` differ, or
/// `None` if they agree for every `p` (then the motives are isomorphic).
/// `Some(0)` signals a size or modulus mismatch.
pub fn first_failing_power(x: &Motive, y: &Motive) -> Option<u64> {
    if x.modulus != y.modulus || x.len() != y.len() {
        return Some(0);
    }
    // p·c is periodic in p with period dividing the modulus.
    (1..=x.modulus).find(|p| x.power_classes(*p) != y.power_classes(*p))
}

pub fn motive_iso(x: &Motive, y: &Motive) -> bool {
    first_failing_power(x, y).is_none()
}

/// `x ⊕ common ≅ y ⊕ common`.
pub fn motive_cancel(x: &Motive, y: &Motive, common: &Motive) -> bool {
    if x.modulus != common.modulus || y.modulus != common.modulus {
        return false;
    }
    motive_iso(&x.direct_sum(common), &y.direct_sum(common))
}

fn check_l(a: &CsaDescriptor, l: usize) -> Result<(), BrauerError> {
    if l == 0 || l >= a.degree() {
        return Err(BrauerError::LOutOfRange { l, degree: a.degree() });
    }
    Ok(())
}

/// Real point on the generalized Brauer–Severi variety of rank-`l` right
/// ideals: exists iff `ind(A) | l`.
pub fn gbs_has_point(a: &CsaDescriptor, l: usize) -> Result<bool, BrauerError> {
    check_l(a, l)?;
    Ok(l.is_multiple_of(a.index()))
}

/// Real point on the `l`-th symmetric power of the Brauer–Severi variety.
///
/// `S^l(X)` is birational to `X_l × ℙ^{l(l-1)}`, and point existence is a
/// birational invariant of smooth proper varieties, so this agrees with
/// [`gbs_has_point`].
pub fn sym_power_has_point(a: &CsaDescriptor, l: usize) -> Result<bool, BrauerError> {
    gbs_has_point(a, l)
}
