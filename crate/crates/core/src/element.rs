//! Element identifiers, small sorted element sets and the ground set.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense index of an element in the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for ElementId {
    fn from(v: u32) -> Self {
        ElementId(v)
    }
}

impl From<usize> for ElementId {
    fn from(v: usize) -> Self {
        ElementId(u32::try_from(v).expect("element index exceeds u32"))
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A set of elements kept as an ascending, duplicate-free vector.
///
/// Sets in this crate are tiny (at most `max(ell, k)` members), so a sorted
/// vector with linear-time edits is the representation of choice.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<ElementId>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Inserts `x`; returns false if it was already present.
    pub fn insert(&mut self, x: ElementId) -> bool {
        match self.0.binary_search(&x) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, x);
                true
            }
        }
    }

    pub fn remove(&mut self, x: ElementId) -> bool {
        match self.0.binary_search(&x) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Replaces `out` by `x` in place.
    pub fn swap(&mut self, out: ElementId, x: ElementId) {
        self.remove(out);
        self.insert(x);
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for x in other.iter() {
            self.insert(x);
        }
    }

    pub fn to_ids(&self) -> Vec<u32> {
        self.0.iter().map(|e| e.0).collect()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut v: Vec<ElementId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Shorthand for building a set from raw ids.
pub fn set_of(ids: &[u32]) -> ElementSet {
    ids.iter().map(|&i| ElementId(i)).collect()
}

/// The ground set: one payload per element, addressed by `ElementId`.
#[derive(Clone, Debug)]
pub struct GroundSet<P> {
    payloads: Vec<P>,
}

impl<P> GroundSet<P> {
    pub fn new(payloads: Vec<P>) -> crate::Result<Self> {
        if payloads.is_empty() {
            return Err(crate::Error::InvalidArgument(
                "ground set must contain at least one element".into(),
            ));
        }
        if u32::try_from(payloads.len()).is_err() {
            return Err(crate::Error::InvalidArgument(
                "ground set too large for 32-bit element ids".into(),
            ));
        }
        Ok(GroundSet { payloads })
    }

    pub fn len(&self) -> usize {
        self.payloads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payloads.is_empty()
    }

    pub fn payload(&self, id: ElementId) -> Option<&P> {
        self.payloads.get(id.index())
    }

    pub fn payloads(&self) -> &[P] {
        &self.payloads
    }

    pub fn into_payloads(self) -> Vec<P> {
        self.payloads
    }

    pub fn ids(&self) -> Vec<ElementId> {
        (0..self.payloads.len()).map(ElementId::from).collect()
    }
}
