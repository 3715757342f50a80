//! Canonical subsets of a finite carrier `0..n`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of `0..ambient`, kept as a strictly increasing element list so
/// that set equality is structural equality.
///
/// Subsets order by size first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    elements: Vec<usize>,
    ambient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("element {element} is outside the carrier 0..{ambient}")]
pub struct OutOfCarrier {
    pub element: usize,
    pub ambient: usize,
}

impl Subset {
    pub fn new<I: IntoIterator<Item = usize>>(ambient: usize, items: I) -> Result<Self, OutOfCarrier> {
        let mut elements: Vec<usize> = items.into_iter().collect();
        if let Some(&element) = elements.iter().find(|&&x| x >= ambient) {
            return Err(OutOfCarrier { element, ambient });
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Subset { elements, ambient })
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Subset {
            elements: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect(),
            ambient: mask.len(),
        }
    }

    pub(crate) fn from_sorted_unchecked(ambient: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|&x| x < ambient));
        Subset { elements, ambient }
    }

    pub fn full(ambient: usize) -> Self {
        Subset { elements: (0..ambient).collect(), ambient }
    }

    /// The singleton `{0}`.
    pub fn zero(ambient: usize) -> Self {
        Subset { elements: vec![0], ambient }
    }

    pub fn empty(ambient: usize) -> Self {
        Subset { elements: Vec::new(), ambient }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements == [0]
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.ambient
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.ambient];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            elements: self.elements.iter().copied().filter(|&x| other.contains(x)).collect(),
            ambient: self.ambient,
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut elements: Vec<usize> = self.elements.iter().chain(&other.elements).copied().collect();
        elements.sort_unstable();
        elements.dedup();
        Subset { elements, ambient: self.ambient }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            elements: (0..self.ambient).filter(|&x| !self.contains(x)).collect(),
            ambient: self.ambient,
        }
    }

    /// Image under an element map.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Subset {
        let mut elements: Vec<usize> = self.elements.iter().map(|&x| f(x)).collect();
        elements.sort_unstable();
        elements.dedup();
        Subset { elements, ambient: self.ambient }
    }

    /// Position of each carrier element within the subset, if present.
    pub(crate) fn index_map(&self) -> Vec<Option<usize>> {
        let mut idx = vec![None; self.ambient];
        for (i, &x) in self.elements.iter().enumerate() {
            idx[x] = Some(i);
        }
        idx
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
            .then_with(|| self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}
