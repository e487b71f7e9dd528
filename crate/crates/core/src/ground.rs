//! Ground sets and subsets of them, represented as bitmasks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::Error;

/// Largest ground set representable by the bitmask encoding.
pub const MAX_GROUND: usize = 63;

/// A finite ground set with elements canonically indexed `0..n`.
///
/// Labels, when present, are display-only aliases for the indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidGroundSize(n));
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<Self, Error> {
        let mut gs = GroundSet::new(n)?;
        if labels.len() != n {
            return Err(Error::InvalidLabels("label count differs from n".into()));
        }
        for i in 0..labels.len() {
            if labels[i + 1..].contains(&labels[i]) {
                return Err(Error::InvalidLabels(format!("duplicate label {:?}", labels[i])));
            }
        }
        gs.labels = Some(labels);
        Ok(gs)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    /// The set containing every element.
    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn contains_set(&self, x: ElementSet) -> bool {
        x.is_subset_of(self.full_set())
    }
}

/// A subset of a ground set, stored as a bitmask over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet {
    bits: u64,
}

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet { bits: 0 };

    pub fn empty() -> Self {
        Self::EMPTY
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND);
        ElementSet {
            bits: if n == 0 { 0 } else { (1u64 << n) - 1 },
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_GROUND);
        ElementSet { bits: 1u64 << i }
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSet { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self, Error> {
        let mut bits = 0u64;
        for &i in indices {
            if i >= MAX_GROUND {
                return Err(Error::ElementOutOfRange { index: i, n: MAX_GROUND });
            }
            if bits & (1 << i) != 0 {
                return Err(Error::DuplicateElement(i));
            }
            bits |= 1 << i;
        }
        Ok(ElementSet { bits })
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.bits & (1 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_GROUND);
        ElementSet { bits: self.bits | (1 << i) }
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        ElementSet { bits: self.bits & !(1 << i) }
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.with(i);
    }

    pub fn remove(&mut self, i: usize) {
        *self = self.without(i);
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet { bits: self.bits | other.bits }
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet { bits: self.bits & other.bits }
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet { bits: self.bits & !other.bits }
    }

    pub fn complement_in(self, n: usize) -> Self {
        ElementSet::full(n).difference(self)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterate element indices in increasing order.
    pub fn iter(self) -> ElementIter {
        ElementIter { bits: self.bits }
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask (colex) order.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            mask: self.bits,
            next: Some(0),
        }
    }

    /// Subsets of `self` of fixed cardinality `size`, in colex order.
    pub fn subsets_of_size(self, size: usize) -> SizedSubsetIter {
        SizedSubsetIter::new(self, size)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElementSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

pub struct ElementIter {
    bits: u64,
}

impl Iterator for ElementIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            let i = self.bits.trailing_zeros() as usize;
            self.bits &= self.bits - 1;
            Some(i)
        }
    }
}

/// Enumerates submasks of a mask in increasing numeric order.
pub struct SubsetIter {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // successor of cur among submasks of mask, numerically ascending
        self.next = if cur == self.mask {
            None
        } else {
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(ElementSet::from_bits(cur))
    }
}

/// Enumerates fixed-size subsets of a set in colex order.
///
/// Runs Gosper's hack on the compressed index space of the parent's
/// positions and expands each combination back through the parent's bits.
pub struct SizedSubsetIter {
    positions: Vec<usize>,
    current: Option<u64>,
    size: usize,
}

impl SizedSubsetIter {
    fn new(parent: ElementSet, size: usize) -> Self {
        let positions = parent.indices();
        let current = if size > positions.len() {
            None
        } else if size == 0 {
            Some(0)
        } else {
            Some((1u64 << size) - 1)
        };
        SizedSubsetIter { positions, current, size }
    }

    fn expand(&self, compact: u64) -> ElementSet {
        let mut s = ElementSet::empty();
        let mut rest = compact;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            s.insert(self.positions[i]);
        }
        s
    }
}

impl Iterator for SizedSubsetIter {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.current?;
        let out = self.expand(cur);
        self.current = if self.size == 0 {
            None
        } else {
            // Gosper's hack: next integer with the same popcount
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let next = (((r ^ cur) >> 2) / c) | r;
            if next < (1u64 << self.positions.len()) {
                Some(next)
            } else {
                None
            }
        };
        Some(out)
    }
}
