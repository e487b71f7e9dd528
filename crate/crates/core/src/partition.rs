//! Partitions and subpartitions of a ground set into blocks.

use crate::ground::ElementSet;

/// An ordered list of pairwise-disjoint blocks.
///
/// For a partition the blocks cover the ground set; a subpartition leaves a
/// remainder. Blocks may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<ElementSet>,
}

impl Partition {
    pub fn new(blocks: Vec<ElementSet>) -> Self {
        Partition { blocks }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// Largest block size minus smallest block size.
    pub fn spread(&self) -> usize {
        let sizes = self.sizes();
        match (sizes.iter().max(), sizes.iter().min()) {
            (Some(max), Some(min)) => max - min,
            _ => 0,
        }
    }

    pub fn union(&self) -> ElementSet {
        self.blocks.iter().fold(ElementSet::empty(), |acc, &b| acc | b)
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = ElementSet::empty();
        for &b in &self.blocks {
            if !seen.is_disjoint_from(b) {
                return false;
            }
            seen = seen | b;
        }
        true
    }

    pub fn covers(&self, ground: ElementSet) -> bool {
        self.is_disjoint() && self.union() == ground
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.indices()).collect()
    }
}

/// Effective size window for the next block: sizes in [lo, hi] that leave a
/// residual which can still be split into `remaining − 1` blocks with sizes
/// in [lo, hi]. None when no size qualifies.
///
/// When lo·remaining ≤ |F| ≤ hi·remaining this window is nonempty and
/// contains |F|/remaining, so the windowed step polyhedra keep their uniform
/// vector.
pub(crate) fn step_window(lo: u64, hi: u64, f_size: u64, remaining: u32) -> Option<(u64, u64)> {
    assert!(remaining >= 1);
    let rest = (remaining - 1) as u64;
    let s_lo = lo.max(f_size.saturating_sub(hi.saturating_mul(rest)));
    let s_hi = hi.min(f_size.checked_sub(lo.checked_mul(rest)?)?);
    if s_lo > s_hi {
        None
    } else {
        Some((s_lo, s_hi))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", b)?;
        }
        write!(f, "]")
    }
}
