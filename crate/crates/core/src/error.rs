//! Crate-wide error type.

use thiserror::Error;

use crate::ground::ElementSet;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("ground set size {0} out of range (must be 1..=63)")]
    InvalidGroundSize(usize),

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("element index {index} out of range for ground set of size {n}")]
    ElementOutOfRange { index: usize, n: usize },

    #[error("duplicate element {0}")]
    DuplicateElement(usize),

    #[error("instance schema violation: {0}")]
    Schema(String),

    #[error("invalid matroid description: {0}")]
    InvalidMatroid(String),

    #[error("rank axioms violated: {0}")]
    AxiomViolation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ground set of size {n} exceeds the exact polyhedral cap of {cap} elements")]
    PolyhedralCapExceeded { n: usize, cap: usize },

    #[error("invalid window: lower bound {lo} exceeds upper bound {hi}")]
    InvalidWindow { lo: String, hi: String },

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("matroid{} has a loop (element {element}): no finite covering exists", fmt_which(.matroid))]
    LoopPresent { matroid: Option<usize>, element: usize },

    /// The assumption X ∈ I^k fails; `witness` is a set Y ⊆ X with
    /// |X∖Y| + k·ρ(Y) = `bound` < |X| = `size`.
    #[error("set{} is not a union of {k} independent sets (X ∉ I^k): witness Y={witness} gives |X∖Y|+k·ρ(Y)={bound} < |X|={size}", fmt_which(.matroid))]
    NotInUnion {
        matroid: Option<usize>,
        k: u32,
        witness: ElementSet,
        bound: u64,
        size: u64,
    },

    #[error("no removable set X with {lo} <= |X| <= {hi} exists for k={k}")]
    NoRemovableSet { k: u32, lo: u64, hi: u64 },

    #[error("step failure at l={ell}: the windowed four-polyhedra intersection over F={f} (window [{lo},{hi}]) contains no integral point")]
    StepFailure { ell: u32, f: ElementSet, lo: u64, hi: u64 },

    #[error("no partition into {k} common independent sets with block sizes in [{lo},{hi}] exists")]
    NoCommonPartition { k: u32, lo: u64, hi: u64 },

    #[error("covering index precondition fails: mu*_2={mu2} >= k={k}")]
    CoveringIndexTooLarge { mu2: u32, k: u32 },

    #[error("instance must contain {expected} matroid(s), found {got}")]
    MatroidCount { expected: usize, got: usize },

    #[error("two matroids must share one ground set: sizes {0} and {1}")]
    GroundSetMismatch(usize, usize),

    #[error("k must be a positive integer")]
    InvalidK,

    #[error("no k given: pass -k or put \"k\" in the instance file")]
    MissingK,
}

fn fmt_which(matroid: &Option<usize>) -> String {
    match matroid {
        Some(i) => format!(" {}", i),
        None => String::new(),
    }
}
