//! Nearly uniform partitions into common independent sets of two matroids,
//! nearly uniform subpartitions for arbitrary pairs, and the integral-point
//! probe of the windowed four-polyhedra intersection.

use crate::error::Error;
use crate::ground::ElementSet;
use crate::matroid::Matroid;
use crate::partition::{step_window, Partition};
use crate::partition_single::union_cospanning_dual;
use crate::polyhedra::{
    matroid_set_function, MatroidSetFunctionKind, PolyhedronDescription, Rational, RationalPoint,
    SET_FUNCTION_CAP,
};
use crate::union::{covering_index, is_in_union, not_in_union_error};

/// Two matroids on one ground set plus the number of blocks.
#[derive(Debug, Clone)]
pub struct CommonInstance {
    m1: Matroid,
    m2: Matroid,
    k: u32,
}

impl CommonInstance {
    pub fn new(m1: Matroid, m2: Matroid, k: u32) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if m1.n() != m2.n() {
            return Err(Error::GroundSetMismatch(m1.n(), m2.n()));
        }
        Ok(CommonInstance { m1, m2, k })
    }

    pub fn m1(&self) -> &Matroid {
        &self.m1
    }

    pub fn m2(&self) -> &Matroid {
        &self.m2
    }

    pub fn matroids(&self) -> [&Matroid; 2] {
        [&self.m1, &self.m2]
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.m1.n()
    }

    pub fn full_set(&self) -> ElementSet {
        self.m1.full_set()
    }

    /// The near-uniformity window [⌊|E|/k⌋, ⌈|E|/k⌉].
    pub fn auto_window(&self) -> (u64, u64) {
        let n = self.n() as u64;
        (n / self.k as u64, n.div_ceil(self.k as u64))
    }

    /// Check the standing assumption E ∈ I_1^k ∩ I_2^k.
    pub fn check_feasible(&self) -> Result<(), Error> {
        let full = self.full_set();
        for (idx, m) in self.matroids().into_iter().enumerate() {
            if !is_in_union(m, self.k, full) {
                return Err(not_in_union_error(m, self.k, full, Some(idx + 1)));
            }
        }
        Ok(())
    }

    pub fn is_common_independent(&self, x: ElementSet) -> bool {
        self.m1.is_independent(x) && self.m2.is_independent(x)
    }
}

/// Membership of X in both removal families over F at step ℓ: X ⊆ F is
/// independent in M_i and F∖X splits into k−ℓ−1 independent sets of M_i,
/// for i = 1, 2.
pub fn in_common_removal_family(
    inst: &CommonInstance,
    f: ElementSet,
    ell: u32,
    x: ElementSet,
) -> bool {
    assert!(x.is_subset_of(f), "X must lie inside F");
    assert!(ell < inst.k(), "step index must satisfy l <= k-1");
    let copies = inst.k() - ell - 1;
    let rest = f.difference(x);
    inst.matroids().into_iter().all(|m| {
        m.is_independent(x)
            && if copies == 0 { rest.is_empty() } else { is_in_union(m, copies, rest) }
    })
}

/// The four-polyhedra intersection of a step, over local coordinates of F:
/// P(ρ_1^F) ∩ P(g_1) ∩ P(ρ_2^F) ∩ P(g_2), optionally windowed, where
/// g_i(S) = |S| − (ρ_i^F)^{k−ℓ−1}(S) describes the sets whose complement in
/// F splits into k−ℓ−1 independent sets of M_i.
#[derive(Debug, Clone)]
pub struct FourPolyhedra {
    description: PolyhedronDescription,
    /// `locals[i]` = global index of local coordinate i.
    locals: Vec<usize>,
    f: ElementSet,
    ell: u32,
    window: Option<(u64, u64)>,
}

impl FourPolyhedra {
    pub fn build(
        inst: &CommonInstance,
        f: ElementSet,
        ell: u32,
        window: Option<(u64, u64)>,
    ) -> Result<Self, Error> {
        assert!(ell < inst.k(), "step index must satisfy l <= k-1");
        if f.len() > SET_FUNCTION_CAP {
            return Err(Error::PolyhedralCapExceeded { n: f.len(), cap: SET_FUNCTION_CAP });
        }
        let copies = inst.k() - ell - 1;
        let mut description = PolyhedronDescription::new(f.len());
        // over an empty F the subset constraints are vacuous
        if !f.is_empty() {
            for m in inst.matroids() {
                let restricted = m.restrict(f)?;
                description = description
                    .intersect_submodular(matroid_set_function(
                        &restricted,
                        MatroidSetFunctionKind::Rank,
                    ))?
                    .intersect_supermodular(union_cospanning_dual(&restricted, copies))?;
            }
        }
        if let Some((lo, hi)) = window {
            description = description.window(
                Rational::from_integer(lo as i64),
                Rational::from_integer(hi as i64),
            )?;
        }
        Ok(FourPolyhedra {
            description,
            locals: f.indices(),
            f,
            ell,
            window,
        })
    }

    pub fn description(&self) -> &PolyhedronDescription {
        &self.description
    }

    pub fn f(&self) -> ElementSet {
        self.f
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    fn to_global(&self, local: ElementSet) -> ElementSet {
        local.iter().map(|i| self.locals[i]).collect()
    }

    /// First integral point by increasing cardinality, then colex order.
    /// Returns the subset in global indices.
    pub fn integral_point(&self) -> Option<ElementSet> {
        let dim = self.locals.len();
        let full_local = ElementSet::full(dim);
        let (min_size, max_size) = match self.window {
            Some((lo, hi)) => (lo.min(dim as u64) as usize, hi.min(dim as u64) as usize),
            None => (0, dim),
        };
        for size in min_size..=max_size {
            for candidate in full_local.subsets_of_size(size) {
                if self.description.contains_characteristic(candidate) {
                    return Some(self.to_global(candidate));
                }
            }
        }
        None
    }

    /// Exact membership of the uniform vector (1/(k−ℓ), …, 1/(k−ℓ)) ∈ ℝ^F.
    pub fn contains_uniform_vector(&self, k: u32) -> bool {
        let denom = (k - self.ell) as i64;
        let point = RationalPoint::uniform(self.locals.len(), Rational::new(1, denom));
        self.description
            .membership(&point)
            .expect("dimensions agree")
            .is_member()
    }
}

/// Some X* ⊆ F whose characteristic vector lies in the (windowed)
/// four-polyhedra intersection, or None. Any returned set is checked to lie
/// in both removal families.
pub fn four_polyhedra_integral_point(
    inst: &CommonInstance,
    f: ElementSet,
    ell: u32,
    window: Option<(u64, u64)>,
) -> Result<Option<ElementSet>, Error> {
    let polyhedra = FourPolyhedra::build(inst, f, ell, window)?;
    let found = polyhedra.integral_point();
    if let Some(x) = found {
        // integral points of the intersection belong to both families
        assert!(
            in_common_removal_family(inst, f, ell, x),
            "integral point {} escapes the removal families at step {}",
            x,
            ell
        );
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Iterate integral points of the windowed four-polyhedra intersection.
    Polyhedral,
    /// Backtrack directly over block assignments; exponential but complete.
    Exhaustive,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Polyhedral => f.write_str("polyhedral"),
            Strategy::Exhaustive => f.write_str("exhaustive"),
        }
    }
}

/// Nearly uniform partition of E into k common independent sets.
///
/// The polyhedral strategy can stop with [`Error::StepFailure`] when the
/// windowed intersection has no integral point at some step; the exhaustive
/// strategy only fails when no windowed partition exists at all.
pub fn partition_common_nearly_uniform(
    inst: &CommonInstance,
    strategy: Strategy,
) -> Result<Partition, Error> {
    let (lo, hi) = inst.auto_window();
    partition_common_with_window(inst, strategy, lo, hi)
}

/// Partition into k common independent sets with block sizes in [lo, hi].
/// The spread-≤-1 guarantee only applies to the near-uniform window.
pub fn partition_common_with_window(
    inst: &CommonInstance,
    strategy: Strategy,
    lo: u64,
    hi: u64,
) -> Result<Partition, Error> {
    if lo > hi {
        return Err(Error::InvalidWindow { lo: lo.to_string(), hi: hi.to_string() });
    }
    inst.check_feasible()?;
    match strategy {
        Strategy::Polyhedral => {
            let mut remaining = inst.full_set();
            let mut blocks = Vec::with_capacity(inst.k() as usize);
            for ell in 0..inst.k() {
                // tighten the window so the residual stays splittable
                let step = step_window(lo, hi, remaining.len() as u64, inst.k() - ell)
                    .ok_or(Error::StepFailure { ell, f: remaining, lo, hi })?;
                let found = four_polyhedra_integral_point(inst, remaining, ell, Some(step))?;
                match found {
                    Some(x) => {
                        blocks.push(x);
                        remaining = remaining.difference(x);
                    }
                    None => {
                        return Err(Error::StepFailure { ell, f: remaining, lo, hi });
                    }
                }
            }
            assert!(remaining.is_empty(), "final step must absorb all of F");
            Ok(Partition::new(blocks))
        }
        Strategy::Exhaustive => exhaustive_partition(inst, lo, hi),
    }
}

/// Restricted-growth backtracking over elements: element e may open at most
/// one new block, and every block stays common independent with size ≤ hi.
fn exhaustive_partition(inst: &CommonInstance, lo: u64, hi: u64) -> Result<Partition, Error> {
    let k = inst.k() as usize;
    let mut blocks = vec![ElementSet::empty(); k];
    if assign(inst, &mut blocks, 0, 0, lo, hi) {
        Ok(Partition::new(blocks))
    } else {
        Err(Error::NoCommonPartition { k: inst.k(), lo, hi })
    }
}

fn assign(
    inst: &CommonInstance,
    blocks: &mut Vec<ElementSet>,
    e: usize,
    used: usize,
    lo: u64,
    hi: u64,
) -> bool {
    let n = inst.n();
    let k = blocks.len();
    if e == n {
        return blocks.iter().all(|b| b.len() as u64 >= lo);
    }
    // counting prune: remaining elements must fit the remaining capacity
    // and still be able to fill every block up to lo
    let remaining = (n - e) as u64;
    let capacity: u64 = blocks.iter().map(|b| hi - (b.len() as u64).min(hi)).sum();
    if remaining > capacity {
        return false;
    }
    let deficit: u64 = blocks
        .iter()
        .take(used)
        .map(|b| lo.saturating_sub(b.len() as u64))
        .sum::<u64>()
        + (k - used) as u64 * lo;
    if deficit > remaining {
        return false;
    }
    let openable = (used + 1).min(k);
    for j in 0..openable {
        if (blocks[j].len() as u64) >= hi {
            continue;
        }
        let candidate = blocks[j].with(e);
        if inst.is_common_independent(candidate) {
            blocks[j] = candidate;
            let next_used = used.max(j + 1);
            if assign(inst, blocks, e + 1, next_used, lo, hi) {
                return true;
            }
            blocks[j] = blocks[j].without(e);
        }
    }
    false
}

/// A nearly uniform subpartition into common independent sets, leaving a
/// remainder that is still a union of μ*₂+1 independent sets in both
/// matroids.
#[derive(Debug, Clone)]
pub struct SubpartitionResult {
    pub blocks: Vec<ElementSet>,
    pub remainder: ElementSet,
    /// Covering indices (μ*₁, μ*₂) in the order the matroids were given.
    pub mu: (u32, u32),
    /// True when μ*₁ > μ*₂ held and the matroids were relabeled internally.
    pub swapped: bool,
    /// The union exponent μ*₂+1 guaranteed for the remainder.
    pub remainder_exponent: u32,
}

/// Nearly uniform subpartition of k−μ*₂−1 common independent blocks whose
/// removal leaves a set in I_1^{μ*₂+1} ∩ I_2^{μ*₂+1}. Requires μ*₂ < k,
/// where μ*₂ is the larger covering index.
pub fn subpartition_common(inst: &CommonInstance) -> Result<SubpartitionResult, Error> {
    let mu1 = covering_index(inst.m1()).map_err(|e| tag_matroid(e, 1))?;
    let mu2 = covering_index(inst.m2()).map_err(|e| tag_matroid(e, 2))?;
    let swapped = mu1 > mu2;
    let mu_hi = mu1.max(mu2);
    if mu_hi >= inst.k() {
        return Err(Error::CoveringIndexTooLarge { mu2: mu_hi, k: inst.k() });
    }
    // k > μ*₂ ≥ μ*ᵢ implies E ∈ Iᵢ^k, so the standing assumption holds
    let (lo, hi) = inst.auto_window();
    let block_count = inst.k() - mu_hi - 1;
    let mut remaining = inst.full_set();
    let mut blocks = Vec::with_capacity(block_count as usize);
    for ell in 0..block_count {
        let (step_lo, step_hi) =
            step_window(lo, hi, remaining.len() as u64, inst.k() - ell)
                .expect("the near-uniform window always leaves a splittable residual");
        let x = first_common_independent_in_window(inst, remaining, step_lo, step_hi).expect(
            "the windowed matroid-intersection polytope always has an integral point here",
        );
        blocks.push(x);
        remaining = remaining.difference(x);
    }
    let exponent = mu_hi + 1;
    for (idx, m) in inst.matroids().into_iter().enumerate() {
        assert!(
            is_in_union(m, exponent, remaining),
            "remainder {} must stay in I^{} of matroid {}",
            remaining,
            exponent,
            idx + 1
        );
    }
    Ok(SubpartitionResult {
        blocks,
        remainder: remaining,
        mu: (mu1, mu2),
        swapped,
        remainder_exponent: exponent,
    })
}

fn tag_matroid(e: Error, idx: usize) -> Error {
    match e {
        Error::LoopPresent { element, .. } => Error::LoopPresent { matroid: Some(idx), element },
        Error::NotInUnion { k, witness, bound, size, .. } => {
            Error::NotInUnion { matroid: Some(idx), k, witness, bound, size }
        }
        other => other,
    }
}

fn first_common_independent_in_window(
    inst: &CommonInstance,
    f: ElementSet,
    lo: u64,
    hi: u64,
) -> Option<ElementSet> {
    let dim = f.len() as u64;
    let mut size = lo;
    while size <= hi.min(dim) {
        for candidate in f.subsets_of_size(size as usize) {
            if inst.is_common_independent(candidate) {
                return Some(candidate);
            }
        }
        size += 1;
    }
    None
}

/// One record of the integral-point probe.
#[derive(Debug, Clone)]
pub struct ProbeStep {
    pub ell: u32,
    pub f: ElementSet,
    pub window: (u64, u64),
    /// The uniform coordinate value 1/(k−ℓ).
    pub uniform_value: Rational,
    /// Exact membership of the uniform vector in the windowed intersection.
    pub uniform_member: bool,
    pub integral_point: Option<ElementSet>,
}

/// Walk the iterative step polyhedra, recording for each step whether the
/// uniform vector is a member and whether an integral point exists. Stops
/// after the first step without an integral point.
pub fn probe(inst: &CommonInstance) -> Result<Vec<ProbeStep>, Error> {
    inst.check_feasible()?;
    let (lo, hi) = inst.auto_window();
    let mut remaining = inst.full_set();
    let mut steps = Vec::new();
    for ell in 0..inst.k() {
        let Some(window) = step_window(lo, hi, remaining.len() as u64, inst.k() - ell) else {
            break;
        };
        let polyhedra = FourPolyhedra::build(inst, remaining, ell, Some(window))?;
        let uniform_member = polyhedra.contains_uniform_vector(inst.k());
        let integral_point = polyhedra.integral_point();
        if let Some(x) = integral_point {
            assert!(in_common_removal_family(inst, remaining, ell, x));
        }
        steps.push(ProbeStep {
            ell,
            f: remaining,
            window,
            uniform_value: Rational::new(1, (inst.k() - ell) as i64),
            uniform_member,
            integral_point,
        });
        match integral_point {
            Some(x) => remaining = remaining.difference(x),
            None => break,
        }
    }
    Ok(steps)
}
