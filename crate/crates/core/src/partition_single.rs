//! Nearly uniform partition of one matroid's ground set into k independent
//! sets, via iterated removal of a windowed independent set whose complement
//! stays partitionable.

use crate::error::Error;
use crate::ground::ElementSet;
use crate::matroid::Matroid;
use crate::partition::{step_window, Partition};
use crate::polyhedra::{
    matroid_set_function, MatroidSetFunctionKind, Modularity, PolyhedronDescription, SetFunction,
};
use crate::union::{in_union_table, is_in_union, not_in_union_error, union_rank_table};

/// One step of the removal iteration: from the ground subset `f` with
/// `remaining` copies left, the windowed set `chosen` was removed.
#[derive(Debug, Clone)]
pub struct RemovalStep {
    pub f: ElementSet,
    pub remaining: u32,
    pub chosen: ElementSet,
    pub window: (u64, u64),
}

/// Membership of X in the removal family for (M, k): X is independent and
/// E∖X splits into k−1 independent sets. For k = 1 the complement must be
/// empty.
pub fn in_removal_family(m: &Matroid, k: u32, x: ElementSet) -> bool {
    assert!(k >= 1, "removal family needs k >= 1");
    if !m.is_independent(x) {
        return false;
    }
    let rest = m.full_set().difference(x);
    if k == 1 {
        rest.is_empty()
    } else {
        is_in_union(m, k - 1, rest)
    }
}

/// Co-spanning dual of the union matroid M^r: X ↦ |X| − ρ^r(X). Its
/// supermodular polyhedron intersected with [0,1]^E is the convex hull of
/// the sets whose complement lies in I^r. For r = 0 the function is |X|,
/// pinning the full set.
pub(crate) fn union_cospanning_dual(m: &Matroid, r: u32) -> SetFunction {
    let n = m.n();
    if r == 0 {
        SetFunction::from_fn_int(n, |x| x.len() as i64, Modularity::Supermodular)
    } else {
        let table = union_rank_table(m, r);
        SetFunction::from_fn_int(
            n,
            |x| x.len() as i64 - table[x.bits() as usize] as i64,
            Modularity::Supermodular,
        )
    }
}

/// The polyhedron whose 0/1 points are exactly the removal family:
/// P(ρ) ∩ {x : x(S) ≥ |S| − ρ^{k−1}(S) for all S}.
pub fn removal_polyhedron(m: &Matroid, k: u32) -> PolyhedronDescription {
    assert!(k >= 1);
    let rho = matroid_set_function(m, MatroidSetFunctionKind::Rank);
    PolyhedronDescription::submodular(rho)
        .intersect_supermodular(union_cospanning_dual(m, k - 1))
        .expect("dimensions agree")
}

/// Find X in the removal family with lo ≤ |X| ≤ hi by greedy coordinate
/// fixing: elements are taken in ascending order and kept in X whenever a
/// valid completion still exists.
pub fn find_removable(m: &Matroid, k: u32, lo: u64, hi: u64) -> Result<ElementSet, Error> {
    assert!(k >= 1);
    if lo > hi {
        return Err(Error::InvalidWindow { lo: lo.to_string(), hi: hi.to_string() });
    }
    let full = m.full_set();
    if !is_in_union(m, k, full) {
        return Err(not_in_union_error(m, k, full, None));
    }
    let search = RemovalSearch::new(m, k, lo, hi);
    if !search.feasible(ElementSet::empty(), ElementSet::empty()) {
        return Err(Error::NoRemovableSet { k, lo, hi });
    }
    let mut chosen = ElementSet::empty();
    let mut excluded = ElementSet::empty();
    for e in 0..m.n() {
        if search.feasible(chosen.with(e), excluded) {
            chosen.insert(e);
        } else {
            // any completion that avoids e witnesses feasibility of this arm
            excluded.insert(e);
        }
    }
    debug_assert!(in_removal_family(m, k, chosen));
    Ok(chosen)
}

struct RemovalSearch<'a> {
    m: &'a Matroid,
    lo: u64,
    hi: u64,
    /// Membership of each subset in I^{k−1}; for k = 1 only the empty set.
    complement_ok: Vec<bool>,
}

impl<'a> RemovalSearch<'a> {
    fn new(m: &'a Matroid, k: u32, lo: u64, hi: u64) -> Self {
        let complement_ok = if k == 1 {
            let mut t = vec![false; 1 << m.n()];
            t[0] = true;
            t
        } else {
            in_union_table(m, k - 1)
        };
        RemovalSearch { m, lo, hi, complement_ok }
    }

    /// Does some X with `fixed_in` ⊆ X ⊆ E∖`fixed_out` satisfy the removal
    /// family conditions and the window? Bounded exhaustive search over the
    /// undecided elements with independence and counting prune.
    fn feasible(&self, fixed_in: ElementSet, fixed_out: ElementSet) -> bool {
        if fixed_in.len() as u64 > self.hi || !self.m.is_independent(fixed_in) {
            return false;
        }
        self.extend(fixed_in, fixed_out, 0)
    }

    fn extend(&self, current: ElementSet, out: ElementSet, next: usize) -> bool {
        let n = self.m.n();
        let undecided = (next..n).filter(|&e| !current.contains(e) && !out.contains(e)).count();
        if (current.len() + undecided) < self.lo as usize {
            return false;
        }
        let free = (next..n).find(|&e| !current.contains(e) && !out.contains(e));
        match free {
            None => {
                (current.len() as u64) >= self.lo
                    && self.complement_ok
                        [self.m.full_set().difference(current).bits() as usize]
            }
            Some(e) => {
                // include e first when capacity remains, then exclude
                if (current.len() as u64) < self.hi
                    && self.m.is_independent(current.with(e))
                    && self.extend(current.with(e), out, e + 1)
                {
                    return true;
                }
                self.extend(current, out.with(e), e + 1)
            }
        }
    }
}

/// Nearly uniform partition of E into k independent sets: every block size
/// lies in [⌊|E|/k⌋, ⌈|E|/k⌉].
pub fn partition_nearly_uniform(m: &Matroid, k: u32) -> Result<Partition, Error> {
    Ok(partition_nearly_uniform_steps(m, k)?.0)
}

/// Same as [`partition_nearly_uniform`] but also reports the removal steps.
pub fn partition_nearly_uniform_steps(
    m: &Matroid,
    k: u32,
) -> Result<(Partition, Vec<RemovalStep>), Error> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = m.n() as u64;
    let lo = n / k as u64;
    let hi = n.div_ceil(k as u64);
    partition_with_window_inner(m, k, lo, hi, true)
}

/// Partition of E into k independent sets with every block size in
/// [lo, hi]. Unlike the nearly uniform window, a custom window may admit no
/// partition, reported as a step failure.
pub fn partition_with_window(
    m: &Matroid,
    k: u32,
    lo: u64,
    hi: u64,
) -> Result<Partition, Error> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    Ok(partition_with_window_inner(m, k, lo, hi, false)?.0)
}

fn partition_with_window_inner(
    m: &Matroid,
    k: u32,
    lo: u64,
    hi: u64,
    balanced: bool,
) -> Result<(Partition, Vec<RemovalStep>), Error> {
    let full = m.full_set();
    if !is_in_union(m, k, full) {
        return Err(not_in_union_error(m, k, full, None));
    }

    let mut current_global = full;
    let mut blocks = Vec::with_capacity(k as usize);
    let mut steps = Vec::with_capacity(k as usize);
    for step in 0..k {
        let remaining = k - step;
        if current_global.is_empty() {
            // every element is placed; remaining blocks stay empty
            if lo > 0 {
                return Err(Error::StepFailure { ell: step, f: current_global, lo, hi });
            }
            steps.push(RemovalStep {
                f: current_global,
                remaining,
                chosen: ElementSet::empty(),
                window: (lo, hi),
            });
            blocks.push(ElementSet::empty());
            continue;
        }
        // tighten the window so the residual stays splittable
        let Some((step_lo, step_hi)) =
            step_window(lo, hi, current_global.len() as u64, remaining)
        else {
            return Err(Error::StepFailure { ell: step, f: current_global, lo, hi });
        };
        let locals = current_global.indices();
        let restricted = m.restrict(current_global).expect("subset of ground");
        let local_choice = match find_removable(&restricted, remaining, step_lo, step_hi) {
            Ok(x) => x,
            Err(Error::NoRemovableSet { .. }) => {
                return Err(Error::StepFailure { ell: step, f: current_global, lo, hi })
            }
            Err(e) => return Err(e),
        };
        let chosen: ElementSet = local_choice.iter().map(|i| locals[i]).collect();
        steps.push(RemovalStep {
            f: current_global,
            remaining,
            chosen,
            window: (step_lo, step_hi),
        });
        blocks.push(chosen);
        current_global = current_global.difference(chosen);
        if balanced && remaining > 1 {
            // window propagation: the residual stays nearly uniform
            let residual = current_global.len() as u64;
            let left = (remaining - 1) as u64;
            assert!(
                lo * left <= residual && residual <= hi * left,
                "window propagation failed: |F| = {} after step {} of k = {}",
                residual,
                step,
                k
            );
        }
    }
    assert!(current_global.is_empty(), "blocks must cover the ground set");
    Ok((Partition::new(blocks), steps))
}
