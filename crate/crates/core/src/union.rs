//! Union matroid M^k of k copies of a matroid: rank, membership,
//! constructive colorings, and the covering index.

use std::collections::VecDeque;

use crate::error::Error;
use crate::ground::ElementSet;
use crate::matroid::Matroid;

/// Largest |X| for which the union rank is evaluated by exhaustive
/// minimization of |X∖Y| + k·ρ(Y) over Y ⊆ X. Larger sets fall back to the
/// augmenting-path construction, which computes the same value.
pub const EXHAUSTIVE_UNION_CAP: usize = 20;

/// View of the union matroid M^k = (E, I^k).
#[derive(Debug, Clone, Copy)]
pub struct UnionMatroid<'a> {
    base: &'a Matroid,
    k: u32,
}

impl<'a> UnionMatroid<'a> {
    pub fn new(base: &'a Matroid, k: u32) -> Self {
        assert!(k >= 1, "union matroid needs k >= 1");
        UnionMatroid { base, k }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rank(&self, x: ElementSet) -> u64 {
        union_rank(self.base, self.k, x)
    }

    pub fn contains(&self, x: ElementSet) -> bool {
        is_in_union(self.base, self.k, x)
    }

    /// Materialize M^k as an explicit matroid (small n only).
    pub fn to_explicit(&self) -> Result<Matroid, Error> {
        let n = self.base.n();
        let table = (0..1u64 << n)
            .map(|bits| self.rank(ElementSet::from_bits(bits)))
            .collect();
        Matroid::from_rank_table(n, table)
    }
}

/// Rank of X in the union matroid M^k:
/// ρ^k(X) = min{ |X∖Y| + k·ρ(Y) : Y ⊆ X }.
pub fn union_rank(m: &Matroid, k: u32, x: ElementSet) -> u64 {
    assert!(k >= 1, "union rank needs k >= 1");
    if x.len() <= EXHAUSTIVE_UNION_CAP {
        union_rank_formula(m, k, x)
    } else {
        let (count, _) = color_greedy(m, k, x, true);
        count
    }
}

fn union_rank_formula(m: &Matroid, k: u32, x: ElementSet) -> u64 {
    let mut best = u64::MAX;
    for y in x.subsets() {
        let value = (x.len() - y.len()) as u64 + k as u64 * m.rank(y);
        best = best.min(value);
    }
    best
}

/// Union-rank table over every subset of the ground set, indexed by bitmask.
///
/// Evaluates the same minimization as [`union_rank`] through the recurrence
/// ρ^k(Y) = min(k·ρ(Y), 1 + min_{e∈Y} ρ^k(Y∖e)), one rank call per subset.
pub fn union_rank_table(m: &Matroid, k: u32) -> Vec<u64> {
    assert!(k >= 1, "union rank needs k >= 1");
    let n = m.n();
    let size = 1usize << n;
    let mut table = vec![0u64; size];
    for bits in 1..size {
        let y = ElementSet::from_bits(bits as u64);
        let mut best = k as u64 * m.rank(y);
        let mut rest = bits as u64;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.min(1 + table[bits & !(1usize << e)]);
        }
        table[bits] = best;
    }
    table
}

/// Membership table for I^k over every subset; index by bitmask.
pub fn in_union_table(m: &Matroid, k: u32) -> Vec<bool> {
    union_rank_table(m, k)
        .iter()
        .enumerate()
        .map(|(bits, &r)| r == (bits as u64).count_ones() as u64)
        .collect()
}

/// Membership test X ∈ I^k.
pub fn is_in_union(m: &Matroid, k: u32, x: ElementSet) -> bool {
    union_rank(m, k, x) == x.len() as u64
}

/// The minimizing witness of the union-rank formula: a set Y ⊆ X together
/// with |X∖Y| + k·ρ(Y). When X ∉ I^k the bound is below |X| and certifies it.
pub fn union_shortfall_witness(m: &Matroid, k: u32, x: ElementSet) -> (ElementSet, u64) {
    let mut best = (x, u64::MAX);
    for y in x.subsets() {
        let bound = (x.len() - y.len()) as u64 + k as u64 * m.rank(y);
        if bound < best.1 {
            best = (y, bound);
        }
    }
    best
}

/// Build the standard infeasibility error for X ∉ I^k.
pub(crate) fn not_in_union_error(
    m: &Matroid,
    k: u32,
    x: ElementSet,
    matroid: Option<usize>,
) -> Error {
    let (witness, bound) = union_shortfall_witness(m, k, x);
    Error::NotInUnion { matroid, k, witness, bound, size: x.len() as u64 }
}

/// A partition of a set into k independent blocks (some possibly empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub blocks: Vec<ElementSet>,
}

impl Coloring {
    /// Check disjointness, coverage of `x`, and independence of every block.
    pub fn validate(&self, m: &Matroid, x: ElementSet) -> bool {
        let mut union = ElementSet::empty();
        for &b in &self.blocks {
            if !union.is_disjoint_from(b) || !m.is_independent(b) {
                return false;
            }
            union = union | b;
        }
        union == x
    }
}

/// Split X into k independent blocks by the matroid-partition
/// augmenting-path construction.
///
/// On infeasible input returns the violating certificate: a set Y ⊆ X with
/// |X∖Y| + k·ρ(Y) < |X|.
pub fn color_into_independent(m: &Matroid, k: u32, x: ElementSet) -> Result<Coloring, Error> {
    assert!(k >= 1, "coloring needs k >= 1");
    let (count, state) = color_greedy(m, k, x, false);
    if count < x.len() as u64 {
        let witness = state.failure_witness.expect("failure recorded");
        return Err(Error::NotInUnion {
            matroid: None,
            k,
            witness,
            bound: (x.len() - witness.len()) as u64 + k as u64 * m.rank(witness),
            size: x.len() as u64,
        });
    }
    let coloring = Coloring { blocks: state.classes };
    assert!(coloring.validate(m, x), "augmenting-path coloring invalid");
    Ok(coloring)
}

struct ColorState {
    classes: Vec<ElementSet>,
    class_of: Vec<Option<usize>>,
    failure_witness: Option<ElementSet>,
}

/// Insert elements of `x` in ascending order, augmenting along shortest
/// exchange paths. With `skip_failures` the insertion continues past
/// uninsertable elements and the final count equals ρ^k(X).
fn color_greedy(m: &Matroid, k: u32, x: ElementSet, skip_failures: bool) -> (u64, ColorState) {
    let n = m.n();
    let mut state = ColorState {
        classes: vec![ElementSet::empty(); k as usize],
        class_of: vec![None; n],
        failure_witness: None,
    };
    let mut placed = 0u64;
    for e in x.iter() {
        match try_insert(m, &mut state, e) {
            Ok(()) => placed += 1,
            Err(reachable) => {
                state.failure_witness = Some(reachable);
                if !skip_failures {
                    break;
                }
            }
        }
    }
    (placed, state)
}

/// One augmentation step. On failure returns the set R of elements reachable
/// from `e` in the exchange digraph; R satisfies k·ρ(R) = |R| − 1, so R
/// certifies that the colored set plus `e` is outside I^k.
fn try_insert(m: &Matroid, state: &mut ColorState, e: usize) -> Result<(), ElementSet> {
    let n = m.n();
    let k = state.classes.len();
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut visited = ElementSet::singleton(e);
    let mut queue = VecDeque::from([e]);

    while let Some(u) = queue.pop_front() {
        // direct landing: a class that accepts u as-is
        for j in 0..k {
            if state.class_of[u] == Some(j) {
                continue;
            }
            if m.is_independent(state.classes[j].with(u)) {
                augment(state, &pred, u, j);
                return Ok(());
            }
        }
        // exchange arcs u -> v: u may replace v in v's class
        for (v, &class_v) in state.class_of.iter().enumerate().take(n) {
            if visited.contains(v) {
                continue;
            }
            let Some(jv) = class_v else { continue };
            if state.class_of[u] == Some(jv) {
                continue;
            }
            if m.is_independent(state.classes[jv].without(v).with(u)) {
                visited.insert(v);
                pred[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    Err(visited)
}

/// Realize the augmenting path ending at `landing` into class `dest`,
/// walking predecessor links back to the new element.
fn augment(state: &mut ColorState, pred: &[Option<usize>], landing: usize, dest: usize) {
    let mut carrier = landing;
    let mut dest = dest;
    loop {
        let prev = state.class_of[carrier];
        if let Some(c) = prev {
            state.classes[c].remove(carrier);
        }
        state.classes[dest].insert(carrier);
        state.class_of[carrier] = Some(dest);
        match (prev, pred[carrier]) {
            (Some(c), Some(p)) => {
                carrier = p;
                dest = c;
            }
            _ => break, // reached the new element, which had no class
        }
    }
}

/// Covering index μ* = min{μ : E ∈ I^μ}, the least number of independent
/// sets needed to cover the ground set.
pub fn covering_index(m: &Matroid) -> Result<u32, Error> {
    let loops = m.loops();
    if let Some(element) = loops.min() {
        return Err(Error::LoopPresent { matroid: None, element });
    }
    let full = m.full_set();
    for mu in 1..=m.n() as u32 {
        if is_in_union(m, mu, full) {
            return Ok(mu);
        }
    }
    unreachable!("loop-free matroid is covered by n singletons")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn union_rank_examples() {
        let u24 = fixtures::u24();
        assert_eq!(union_rank(&u24, 2, u24.full_set()), 4);
        let u13 = fixtures::u13();
        assert_eq!(union_rank(&u13, 2, u13.full_set()), 2);
        // k = 1 reduces to the rank function
        let k4 = fixtures::k4();
        for bits in 0..1u64 << 6 {
            let x = ElementSet::from_bits(bits);
            assert_eq!(union_rank(&k4, 1, x), k4.rank(x));
        }
    }

    #[test]
    fn union_membership_examples() {
        let u24 = fixtures::u24();
        assert!(is_in_union(&u24, 2, u24.full_set()));
        let u13 = fixtures::u13();
        assert!(!is_in_union(&u13, 2, u13.full_set()));
        assert!(is_in_union(&u13, 2, ElementSet::empty()));
    }

    #[test]
    fn formula_agrees_with_augmenting_paths() {
        for (_, m) in fixtures::all() {
            for k in 1..=3 {
                for bits in 0..1u64 << m.n() {
                    let x = ElementSet::from_bits(bits);
                    let (count, _) = color_greedy(&m, k, x, true);
                    assert_eq!(union_rank_formula(&m, k, x), count);
                }
            }
        }
    }

    #[test]
    fn coloring_examples() {
        let u24 = fixtures::u24();
        let c = color_into_independent(&u24, 2, u24.full_set()).unwrap();
        assert!(c.validate(&u24, u24.full_set()));
        assert_eq!(c.blocks.len(), 2);

        let u13 = fixtures::u13();
        let c = color_into_independent(&u13, 3, u13.full_set()).unwrap();
        assert!(c.blocks.iter().all(|b| b.len() <= 1));

        // two edge-disjoint spanning trees of K4
        let k4 = fixtures::k4();
        let c = color_into_independent(&k4, 2, k4.full_set()).unwrap();
        assert!(c.validate(&k4, k4.full_set()));
        assert!(c.blocks.iter().all(|b| b.len() == 3 && k4.rank(*b) == 3));
    }

    #[test]
    fn infeasible_coloring_reports_certificate() {
        let u13 = fixtures::u13();
        let err = color_into_independent(&u13, 2, u13.full_set()).unwrap_err();
        match err {
            Error::NotInUnion { k, witness, bound, size, .. } => {
                assert_eq!(k, 2);
                assert!(bound < size);
                assert!(witness.is_subset_of(u13.full_set()));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn covering_index_fixtures() {
        assert_eq!(covering_index(&fixtures::u24()).unwrap(), 2);
        assert_eq!(covering_index(&fixtures::u13()).unwrap(), 3);
        assert_eq!(covering_index(&fixtures::k4()).unwrap(), 2);
        assert_eq!(covering_index(&fixtures::p2()).unwrap(), 2);
        let withloop = Matroid::uniform(3, 0).unwrap();
        assert!(matches!(covering_index(&withloop), Err(Error::LoopPresent { .. })));
    }

    #[test]
    fn table_matches_per_set_formula() {
        for (_, m) in fixtures::all() {
            for k in 1..=3 {
                let table = union_rank_table(&m, k);
                for bits in 0..1u64 << m.n() {
                    assert_eq!(table[bits as usize], union_rank(&m, k, ElementSet::from_bits(bits)));
                }
            }
        }
    }

    #[test]
    fn large_ground_sets_use_the_augmenting_path() {
        // |X| > EXHAUSTIVE_UNION_CAP exercises the constructive route;
        // closed forms for uniform and partition matroids pin the values
        let m = Matroid::uniform(24, 7).unwrap();
        assert_eq!(union_rank(&m, 2, m.full_set()), 14);
        assert_eq!(union_rank(&m, 3, m.full_set()), 21);
        assert_eq!(union_rank(&m, 4, m.full_set()), 24);
        assert!(is_in_union(&m, 4, m.full_set()));

        let blocks: Vec<Vec<usize>> = (0..8).map(|b| (3 * b..3 * b + 3).collect()).collect();
        let p = Matroid::partition(24, blocks, vec![1; 8]).unwrap();
        assert_eq!(union_rank(&p, 2, p.full_set()), 16);
        assert_eq!(covering_index(&p).unwrap(), 3);
    }

    #[test]
    fn union_rank_with_loops_matches_brute_force() {
        let looped = Matroid::graphic(3, vec![(0, 1), (1, 1), (1, 2), (2, 2), (0, 2)]).unwrap();
        let brute = crate::oracle::BruteOracle::new(&looped, 3);
        for k in 1..=3 {
            for bits in 0..1u64 << 5 {
                let x = ElementSet::from_bits(bits);
                assert_eq!(union_rank(&looped, k, x), brute.union_rank(k, x));
            }
        }
    }

    #[test]
    fn union_rank_monotone_in_k() {
        for (_, m) in fixtures::all() {
            for bits in 0..1u64 << m.n() {
                let x = ElementSet::from_bits(bits);
                for k in 1..=3 {
                    assert!(union_rank(&m, k, x) <= union_rank(&m, k + 1, x));
                }
            }
        }
    }
}
