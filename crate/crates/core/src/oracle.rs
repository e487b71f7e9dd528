//! Independent exhaustive oracles.
//!
//! Everything here recomputes its answers from the rank oracle alone, by
//! direct enumeration, and never calls into the union, polyhedra, or
//! partition machinery it is used to certify.

use serde::Serialize;

use crate::error::Error;
use crate::ground::ElementSet;
use crate::matroid::Matroid;
use crate::partition::Partition;
use crate::partition_common::CommonInstance;
use crate::partition_single::{in_removal_family, removal_polyhedron};
use crate::union::not_in_union_error;

/// Ground-set cap for the exhaustive tables (3^n work per layer).
pub const BRUTE_CAP: usize = 16;

/// Per-matroid tables of independence, union membership, and union rank,
/// built by direct recursion over subsets.
pub struct BruteOracle {
    n: usize,
    independent: Vec<bool>,
    /// `layers[k-1][mask]`: mask splits into k independent parts.
    layers: Vec<Vec<bool>>,
    /// `best[k-1][mask]`: largest subset of mask inside I^k.
    best: Vec<Vec<u64>>,
}

impl BruteOracle {
    pub fn new(m: &Matroid, k_max: u32) -> Self {
        let n = m.n();
        assert!(n <= BRUTE_CAP, "brute oracle cap is n <= {}", BRUTE_CAP);
        assert!(k_max >= 1);
        let size = 1usize << n;
        let independent: Vec<bool> = (0..size)
            .map(|bits| m.is_independent(ElementSet::from_bits(bits as u64)))
            .collect();
        let mut oracle =
            BruteOracle { n, independent, layers: Vec::new(), best: Vec::new() };
        for _ in 0..k_max {
            oracle.push_layer();
        }
        oracle
    }

    /// Extend the tables by one more union layer.
    fn push_layer(&mut self) {
        let size = 1usize << self.n;
        let layer: Vec<bool> = match self.layers.last() {
            None => self.independent.clone(),
            Some(prev) => (0..size)
                .map(|mask| {
                    if mask == 0 {
                        return true;
                    }
                    // the part containing the lowest element runs over
                    // independent subsets; the rest recurses
                    let low = mask.trailing_zeros() as usize;
                    let rest_mask = mask & !(1usize << low);
                    let mut sub = rest_mask;
                    loop {
                        let part = sub | (1usize << low);
                        if self.independent[part] && prev[mask & !part] {
                            return true;
                        }
                        if sub == 0 {
                            return false;
                        }
                        sub = (sub - 1) & rest_mask;
                    }
                })
                .collect(),
        };
        let mut best = vec![0u64; size];
        for mask in 1..size {
            best[mask] = if layer[mask] {
                (mask as u64).count_ones() as u64
            } else {
                let mut value = 0;
                let mut rest = mask as u64;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    rest &= rest - 1;
                    value = value.max(best[mask & !(1usize << e)]);
                }
                value
            };
        }
        self.layers.push(layer);
        self.best.push(best);
    }

    pub fn k_max(&self) -> u32 {
        self.layers.len() as u32
    }

    pub fn is_independent(&self, x: ElementSet) -> bool {
        self.independent[x.bits() as usize]
    }

    /// X ∈ I^k by table lookup; k = 0 holds only for the empty set.
    pub fn in_union(&self, k: u32, x: ElementSet) -> bool {
        if k == 0 {
            return x.is_empty();
        }
        assert!(k <= self.k_max(), "oracle built with k_max = {}", self.k_max());
        self.layers[(k - 1) as usize][x.bits() as usize]
    }

    /// Max cardinality of a subset of X that splits into k independent sets.
    pub fn union_rank(&self, k: u32, x: ElementSet) -> u64 {
        assert!(k >= 1 && k <= self.k_max());
        self.best[(k - 1) as usize][x.bits() as usize]
    }
}

/// One-off brute-force union rank.
pub fn brute_union_rank(m: &Matroid, k: u32, x: ElementSet) -> u64 {
    BruteOracle::new(m, k).union_rank(k, x)
}

/// Covering index by incrementing the layer count; None when a loop makes
/// every cover impossible.
pub fn brute_covering_index(m: &Matroid) -> Option<u32> {
    let n = m.n();
    if (0..n).any(|e| m.rank(ElementSet::singleton(e)) == 0) {
        return None;
    }
    let full = m.full_set();
    let mut oracle = BruteOracle::new(m, 1);
    for mu in 1..=n as u32 {
        if oracle.in_union(mu, full) {
            return Some(mu);
        }
        oracle.push_layer();
    }
    unreachable!("loop-free matroid is covered by n singletons")
}

/// Backtracking search for a partition of E into k common independent
/// blocks with sizes inside the window; block order is canonical (each block
/// holds the smallest uncovered element), so the first answer is
/// deterministic.
pub fn brute_partition_exists(
    inst: &CommonInstance,
    window: Option<(u64, u64)>,
) -> Option<Partition> {
    let n = inst.n();
    assert!(n <= BRUTE_CAP);
    let (lo, hi) = window.unwrap_or((0, n as u64));
    if lo > hi {
        return None;
    }
    let mut blocks = Vec::with_capacity(inst.k() as usize);
    if search_blocks(inst, inst.full_set(), inst.k(), lo, hi, &mut blocks) {
        while blocks.len() < inst.k() as usize {
            blocks.push(ElementSet::empty());
        }
        Some(Partition::new(blocks))
    } else {
        None
    }
}

fn search_blocks(
    inst: &CommonInstance,
    f: ElementSet,
    blocks_left: u32,
    lo: u64,
    hi: u64,
    acc: &mut Vec<ElementSet>,
) -> bool {
    if f.is_empty() {
        // trailing blocks stay empty
        return lo == 0 || blocks_left == 0;
    }
    if blocks_left == 0 {
        return false;
    }
    let remaining = f.len() as u64;
    if remaining > blocks_left as u64 * hi || remaining < blocks_left as u64 * lo {
        return false;
    }
    let e = f.min().expect("nonempty");
    let pool = f.without(e);
    let mut size = lo.max(1);
    while size <= hi.min(f.len() as u64) {
        for tail in pool.subsets_of_size(size as usize - 1) {
            let block = tail.with(e);
            if inst.is_common_independent(block) {
                acc.push(block);
                if search_blocks(inst, f.difference(block), blocks_left - 1, lo, hi, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        size += 1;
    }
    false
}

/// Structured verification of a partition or subpartition output.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub mode: String,
    pub block_count_ok: bool,
    pub disjoint: bool,
    /// Partition mode only: blocks cover the ground set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<bool>,
    pub blocks_independent: bool,
    /// Per block, independence in matroid 1 and matroid 2.
    pub block_independence: Vec<(bool, bool)>,
    pub sizes: Vec<usize>,
    pub spread: usize,
    pub spread_ok: bool,
    /// Present when a window was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window_ok: Option<bool>,
    /// Subpartition mode only: remainder stays in I_i^{μ*₂+1} for both i.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remainder_ok: Option<bool>,
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Partition,
    Subpartition,
}

/// Check a claimed (sub)partition against the instance: disjointness,
/// coverage, per-block common independence, near-uniformity, window
/// containment, and the subpartition remainder condition. All union
/// memberships are recomputed with the brute tables.
pub fn verify_partition(
    inst: &CommonInstance,
    partition: &Partition,
    mode: VerifyMode,
    window: Option<(u64, u64)>,
) -> VerifyReport {
    let mut failures = Vec::new();
    let ground = inst.full_set();

    let brute_mu2 = match mode {
        VerifyMode::Subpartition => {
            let mu1 = brute_covering_index(inst.m1());
            let mu2 = brute_covering_index(inst.m2());
            match (mu1, mu2) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => {
                    failures.push("a matroid has a loop: no covering exists".into());
                    None
                }
            }
        }
        VerifyMode::Partition => None,
    };

    let expected_blocks = match (mode, brute_mu2) {
        (VerifyMode::Partition, _) => Some(inst.k() as usize),
        (VerifyMode::Subpartition, Some(mu2)) if mu2 < inst.k() => {
            Some((inst.k() - mu2 - 1) as usize)
        }
        (VerifyMode::Subpartition, Some(mu2)) => {
            failures.push(format!("mu*_2 = {} is not below k = {}", mu2, inst.k()));
            None
        }
        (VerifyMode::Subpartition, None) => None,
    };
    let block_count_ok = expected_blocks == Some(partition.blocks.len());
    if !block_count_ok {
        failures.push(format!(
            "expected {:?} blocks, found {}",
            expected_blocks,
            partition.blocks.len()
        ));
    }

    let disjoint = partition.is_disjoint();
    if !disjoint {
        failures.push("blocks overlap".into());
    }

    let covers = match mode {
        VerifyMode::Partition => {
            let ok = partition.union() == ground;
            if !ok {
                failures.push(format!("blocks cover {} instead of E", partition.union()));
            }
            Some(ok)
        }
        VerifyMode::Subpartition => None,
    };

    let mut blocks_independent = true;
    let mut block_independence = Vec::with_capacity(partition.blocks.len());
    for (i, &block) in partition.blocks.iter().enumerate() {
        let status = (inst.m1().is_independent(block), inst.m2().is_independent(block));
        for (j, ok) in [status.0, status.1].into_iter().enumerate() {
            if !ok {
                blocks_independent = false;
                failures.push(format!("block {} {} dependent in matroid {}", i, block, j + 1));
            }
        }
        block_independence.push(status);
    }

    let sizes = partition.sizes();
    let spread = partition.spread();
    let spread_ok = spread <= 1;
    if !spread_ok {
        failures.push(format!("size spread {} exceeds 1", spread));
    }

    let window_ok = window.map(|(lo, hi)| {
        let ok = sizes.iter().all(|&s| lo <= s as u64 && s as u64 <= hi);
        if !ok {
            failures.push(format!("a block size escapes the window [{},{}]", lo, hi));
        }
        ok
    });

    let remainder_ok = match (mode, brute_mu2) {
        (VerifyMode::Subpartition, Some(mu2)) => {
            let remainder = ground.difference(partition.union());
            let exponent = mu2 + 1;
            let ok = inst.matroids().into_iter().enumerate().all(|(idx, m)| {
                let oracle = BruteOracle::new(m, exponent);
                let good = oracle.in_union(exponent, remainder);
                if !good {
                    failures.push(format!(
                        "remainder {} outside I^{} of matroid {}",
                        remainder,
                        exponent,
                        idx + 1
                    ));
                }
                good
            });
            Some(ok)
        }
        _ => None,
    };

    let pass = failures.is_empty();
    VerifyReport {
        mode: match mode {
            VerifyMode::Partition => "partition".into(),
            VerifyMode::Subpartition => "subpartition".into(),
        },
        block_count_ok,
        disjoint,
        covers,
        blocks_independent,
        block_independence,
        sizes,
        spread,
        spread_ok,
        window_ok,
        remainder_ok,
        failures,
        pass,
    }
}

/// Outcome of comparing the removal polyhedron against the removal family
/// at every 0/1 point.
#[derive(Debug, Clone, Serialize)]
pub struct HullReport {
    pub n: usize,
    pub k: u32,
    pub checked: usize,
    /// Subsets where polyhedron membership and family membership differ,
    /// as (set, in_polyhedron, in_family).
    pub discrepancies: Vec<(String, bool, bool)>,
    pub pass: bool,
}

/// Verify, for every X ⊆ E, that χ_X lies in P(ρ) ∩ P(|·|−ρ^{k−1}) exactly
/// when X is independent with complement splitting into k−1 independent
/// sets. The family side is recomputed from the brute union tables.
pub fn check_hull_equivalence(m: &Matroid, k: u32) -> Result<HullReport, Error> {
    let n = m.n();
    assert!(n <= BRUTE_CAP);
    assert!(k >= 1);
    let full = m.full_set();
    let oracle = BruteOracle::new(m, k);
    // E ∈ I^k is the standing assumption of the equivalence
    if !oracle.in_union(k, full) {
        return Err(not_in_union_error(m, k, full, None));
    }
    let polyhedron = removal_polyhedron(m, k);
    let mut discrepancies = Vec::new();
    for bits in 0..1u64 << n {
        let x = ElementSet::from_bits(bits);
        let in_polyhedron = polyhedron.contains_characteristic(x);
        let complement = full.difference(x);
        let in_family = oracle.is_independent(x)
            && if k == 1 { complement.is_empty() } else { oracle.in_union(k - 1, complement) };
        debug_assert_eq!(in_family, in_removal_family(m, k, x));
        if in_polyhedron != in_family {
            discrepancies.push((x.to_string(), in_polyhedron, in_family));
        }
    }
    Ok(HullReport {
        n,
        k,
        checked: 1 << n,
        pass: discrepancies.is_empty(),
        discrepancies,
    })
}

/// Report of the exhaustive rank axiom check.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub normalization: bool,
    pub unit_monotone: bool,
    pub submodular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
    pub pass: bool,
}

/// Exhaustively check normalization, monotone unit increase, and
/// submodularity of the rank function.
pub fn check_matroid_axioms(m: &Matroid) -> AxiomReport {
    let n = m.n();
    assert!(n <= BRUTE_CAP);
    let table = m.rank_table();
    let size = 1usize << n;
    let mut report = AxiomReport {
        normalization: table[0] == 0,
        unit_monotone: true,
        submodular: true,
        first_violation: None,
        pass: true,
    };
    if !report.normalization {
        report.first_violation = Some(format!("rank of empty set is {}", table[0]));
    }
    'unit: for mask in 0..size {
        for e in 0..n {
            if mask & (1 << e) != 0 {
                continue;
            }
            let bigger = mask | (1 << e);
            if table[bigger] < table[mask] || table[bigger] > table[mask] + 1 {
                report.unit_monotone = false;
                report.first_violation.get_or_insert(format!(
                    "unit increase fails between {} and {}",
                    ElementSet::from_bits(mask as u64),
                    ElementSet::from_bits(bigger as u64)
                ));
                break 'unit;
            }
        }
    }
    'sub: for x in 0..size {
        for y in 0..x {
            if table[x] + table[y] < table[x | y] + table[x & y] {
                report.submodular = false;
                report.first_violation.get_or_insert(format!(
                    "submodularity fails at X={}, Y={}",
                    ElementSet::from_bits(x as u64),
                    ElementSet::from_bits(y as u64)
                ));
                break 'sub;
            }
        }
    }
    report.pass = report.normalization && report.unit_monotone && report.submodular;
    report
}

/// Seeded random instance generation.
pub mod gen {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::matroid::Matroid;
    use crate::polyhedra::{Rational, RationalPoint};

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A loop-free matroid of one of the concrete kinds, possibly wrapped
    /// in a dual when the dual stays loop-free.
    pub fn random_loopfree_matroid(rng: &mut ChaCha8Rng, max_n: usize) -> Matroid {
        let n = rng.gen_range(1..=max_n);
        random_loopfree_matroid_on(rng, n)
    }

    /// Same, over a ground set of exactly n elements.
    pub fn random_loopfree_matroid_on(rng: &mut ChaCha8Rng, n: usize) -> Matroid {
        let base = match rng.gen_range(0..4) {
            0 => {
                let r = rng.gen_range(1..=n as u64);
                Matroid::uniform(n, r).expect("valid uniform")
            }
            1 => {
                let block_count = rng.gen_range(1..=n);
                let mut blocks = vec![Vec::new(); block_count];
                for e in 0..n {
                    blocks[rng.gen_range(0..block_count)].push(e);
                }
                blocks.retain(|b| !b.is_empty());
                let caps = blocks.iter().map(|b| rng.gen_range(1..=b.len() as u64)).collect();
                Matroid::partition(n, blocks, caps).expect("valid partition")
            }
            2 => random_laminar(rng, n),
            _ => {
                let vertices = rng.gen_range(2..=n.clamp(2, 6));
                let edges = (0..n)
                    .map(|_| {
                        let u = rng.gen_range(0..vertices);
                        let mut v = rng.gen_range(0..vertices - 1);
                        if v >= u {
                            v += 1;
                        }
                        (u, v)
                    })
                    .collect();
                Matroid::graphic(vertices, edges).expect("valid graphic")
            }
        };
        if rng.gen_bool(0.25) {
            let dual = base.dual();
            if !dual.has_loops() {
                return dual;
            }
        }
        base
    }

    /// A random laminar matroid with all capacities at least one.
    pub fn random_laminar(rng: &mut ChaCha8Rng, n: usize) -> Matroid {
        assert!(n >= 1);
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut sets = Vec::new();
        let mut caps = Vec::new();
        collect_family(rng, &order, &mut sets, &mut caps);
        if sets.is_empty() {
            // make sure at least one constraint exists
            sets.push(order.clone());
            caps.push(rng.gen_range(1..=n as u64));
        }
        Matroid::laminar(n, sets, caps).expect("family is laminar by construction")
    }

    fn collect_family(
        rng: &mut ChaCha8Rng,
        elems: &[usize],
        sets: &mut Vec<Vec<usize>>,
        caps: &mut Vec<u64>,
    ) {
        if elems.len() < 2 {
            return;
        }
        if rng.gen_bool(0.6) {
            sets.push(elems.to_vec());
            caps.push(rng.gen_range(1..=elems.len() as u64));
        }
        if rng.gen_bool(0.75) {
            let cut = rng.gen_range(1..elems.len());
            collect_family(rng, &elems[..cut], sets, caps);
            collect_family(rng, &elems[cut..], sets, caps);
        }
    }

    /// A rational point with denominators up to 6 and coordinates spread
    /// around the unit interval, for sampling membership tests.
    pub fn random_rational_point(rng: &mut ChaCha8Rng, n: usize) -> RationalPoint {
        RationalPoint::new(
            (0..n)
                .map(|_| {
                    let den = rng.gen_range(1..=6i64);
                    let num = rng.gen_range(-den..=3 * den);
                    Rational::new(num, den)
                })
                .collect(),
        )
    }
}
