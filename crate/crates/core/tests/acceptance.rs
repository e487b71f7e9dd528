//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! and enforcing its runtime budget.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use unipart::fixtures;
use unipart::ground::ElementSet;
use unipart::matroid::Matroid;
use unipart::oracle::{
    self, brute_covering_index, check_hull_equivalence, gen, BruteOracle, VerifyMode,
};
use unipart::partition_common::{
    partition_common_nearly_uniform, CommonInstance, FourPolyhedra, Strategy,
};
use unipart::partition_single::{partition_nearly_uniform, removal_polyhedron};
use unipart::polyhedra::{
    is_gpolymatroid_pair, lift_gpolymatroid, lift_projection_contains, matroid_set_function,
    MatroidSetFunctionKind, Membership, PolyhedronDescription, Rational, RationalPoint,
    SetFunction,
};
use unipart::union::{covering_index, union_rank};

fn criterion(number: u32, name: &str, budget: Duration, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = start.elapsed();
    let status = if outcome.is_ok() && elapsed <= budget { "PASS" } else { "FAIL" };
    println!(
        "[acceptance] criterion {} ({}): {} in {:.2?} (budget {:?})",
        number, name, status, elapsed, budget
    );
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
    assert!(
        elapsed <= budget,
        "criterion {} exceeded its runtime budget: {:.2?} > {:?}",
        number,
        elapsed,
        budget
    );
}

/// Criterion 2/3/8 instance pool: all fixtures with k = μ*..μ*+2, then 200
/// seeded random loop-free matroids with n ≤ 7 and k chosen with E ∈ I^k.
fn single_matroid_pool() -> Vec<(Matroid, u32)> {
    let mut pool = Vec::new();
    for (_, m) in fixtures::all() {
        let mu = brute_covering_index(&m).expect("fixtures are loop-free");
        for k in mu..=mu + 2 {
            pool.push((m.clone(), k));
        }
    }
    let mut rng = gen::rng(202);
    while pool.len() < 15 + 200 {
        let m = gen::random_loopfree_matroid(&mut rng, 7);
        let mu = brute_covering_index(&m).expect("generator avoids loops");
        let k = mu + rand::Rng::gen_range(&mut rng, 0..=3);
        pool.push((m, k));
    }
    pool
}

/// Criterion 4/8 pool: 100 seeded random laminar pairs with n ≤ 10 at the
/// minimal feasible k.
fn laminar_pair_pool() -> Vec<CommonInstance> {
    let mut rng = gen::rng(404);
    (0..100)
        .map(|_| {
            let n = rand::Rng::gen_range(&mut rng, 2..=10);
            let m1 = gen::random_laminar(&mut rng, n);
            let m2 = gen::random_laminar(&mut rng, n);
            let k = brute_covering_index(&m1)
                .unwrap()
                .max(brute_covering_index(&m2).unwrap());
            CommonInstance::new(m1, m2, k).expect("same ground set")
        })
        .collect()
}

#[test]
fn criterion_1_union_rank_oracle_equivalence() {
    criterion(1, "union-rank oracle equivalence", Duration::from_secs(60), || {
        let mut matroids: Vec<Matroid> = fixtures::all().into_iter().map(|(_, m)| m).collect();
        let mut rng = gen::rng(101);
        for _ in 0..50 {
            matroids.push(gen::random_loopfree_matroid(&mut rng, 8));
        }
        for (idx, m) in matroids.iter().enumerate() {
            let oracle = BruteOracle::new(m, 4);
            for k in 1..=4u32 {
                for bits in 0..1u64 << m.n() {
                    let x = ElementSet::from_bits(bits);
                    assert_eq!(
                        union_rank(m, k, x),
                        oracle.union_rank(k, x),
                        "matroid #{} (kind {}), k={}, X={}",
                        idx,
                        m.kind_tag(),
                        k,
                        x
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_2_hull_equivalence_at_01_points() {
    criterion(2, "removal-family hull at 0/1 points", Duration::from_secs(60), || {
        for (idx, (m, k)) in single_matroid_pool().iter().enumerate() {
            let report = check_hull_equivalence(m, *k).expect("E in I^k by construction");
            assert!(
                report.pass,
                "instance #{} (kind {}, n={}, k={}): discrepancies {:?}",
                idx,
                m.kind_tag(),
                m.n(),
                k,
                report.discrepancies
            );
        }
    });
}

#[test]
fn criterion_3_nearly_uniform_single_partitions() {
    criterion(3, "nearly uniform single-matroid partitions", Duration::from_secs(60), || {
        let mut pool = single_matroid_pool();
        pool.push((fixtures::k4(), 2));
        pool.push((fixtures::k4(), 3));
        for (idx, (m, k)) in pool.iter().enumerate() {
            let p = partition_nearly_uniform(m, *k).unwrap_or_else(|e| {
                panic!("instance #{} (n={}, k={}) failed: {}", idx, m.n(), k, e)
            });
            assert!(p.spread() <= 1, "instance #{}: spread {}", idx, p.spread());
            let inst = CommonInstance::new(m.clone(), m.clone(), *k).expect("same ground");
            let report = oracle::verify_partition(
                &inst,
                &p,
                VerifyMode::Partition,
                Some(inst.auto_window()),
            );
            assert!(report.pass, "instance #{}: {:?}", idx, report.failures);
        }
    });
}

#[test]
fn criterion_4_laminar_pairs_polyhedral_strategy() {
    criterion(4, "laminar pairs via polyhedral steps", Duration::from_secs(300), || {
        for (idx, inst) in laminar_pair_pool().iter().enumerate() {
            let p = partition_common_nearly_uniform(inst, Strategy::Polyhedral)
                .unwrap_or_else(|e| {
                    panic!("pair #{} (n={}, k={}): {}", idx, inst.n(), inst.k(), e)
                });
            assert!(p.spread() <= 1, "pair #{}: spread {}", idx, p.spread());
            let report = oracle::verify_partition(
                inst,
                &p,
                VerifyMode::Partition,
                Some(inst.auto_window()),
            );
            assert!(report.pass, "pair #{}: {:?}", idx, report.failures);
        }
    });
}

#[test]
fn criterion_5_subpartitions_of_random_pairs() {
    criterion(5, "nearly uniform subpartitions", Duration::from_secs(300), || {
        let mut rng = gen::rng(505);
        let mut done = 0;
        while done < 50 {
            let n = rand::Rng::gen_range(&mut rng, 2..=10);
            let a = gen::random_loopfree_matroid_on(&mut rng, n);
            let b = gen::random_loopfree_matroid_on(&mut rng, n);
            let mu2 = brute_covering_index(&a)
                .unwrap()
                .max(brute_covering_index(&b).unwrap());
            if mu2 >= 5 {
                continue;
            }
            let k = rand::Rng::gen_range(&mut rng, mu2 + 1..=5);
            let inst = CommonInstance::new(a, b, k).expect("same ground");
            let result = unipart::subpartition_common(&inst)
                .unwrap_or_else(|e| panic!("instance {} (n={}, k={}): {}", done, n, k, e));
            assert_eq!(result.blocks.len() as u32, k - mu2 - 1);
            assert_eq!(result.mu.0.max(result.mu.1), mu2);
            let (lo, hi) = inst.auto_window();
            for &block in &result.blocks {
                assert!(inst.is_common_independent(block));
                assert!(lo <= block.len() as u64 && block.len() as u64 <= hi);
            }
            let sizes: Vec<usize> = result.blocks.iter().map(|b| b.len()).collect();
            if let (Some(max), Some(min)) = (sizes.iter().max(), sizes.iter().min()) {
                assert!(max - min <= 1, "spread over 1: {:?}", sizes);
            }
            let exponent = mu2 + 1;
            for m in inst.matroids() {
                let brute = BruteOracle::new(m, exponent);
                assert_eq!(
                    brute.union_rank(exponent, result.remainder),
                    result.remainder.len() as u64,
                    "remainder {} escapes I^{}",
                    result.remainder,
                    exponent
                );
            }
            done += 1;
        }
    });
}

#[test]
fn criterion_6_covering_index_closed_form() {
    criterion(6, "covering index closed form", Duration::from_secs(30), || {
        let mut matroids: Vec<Matroid> = fixtures::all().into_iter().map(|(_, m)| m).collect();
        let mut rng = gen::rng(606);
        for _ in 0..50 {
            matroids.push(gen::random_loopfree_matroid(&mut rng, 8));
        }
        for (idx, m) in matroids.iter().enumerate() {
            let mut closed_form = 0u64;
            for bits in 1..1u64 << m.n() {
                let x = ElementSet::from_bits(bits);
                let rank = m.rank(x);
                closed_form = closed_form.max((x.len() as u64).div_ceil(rank));
            }
            assert_eq!(
                covering_index(m).expect("loop-free") as u64,
                closed_form,
                "matroid #{} (kind {})",
                idx,
                m.kind_tag()
            );
        }
    });
}

#[test]
fn criterion_7_appendix_algebra() {
    criterion(7, "set-function and lift algebra", Duration::from_secs(60), || {
        let mut rng = gen::rng(707);

        for (name, m) in fixtures::all() {
            let rho = matroid_set_function(&m, MatroidSetFunctionKind::Rank);

            // dual involution
            assert_eq!(rho.dual_supermodular().dual_supermodular(), rho, "{}", name);

            // B(f) = B(f^#) on 100 sampled points pinned to the base hyperplane
            let bf = PolyhedronDescription::base(rho.clone()).unwrap();
            let bdual = PolyhedronDescription::base(rho.dual_supermodular()).unwrap();
            for _ in 0..100 {
                let raw = gen::random_rational_point(&mut rng, m.n());
                let mut coords = raw.coords().to_vec();
                coords[0] += rho.ground_value() - raw.total();
                let x = RationalPoint::new(coords);
                let in_bf = bf.membership(&x).unwrap().is_member();
                let in_bdual = bdual.membership(&x).unwrap().is_member();
                assert_eq!(in_bf, in_bdual, "{}: x = {:?}", name, x);
            }
            // pin at least one genuine member of both descriptions
            let base_point = greedy_base_point(&m);
            assert!(bf.membership(&base_point).unwrap().is_member());
            assert!(bdual.membership(&base_point).unwrap().is_member());

            // Facts 1 and 2 on 100 sampled points each
            let g = matroid_set_function(&m, MatroidSetFunctionKind::SpanningDual);
            let pf = PolyhedronDescription::submodular(rho.clone());
            let pg = PolyhedronDescription::supermodular(g.clone());
            for _ in 0..100 {
                let x = gen::random_rational_point(&mut rng, m.n());
                let u = random_bounds(&mut rng, m.n());
                let tightened = rho.tightened_upper(&u);
                let lhs = pf.membership(&x).unwrap().is_member()
                    && (0..m.n()).all(|e| u[e].is_none_or(|b| x.coord(e) <= b));
                let rhs = PolyhedronDescription::submodular(tightened)
                    .membership(&x)
                    .unwrap()
                    .is_member();
                assert_eq!(lhs, rhs, "{}: Fact 1 at {:?} with u {:?}", name, x, u);

                let l = random_bounds(&mut rng, m.n());
                let loosened = g.tightened_lower(&l);
                let lhs = pg.membership(&x).unwrap().is_member()
                    && (0..m.n()).all(|e| l[e].is_none_or(|b| x.coord(e) >= b));
                let rhs = PolyhedronDescription::supermodular(loosened)
                    .membership(&x)
                    .unwrap()
                    .is_member();
                assert_eq!(lhs, rhs, "{}: Fact 2 at {:?} with l {:?}", name, x, l);
            }
        }

        // lift projection for generalized-polymatroid pairs on n ≤ 4 fixtures
        let mut pairs_tested = 0;
        for (name, m) in fixtures::all() {
            if m.n() > 4 {
                continue;
            }
            let rho = matroid_set_function(&m, MatroidSetFunctionKind::Rank);
            let candidates = [
                SetFunction::zero(m.n()),
                matroid_set_function(&m, MatroidSetFunctionKind::CospanningDual),
            ];
            for g in candidates {
                if !is_gpolymatroid_pair(&rho, &g) {
                    continue;
                }
                pairs_tested += 1;
                let q = PolyhedronDescription::submodular(rho.clone())
                    .intersect_supermodular(g.clone())
                    .unwrap();
                let t1 = rho.ground_value();
                let t2 = t1 + Rational::new(7, 3);
                let lift1 = lift_gpolymatroid(&rho, &g, t1);
                let lift2 = lift_gpolymatroid(&rho, &g, t2);
                let mut points: Vec<RationalPoint> = (0..1u64 << m.n())
                    .map(|bits| {
                        RationalPoint::characteristic(ElementSet::from_bits(bits), m.n())
                    })
                    .collect();
                for _ in 0..100 {
                    points.push(gen::random_rational_point(&mut rng, m.n()));
                }
                for x in &points {
                    let in_q = q.membership(x).unwrap().is_member();
                    let proj1 = lift_projection_contains(&lift1, x);
                    let proj2 = lift_projection_contains(&lift2, x);
                    assert_eq!(in_q, proj1, "{}: lift at t1, x = {:?}", name, x);
                    assert_eq!(proj1, proj2, "{}: projection depends on t, x = {:?}", name, x);
                }
            }
        }
        assert!(pairs_tested >= 4, "only {} generalized-polymatroid pairs tested", pairs_tested);
    });
}

#[test]
fn criterion_8_uniform_point_membership() {
    criterion(8, "uniform vector in the step-0 polyhedra", Duration::from_secs(30), || {
        // single-matroid pool: (1/k, …, 1/k) in the windowed removal polyhedron
        for (m, k) in single_matroid_pool() {
            let n = m.n() as u64;
            let d = removal_polyhedron(&m, k)
                .window(
                    Rational::from_integer((n / k as u64) as i64),
                    Rational::from_integer(n.div_ceil(k as u64) as i64),
                )
                .unwrap();
            let x = RationalPoint::uniform(m.n(), Rational::new(1, k as i64));
            match d.membership(&x).unwrap() {
                Membership::Member => {}
                Membership::Violated(v) => {
                    panic!("kind {}, n={}, k={}: uniform vector rejected: {}", m.kind_tag(), n, k, v)
                }
            }
        }
        // laminar pairs: step-0 four-polyhedra intersection
        for inst in laminar_pair_pool() {
            let polyhedra =
                FourPolyhedra::build(&inst, inst.full_set(), 0, Some(inst.auto_window()))
                    .expect("n within cap");
            assert!(
                polyhedra.contains_uniform_vector(inst.k()),
                "n={}, k={}",
                inst.n(),
                inst.k()
            );
        }
    });
}

/// A greedy base of the matroid as a 0/1 point (rank-maximal set).
fn greedy_base_point(m: &Matroid) -> RationalPoint {
    let mut base = ElementSet::empty();
    for e in 0..m.n() {
        if m.rank(base.with(e)) > m.rank(base) {
            base.insert(e);
        }
    }
    RationalPoint::characteristic(base, m.n())
}

fn random_bounds(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<Option<Rational>> {
    (0..n)
        .map(|_| {
            if rand::Rng::gen_bool(rng, 0.25) {
                None
            } else {
                let den = rand::Rng::gen_range(rng, 1..=4i64);
                let num = rand::Rng::gen_range(rng, -den..=3 * den);
                Some(Rational::new(num, den))
            }
        })
        .collect()
}
