//! Differential tests: the search engine against the brute-force oracle
//! on seeded random frameworks.

use afdiv::diversity::{
    decide, diversity_levels, max_diversity, min_diversity, CompareMode, DiversityQuery,
};
use afdiv::oracle::{
    brute_diversity, brute_extensions, brute_levels, brute_max, brute_min, OracleBudget,
};
use afdiv::random::{random_af, rng_from_seed};
use afdiv::semantics::{
    credulous_set, extensions, satisfies, skeptical_set, SearchLimits, Semantics,
};
use rand::Rng;

#[test]
fn enumeration_matches_oracle_on_random_frameworks() {
    let budget = OracleBudget::default();
    let limits = SearchLimits::default();
    let mut rng = rng_from_seed(0xA11CE);
    for round in 0..150 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.05..0.5);
        let sp = rng.gen_range(0.0..0.3);
        let af = random_af(&mut rng, n, p, sp);
        for sem in Semantics::ALL {
            let engine = extensions(&af, sem, &limits).unwrap();
            let oracle = brute_extensions(&af, sem, &budget).unwrap();
            assert_eq!(engine, oracle, "round {round}, {sem}, n={n}");
        }
    }
}

#[test]
fn satisfies_matches_family_membership() {
    let budget = OracleBudget::default();
    let limits = SearchLimits::default();
    let mut rng = rng_from_seed(0xBEE);
    for _ in 0..60 {
        let n = rng.gen_range(1..=7);
        let af = random_af(&mut rng, n, 0.3, 0.1);
        for sem in Semantics::ALL {
            let family = brute_extensions(&af, sem, &budget).unwrap();
            for mask in 0u64..(1 << n) {
                let ext = af.extension_of((0..n).filter(|i| mask >> i & 1 == 1));
                let expected = family.contains(&ext);
                assert_eq!(
                    satisfies(&af, &ext, sem, &limits).unwrap(),
                    expected,
                    "{sem} membership of {ext:?}"
                );
            }
        }
    }
}

#[test]
fn acceptance_sets_match_oracle() {
    let budget = OracleBudget::default();
    let limits = SearchLimits::default();
    let mut rng = rng_from_seed(0xCAFE);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let af = random_af(&mut rng, n, 0.25, 0.1);
        for sem in Semantics::ALL {
            let family = brute_extensions(&af, sem, &budget).unwrap();
            let mut cred = af.empty_extension();
            let mut skep = af.extension_of(0..n);
            for e in &family {
                let mut c = cred.members().clone();
                c.union_with(e.members());
                cred = c.into();
                let mut s = skep.members().clone();
                s.intersect_with(e.members());
                skep = s.into();
            }
            assert_eq!(credulous_set(&af, sem, &limits).unwrap(), cred);
            assert_eq!(skeptical_set(&af, sem, &limits).unwrap(), skep);
        }
    }
}

#[test]
fn diversity_queries_match_oracle() {
    let budget = OracleBudget::default();
    let limits = SearchLimits::default();
    let mut rng = rng_from_seed(0xD1CE);
    for round in 0..80 {
        let n = rng.gen_range(2..=8);
        let af = random_af(&mut rng, n, 0.3, 0.1);
        let empty = af.empty_extension();
        for sem in Semantics::ALL {
            assert_eq!(
                max_diversity(&af, sem, &empty, &empty, &limits)
                    .unwrap()
                    .map(|(k, _)| k),
                brute_max(&af, sem, &empty, &empty, &budget).unwrap(),
                "round {round} {sem} max"
            );
            assert_eq!(
                min_diversity(&af, sem, &empty, &empty, &limits)
                    .unwrap()
                    .map(|(k, _)| k),
                brute_min(&af, sem, &empty, &empty, &budget).unwrap(),
                "round {round} {sem} min"
            );
            let engine_levels: Vec<usize> =
                diversity_levels(&af, sem, &limits).unwrap().into_iter().collect();
            let oracle_levels: Vec<usize> =
                brute_levels(&af, sem, &budget).unwrap().into_iter().collect();
            assert_eq!(engine_levels, oracle_levels, "round {round} {sem} levels");

            // Decision modes, both unanchored and anchored.
            for _ in 0..3 {
                let k = rng.gen_range(0..=n + 1);
                let mode = match rng.gen_range(0..3) {
                    0 => CompareMode::Exact,
                    1 => CompareMode::AtMost,
                    _ => CompareMode::AtLeast,
                };
                let mut q = DiversityQuery::new(sem, mode, k);
                if rng.gen_bool(0.5) {
                    let a = rng.gen_range(0..n);
                    let b = rng.gen_range(0..n);
                    q = q.with_anchors(&af, a, b);
                }
                let engine = decide(&af, &q, &limits).unwrap();
                let oracle = brute_diversity(&af, &q, &budget).unwrap();
                assert_eq!(engine.holds, oracle.holds, "round {round} {sem} {mode:?} k={k}");
                if engine.holds {
                    let (s, t) = engine.witness.as_ref().unwrap();
                    assert!(satisfies(&af, s, sem, &limits).unwrap());
                    assert!(satisfies(&af, t, sem, &limits).unwrap());
                    let d = s.members().xor_count(t.members());
                    assert_eq!(Some(d), engine.achieved_k);
                    assert!(mode.test(d, k));
                }
            }
        }
    }
}

#[test]
fn witnesses_satisfy_their_constraints() {
    let limits = SearchLimits::default();
    let mut rng = rng_from_seed(0xFACE);
    for _ in 0..40 {
        let n = rng.gen_range(2..=8);
        let af = random_af(&mut rng, n, 0.3, 0.05);
        for sem in [Semantics::Stable, Semantics::Preferred, Semantics::Naive] {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let left = af.extension_of([a]);
            let right = af.extension_of([b]);
            if let Some((k, (s, t))) =
                max_diversity(&af, sem, &left, &right, &limits).unwrap()
            {
                assert!(s.contains(a) && t.contains(b));
                assert_eq!(s.members().xor_count(t.members()), k);
                assert!(satisfies(&af, &s, sem, &limits).unwrap());
                assert!(satisfies(&af, &t, sem, &limits).unwrap());
            }
        }
    }
}

trait ModeTest {
    fn test(&self, d: usize, k: usize) -> bool;
}

impl ModeTest for CompareMode {
    fn test(&self, d: usize, k: usize) -> bool {
        match self {
            CompareMode::Exact => d == k,
            CompareMode::AtMost => d <= k,
            CompareMode::AtLeast => d >= k,
        }
    }
}
