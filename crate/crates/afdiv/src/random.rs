//! Seeded random instance generation for differential testing and corpus
//! building.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::af::{AfBuilder, ArgumentationFramework};
use crate::reductions::cnf::CnfFormula;
use crate::reductions::qbf::Qbf2Formula;
use crate::reductions::graph::SimpleGraph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random directed attack graph. Each ordered pair of distinct
/// arguments attacks with probability `attack_prob`, each argument
/// self-attacks with probability `self_attack_prob`.
pub fn random_af(
    rng: &mut impl Rng,
    n_args: usize,
    attack_prob: f64,
    self_attack_prob: f64,
) -> ArgumentationFramework {
    assert!(n_args >= 1);
    let mut b = AfBuilder::with_numbered_args(n_args);
    for from in 0..n_args {
        for to in 0..n_args {
            let p = if from == to { self_attack_prob } else { attack_prob };
            if rng.gen_bool(p) {
                b.add_attack(from, to).unwrap();
            }
        }
    }
    b.build().unwrap()
}

/// A random CNF in which every variable occurs at least once (forced by
/// appending missing variables to random clauses).
pub fn random_cnf(
    rng: &mut impl Rng,
    n_vars: usize,
    n_clauses: usize,
    max_clause_len: usize,
) -> CnfFormula {
    assert!(n_vars >= 1 && n_clauses >= 1 && max_clause_len >= 1);
    let mut clauses: Vec<Vec<i32>> = (0..n_clauses)
        .map(|_| {
            let len = rng.gen_range(1..=max_clause_len);
            (0..len).map(|_| random_lit(rng, n_vars)).collect()
        })
        .collect();
    for v in 1..=n_vars as i32 {
        if !clauses.iter().any(|c| c.iter().any(|l| l.abs() == v)) {
            let ci = rng.gen_range(0..n_clauses);
            clauses[ci].push(if rng.gen_bool(0.5) { v } else { -v });
        }
    }
    CnfFormula::new(n_vars, clauses).unwrap()
}

/// A random 3-CNF; literal occurrences may repeat inside a clause, which
/// keeps tiny unsatisfiable instances expressible.
pub fn random_three_cnf(rng: &mut impl Rng, n_vars: usize, n_clauses: usize) -> CnfFormula {
    assert!(n_vars >= 1 && n_clauses >= 1);
    let clauses: Vec<Vec<i32>> = (0..n_clauses)
        .map(|_| (0..3).map(|_| random_lit(rng, n_vars)).collect())
        .collect();
    CnfFormula::new(n_vars, clauses).unwrap()
}

fn random_lit(rng: &mut impl Rng, n_vars: usize) -> i32 {
    let v = rng.gen_range(1..=n_vars as i32);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// A random 2-QBF `forall 1..=n_forall exists ... . matrix` with
/// non-empty blocks. When `existential_in_every_clause` is set, each
/// clause is forced to contain at least one existential literal, which
/// the preferred-semantics translations require.
pub fn random_qbf(
    rng: &mut impl Rng,
    n_forall: usize,
    n_exists: usize,
    n_clauses: usize,
    max_clause_len: usize,
    existential_in_every_clause: bool,
) -> Qbf2Formula {
    assert!(n_forall >= 1 && n_exists >= 1 && n_clauses >= 1);
    let n_vars = n_forall + n_exists;
    let mut clauses: Vec<Vec<i32>> = (0..n_clauses)
        .map(|_| {
            let len = rng.gen_range(1..=max_clause_len.max(1));
            let mut c: Vec<i32> = (0..len).map(|_| random_lit(rng, n_vars)).collect();
            if existential_in_every_clause
                && !c.iter().any(|l| l.unsigned_abs() as usize > n_forall)
            {
                let z = rng.gen_range(n_forall + 1..=n_vars) as i32;
                let z = if rng.gen_bool(0.5) { z } else { -z };
                let slot = rng.gen_range(0..c.len());
                c[slot] = z;
            }
            c
        })
        .collect();
    for v in 1..=n_vars as i32 {
        if !clauses.iter().any(|c| c.iter().any(|l| l.abs() == v)) {
            let ci = rng.gen_range(0..n_clauses);
            clauses[ci].push(if rng.gen_bool(0.5) { v } else { -v });
        }
    }
    let matrix = CnfFormula::new(n_vars, clauses).unwrap();
    Qbf2Formula::new(
        (1..=n_forall as u32).collect(),
        (n_forall as u32 + 1..=n_vars as u32).collect(),
        matrix,
    )
    .unwrap()
}

/// A random simple graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_af(&mut rng_from_seed(7), 8, 0.2, 0.05);
        let b = random_af(&mut rng_from_seed(7), 8, 0.2, 0.05);
        let pa: Vec<_> = a.attack_pairs().collect();
        let pb: Vec<_> = b.attack_pairs().collect();
        assert_eq!(pa, pb);
    }

    #[test]
    fn random_cnf_uses_every_variable() {
        for seed in 0..20 {
            let cnf = random_cnf(&mut rng_from_seed(seed), 4, 3, 3);
            for v in 1..=4i32 {
                assert!(cnf.clauses().iter().any(|c| c.iter().any(|l| l.abs() == v)));
            }
        }
    }

    #[test]
    fn random_qbf_respects_clause_constraint() {
        for seed in 0..20 {
            let q = random_qbf(&mut rng_from_seed(seed), 2, 2, 3, 3, true);
            for c in q.matrix().clauses() {
                assert!(c.iter().any(|l| l.unsigned_abs() > 2));
            }
        }
    }
}
