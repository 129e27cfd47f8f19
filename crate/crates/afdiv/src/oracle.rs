//! Brute-force ground truth, kept deliberately separate from the search
//! engine: every semantics definition is applied literally over the full
//! powerset, maximality by pairwise comparison, and the SAT/QBF/graph
//! deciders enumerate all assignments. Agreement between this module and
//! the engine is evidence, not tautology, so nothing here reuses the
//! engine's search code.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::af::{ArgumentationFramework, Extension};
use crate::bitset::ArgSet;
use crate::diversity::{CompareMode, DiversityAnswer, DiversityQuery};
use crate::reductions::cnf::CnfFormula;
use crate::reductions::graph::SimpleGraph;
use crate::reductions::qbf::Qbf2Formula;
use crate::semantics::Semantics;

/// Input bounds above which the oracle refuses to run.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_args: usize,
    pub max_sat_vars: usize,
    pub max_qbf_vars: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_args: 20,
            max_sat_vars: 16,
            max_qbf_vars: 10,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded: {what} has size {size}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

struct Tables {
    n: usize,
    attacked: Vec<u64>,
    attackers: Vec<u64>,
}

impl Tables {
    fn new(af: &ArgumentationFramework) -> Self {
        let n = af.n_args();
        let to_mask = |s: &ArgSet| s.iter().fold(0u64, |m, i| m | 1 << i);
        Tables {
            n,
            attacked: (0..n).map(|a| to_mask(af.attacked_by(a))).collect(),
            attackers: (0..n).map(|a| to_mask(af.attackers_of(a))).collect(),
        }
    }

    fn members(mask: u64) -> impl Iterator<Item = usize> {
        (0..64).filter(move |i| mask >> i & 1 == 1)
    }

    fn conflict_free(&self, set: u64) -> bool {
        Self::members(set).all(|a| self.attacked[a] & set == 0)
    }

    fn attacked_union(&self, set: u64) -> u64 {
        Self::members(set).fold(0, |m, a| m | self.attacked[a])
    }

    fn range(&self, set: u64) -> u64 {
        set | self.attacked_union(set)
    }

    fn admissible(&self, set: u64) -> bool {
        if !self.conflict_free(set) {
            return false;
        }
        let counter = self.attacked_union(set);
        Self::members(set).all(|a| self.attackers[a] & !counter == 0)
    }

    fn complete(&self, set: u64) -> bool {
        if !self.admissible(set) {
            return false;
        }
        let counter = self.attacked_union(set);
        let defended = (0..self.n)
            .filter(|&a| self.attackers[a] & !counter == 0)
            .fold(0u64, |m, a| m | 1 << a);
        defended == set
    }

    fn stable(&self, set: u64) -> bool {
        let full = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        self.conflict_free(set) && self.range(set) == full
    }
}

/// Filters all `2^n` subsets by the literal definition of `sem`;
/// maximality and range-maximality are decided by pairwise comparison.
pub fn brute_extensions(
    af: &ArgumentationFramework,
    sem: Semantics,
    budget: &OracleBudget,
) -> Result<Vec<Extension>, OracleError> {
    let n = af.n_args();
    if n > budget.max_args || n > 63 {
        return Err(OracleError::BudgetExceeded {
            what: "framework",
            size: n,
            limit: budget.max_args.min(63),
        });
    }
    let t = Tables::new(af);
    let all_subsets = 0..(1u64 << n);
    let base: Vec<u64> = match sem {
        Semantics::ConflictFree | Semantics::Naive | Semantics::Stage => {
            all_subsets.filter(|&s| t.conflict_free(s)).collect()
        }
        Semantics::Admissible | Semantics::Preferred | Semantics::SemiStable => {
            all_subsets.filter(|&s| t.admissible(s)).collect()
        }
        Semantics::Complete => all_subsets.filter(|&s| t.complete(s)).collect(),
        Semantics::Stable => all_subsets.filter(|&s| t.stable(s)).collect(),
    };
    let family: Vec<u64> = match sem {
        Semantics::ConflictFree
        | Semantics::Admissible
        | Semantics::Complete
        | Semantics::Stable => base,
        Semantics::Naive | Semantics::Preferred => base
            .iter()
            .filter(|&&s| !base.iter().any(|&o| s != o && s & o == s))
            .copied()
            .collect(),
        Semantics::SemiStable | Semantics::Stage => base
            .iter()
            .filter(|&&s| {
                let r = t.range(s);
                !base.iter().any(|&o| {
                    let ro = t.range(o);
                    r != ro && r & ro == r
                })
            })
            .copied()
            .collect(),
    };
    Ok(family
        .into_iter()
        .map(|mask| af.extension_of(Tables::members(mask).filter(|&i| i < n)))
        .collect())
}

/// Exhaustive satisfiability check.
pub fn sat_brute(cnf: &CnfFormula, budget: &OracleBudget) -> Result<bool, OracleError> {
    if cnf.n_vars() > budget.max_sat_vars {
        return Err(OracleError::BudgetExceeded {
            what: "CNF formula",
            size: cnf.n_vars(),
            limit: budget.max_sat_vars,
        });
    }
    Ok((0..(1u64 << cnf.n_vars())).any(|a| cnf.eval(a)))
}

/// Exhaustive truth check of `forall Y exists Z . matrix`.
pub fn qbf2_brute(qbf: &Qbf2Formula, budget: &OracleBudget) -> Result<bool, OracleError> {
    let nv = qbf.matrix().n_vars();
    if nv > budget.max_qbf_vars {
        return Err(OracleError::BudgetExceeded {
            what: "QBF formula",
            size: nv,
            limit: budget.max_qbf_vars,
        });
    }
    let z_vars: Vec<u64> = qbf.exists_vars().iter().map(|&v| (v - 1) as u64).collect();
    let y_vars: Vec<u64> = qbf.forall_vars().iter().map(|&v| (v - 1) as u64).collect();
    for ya in 0..(1u64 << y_vars.len()) {
        let mut base = 0u64;
        for (bit, &v) in y_vars.iter().enumerate() {
            if ya >> bit & 1 == 1 {
                base |= 1 << v;
            }
        }
        let mut witnessed = false;
        for za in 0..(1u64 << z_vars.len()) {
            let mut full = base;
            for (bit, &v) in z_vars.iter().enumerate() {
                if za >> bit & 1 == 1 {
                    full |= 1 << v;
                }
            }
            if qbf.matrix().eval(full) {
                witnessed = true;
                break;
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `g` has a dominating set of size at most `k`.
pub fn dominating_brute(
    g: &SimpleGraph,
    k: usize,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    dominating_check(g, k, budget, false)
}

/// True iff `g` has an independent dominating set (equivalently, a maximal
/// independent set) of size at most `k`.
pub fn independent_dominating_brute(
    g: &SimpleGraph,
    k: usize,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    dominating_check(g, k, budget, true)
}

fn dominating_check(
    g: &SimpleGraph,
    k: usize,
    budget: &OracleBudget,
    independent: bool,
) -> Result<bool, OracleError> {
    let n = g.n_vertices();
    if n > budget.max_args || n > 63 {
        return Err(OracleError::BudgetExceeded {
            what: "graph",
            size: n,
            limit: budget.max_args.min(63),
        });
    }
    let nbrs: Vec<u64> = (0..n).map(|v| g.neighbors_mask(v)).collect();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    for set in 0..(1u64 << n) {
        if (set.count_ones() as usize) > k {
            continue;
        }
        let covered = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .fold(set, |m, v| m | nbrs[v]);
        if covered != full {
            continue;
        }
        if independent
            && (0..n).any(|v| set >> v & 1 == 1 && nbrs[v] & set != 0)
        {
            continue;
        }
        return Ok(true);
    }
    Ok(false)
}

/// Answers a diversity query by an exhaustive pair scan over
/// [`brute_extensions`], honoring the same identical-pair and
/// non-emptiness policy as the engine.
pub fn brute_diversity(
    af: &ArgumentationFramework,
    query: &DiversityQuery,
    budget: &OracleBudget,
) -> Result<DiversityAnswer, OracleError> {
    let family = brute_extensions(af, query.semantics, budget)?;
    let (left, right) = candidate_sides(&family, query.covers(), query.requires_nonempty());
    let include_identical = query.covers().is_some()
        || matches!(query.mode, CompareMode::Exact | CompareMode::AtLeast);
    for &i in &left {
        for &j in &right {
            if !include_identical && i == j {
                continue;
            }
            let d = family[i].members().xor_count(family[j].members());
            let ok = match query.mode {
                CompareMode::Exact => d == query.k,
                CompareMode::AtMost => d <= query.k,
                CompareMode::AtLeast => d >= query.k,
            };
            if ok {
                return Ok(DiversityAnswer {
                    holds: true,
                    witness: Some((family[i].clone(), family[j].clone())),
                    achieved_k: Some(d),
                });
            }
        }
    }
    Ok(DiversityAnswer {
        holds: false,
        witness: None,
        achieved_k: None,
    })
}

/// Maximum pair distance under cover constraints, as in the engine.
pub fn brute_max(
    af: &ArgumentationFramework,
    sem: Semantics,
    cover_left: &Extension,
    cover_right: &Extension,
    budget: &OracleBudget,
) -> Result<Option<usize>, OracleError> {
    brute_extreme(af, sem, cover_left, cover_right, budget, true)
}

/// Minimum pair distance under cover constraints, as in the engine:
/// identical pairs are excluded when both covers are empty.
pub fn brute_min(
    af: &ArgumentationFramework,
    sem: Semantics,
    cover_left: &Extension,
    cover_right: &Extension,
    budget: &OracleBudget,
) -> Result<Option<usize>, OracleError> {
    brute_extreme(af, sem, cover_left, cover_right, budget, false)
}

fn brute_extreme(
    af: &ArgumentationFramework,
    sem: Semantics,
    cover_left: &Extension,
    cover_right: &Extension,
    budget: &OracleBudget,
    maximize: bool,
) -> Result<Option<usize>, OracleError> {
    let family = brute_extensions(af, sem, budget)?;
    let unanchored = cover_left.is_empty() && cover_right.is_empty();
    let covers_pair = (!unanchored).then(|| (cover_left.clone(), cover_right.clone()));
    let (left, right) = candidate_sides(&family, covers_pair.as_ref(), true);
    let include_identical = maximize || !unanchored;
    let mut best: Option<usize> = None;
    for &i in &left {
        for &j in &right {
            if !include_identical && i == j {
                continue;
            }
            let d = family[i].members().xor_count(family[j].members());
            best = Some(match best {
                None => d,
                Some(b) if maximize => b.max(d),
                Some(b) => b.min(d),
            });
        }
    }
    Ok(best)
}

/// Distances over distinct non-empty extension pairs.
pub fn brute_levels(
    af: &ArgumentationFramework,
    sem: Semantics,
    budget: &OracleBudget,
) -> Result<BTreeSet<usize>, OracleError> {
    let family = brute_extensions(af, sem, budget)?;
    let mut out = BTreeSet::new();
    for (i, s) in family.iter().enumerate() {
        if s.is_empty() {
            continue;
        }
        for t in family.iter().skip(i + 1) {
            if t.is_empty() {
                continue;
            }
            out.insert(s.members().xor_count(t.members()));
        }
    }
    Ok(out)
}

fn candidate_sides(
    family: &[Extension],
    covers_pair: Option<&(Extension, Extension)>,
    require_nonempty: bool,
) -> (Vec<usize>, Vec<usize>) {
    let side = |cover: Option<&Extension>| -> Vec<usize> {
        family
            .iter()
            .enumerate()
            .filter(|(_, e)| !(require_nonempty && e.is_empty()))
            .filter(|(_, e)| match cover {
                Some(c) => c.members().is_subset(e.members()),
                None => true,
            })
            .map(|(i, _)| i)
            .collect()
    };
    match covers_pair {
        Some((x, y)) => (side(Some(x)), side(Some(y))),
        None => {
            let both = side(None);
            (both.clone(), both)
        }
    }
}
