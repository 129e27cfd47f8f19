//! Symmetric-difference distance and the diversity decision and
//! optimization queries.
//!
//! All queries reduce to an exhaustive scan over ordered pairs of
//! enumerated extensions, restricted by cover sets and non-emptiness.
//! Witnesses are deterministic: the lexicographically least pair under
//! the enumeration order. With the `parallel` feature the scans run on
//! rayon; the sequential path is always available and both must agree.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::af::{ArgumentationFramework, Extension};
use crate::semantics::{extensions, EngineError, SearchLimits, Semantics};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiversityError {
    #[error("extensions belong to different frameworks")]
    FrameworkMismatch,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Comparison mode of a diversity decision query.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompareMode {
    Exact,
    AtMost,
    AtLeast,
}

impl CompareMode {
    fn test(self, d: usize, k: usize) -> bool {
        match self {
            CompareMode::Exact => d == k,
            CompareMode::AtMost => d <= k,
            CompareMode::AtLeast => d >= k,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CompareMode::Exact => "exact",
            CompareMode::AtMost => "at-most",
            CompareMode::AtLeast => "at-least",
        }
    }
}

/// A diversity decision query.
///
/// Anchor arguments are the singleton-cover special case and are
/// normalized to covers at construction. Queries without covers always
/// require both witnesses to be non-empty; for cover queries identical
/// witness pairs are allowed (distance 0 then means the covers co-occur).
#[derive(Clone, Debug)]
pub struct DiversityQuery {
    pub semantics: Semantics,
    pub mode: CompareMode,
    pub k: usize,
    covers: Option<(Extension, Extension)>,
    require_nonempty: bool,
}

impl DiversityQuery {
    pub fn new(semantics: Semantics, mode: CompareMode, k: usize) -> Self {
        DiversityQuery {
            semantics,
            mode,
            k,
            covers: None,
            require_nonempty: true,
        }
    }

    /// Anchors `(a, b)`: the left witness must contain `a`, the right `b`.
    pub fn with_anchors(mut self, af: &ArgumentationFramework, a: usize, b: usize) -> Self {
        self.covers = Some((af.extension_of([a]), af.extension_of([b])));
        self
    }

    pub fn with_covers(mut self, left: Extension, right: Extension) -> Self {
        self.covers = Some((left, right));
        self
    }

    /// Allows empty witnesses on sides without a cover constraint. Ignored
    /// (forced back on) when the query has no covers at all.
    pub fn allow_empty(mut self) -> Self {
        self.require_nonempty = false;
        self
    }

    pub fn covers(&self) -> Option<&(Extension, Extension)> {
        self.covers.as_ref()
    }

    pub fn requires_nonempty(&self) -> bool {
        self.require_nonempty || self.covers.is_none()
    }
}

/// Outcome of a diversity query. `holds` implies a witness pair is
/// present together with its achieved distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiversityAnswer {
    pub holds: bool,
    pub witness: Option<(Extension, Extension)>,
    pub achieved_k: Option<usize>,
}

impl DiversityAnswer {
    fn no() -> Self {
        DiversityAnswer {
            holds: false,
            witness: None,
            achieved_k: None,
        }
    }
}

/// Cardinality of the symmetric difference of two extensions over the
/// same framework.
pub fn distance(s: &Extension, t: &Extension) -> Result<usize, DiversityError> {
    if s.universe() != t.universe() {
        return Err(DiversityError::FrameworkMismatch);
    }
    Ok(s.members().xor_count(t.members()))
}

/// True iff `ext` covers `x`, i.e. `x ⊆ ext`.
pub fn covers(ext: &Extension, x: &Extension) -> Result<bool, DiversityError> {
    if ext.universe() != x.universe() {
        return Err(DiversityError::FrameworkMismatch);
    }
    Ok(x.members().is_subset(ext.members()))
}

fn check_global_guard(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<(), DiversityError> {
    if sem.needs_global_check() && af.n_args() > limits.guard.max_args {
        return Err(EngineError::SizeGuardExceeded {
            n_args: af.n_args(),
            max_args: limits.guard.max_args,
        }
        .into());
    }
    Ok(())
}

struct PairSpace {
    family: Vec<Extension>,
    left: Vec<usize>,
    right: Vec<usize>,
}

fn pair_space(
    af: &ArgumentationFramework,
    sem: Semantics,
    covers_pair: Option<&(Extension, Extension)>,
    require_nonempty: bool,
    limits: &SearchLimits,
) -> Result<PairSpace, DiversityError> {
    check_global_guard(af, sem, limits)?;
    if let Some((x, y)) = covers_pair {
        if x.universe() != af.n_args() || y.universe() != af.n_args() {
            return Err(DiversityError::FrameworkMismatch);
        }
    }
    let family = extensions(af, sem, limits)?;
    let side = |cover: Option<&Extension>| -> Vec<usize> {
        family
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                if require_nonempty && e.is_empty() {
                    return false;
                }
                match cover {
                    Some(c) => c.members().is_subset(e.members()),
                    None => true,
                }
            })
            .map(|(i, _)| i)
            .collect()
    };
    let (left, right) = match covers_pair {
        Some((x, y)) => (side(Some(x)), side(Some(y))),
        None => {
            let both = side(None);
            (both.clone(), both)
        }
    };
    Ok(PairSpace {
        family,
        left,
        right,
    })
}

/// Decides whether two extensions with the query's cover constraints are
/// exactly / at most / at least `k`-diverse. The witness is the
/// lexicographically least qualifying pair.
pub fn decide(
    af: &ArgumentationFramework,
    query: &DiversityQuery,
    limits: &SearchLimits,
) -> Result<DiversityAnswer, DiversityError> {
    let space = pair_space(
        af,
        query.semantics,
        query.covers(),
        query.requires_nonempty(),
        limits,
    )?;
    // Identical witness pairs: always meaningful for cover queries; for
    // unanchored queries they stay eligible only where excluding them
    // would not trivialize the mode (at-most).
    let include_identical = query.covers.is_some()
        || matches!(query.mode, CompareMode::Exact | CompareMode::AtLeast);
    let mode = query.mode;
    let k = query.k;
    let hit = scan_first(&space, include_identical, limits, move |d| mode.test(d, k))?;
    match hit {
        Some((i, j, d)) => Ok(DiversityAnswer {
            holds: true,
            witness: Some((space.family[i].clone(), space.family[j].clone())),
            achieved_k: Some(d),
        }),
        None => Ok(DiversityAnswer::no()),
    }
}

/// The maximum distance over qualifying extension pairs, with the
/// lexicographically least pair attaining it. Identical pairs are
/// eligible, so a framework with a single extension reports 0.
pub fn max_diversity(
    af: &ArgumentationFramework,
    sem: Semantics,
    cover_left: &Extension,
    cover_right: &Extension,
    limits: &SearchLimits,
) -> Result<Option<(usize, (Extension, Extension))>, DiversityError> {
    let unanchored = cover_left.is_empty() && cover_right.is_empty();
    let covers_pair = (!unanchored).then(|| (cover_left.clone(), cover_right.clone()));
    let space = pair_space(af, sem, covers_pair.as_ref(), true, limits)?;
    let best = scan_extreme(&space, true, true, limits)?;
    Ok(best.map(|(i, j, d)| (d, (space.family[i].clone(), space.family[j].clone()))))
}

/// The minimum distance over qualifying extension pairs. Without covers
/// the minimum ranges over pairs of distinct extensions and is absent
/// when fewer than two exist; with covers identical pairs are eligible.
pub fn min_diversity(
    af: &ArgumentationFramework,
    sem: Semantics,
    cover_left: &Extension,
    cover_right: &Extension,
    limits: &SearchLimits,
) -> Result<Option<(usize, (Extension, Extension))>, DiversityError> {
    let unanchored = cover_left.is_empty() && cover_right.is_empty();
    let covers_pair = (!unanchored).then(|| (cover_left.clone(), cover_right.clone()));
    let space = pair_space(af, sem, covers_pair.as_ref(), true, limits)?;
    let best = scan_extreme(&space, false, !unanchored, limits)?;
    Ok(best.map(|(i, j, d)| (d, (space.family[i].clone(), space.family[j].clone()))))
}

/// The set of distances attained by pairs of distinct non-empty
/// extensions, ascending.
pub fn diversity_levels(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<BTreeSet<usize>, DiversityError> {
    let space = pair_space(af, sem, None, true, limits)?;
    scan_levels(&space, limits)
}

fn cancelled(limits: &SearchLimits) -> DiversityError {
    let _ = limits;
    EngineError::Cancelled.into()
}

/// First qualifying pair in lexicographic `(left, right)` candidate order.
fn scan_first(
    space: &PairSpace,
    include_identical: bool,
    limits: &SearchLimits,
    pred: impl Fn(usize) -> bool + Sync,
) -> Result<Option<(usize, usize, usize)>, DiversityError> {
    let row = |&i: &usize| -> Option<(usize, usize, usize)> {
        let s = &space.family[i];
        for &j in &space.right {
            if !include_identical && i == j {
                continue;
            }
            let d = s.members().xor_count(space.family[j].members());
            if pred(d) {
                return Some((i, j, d));
            }
        }
        None
    };
    #[cfg(feature = "parallel")]
    if limits.parallel {
        use rayon::prelude::*;
        let found = space.left.par_iter().find_map_first(row);
        return check_cancel(limits, found);
    }
    for i in &space.left {
        if limits.cancel.is_cancelled() {
            return Err(cancelled(limits));
        }
        if let Some(hit) = row(i) {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// Extreme (max or min) distance with deterministic tie-breaking on the
/// least `(left, right)` candidate position.
fn scan_extreme(
    space: &PairSpace,
    maximize: bool,
    include_identical: bool,
    limits: &SearchLimits,
) -> Result<Option<(usize, usize, usize)>, DiversityError> {
    let better = |new: (usize, usize, usize), cur: Option<(usize, usize, usize)>| -> bool {
        match cur {
            None => true,
            Some((ci, cj, cd)) => {
                let (ni, nj, nd) = new;
                if nd != cd {
                    if maximize {
                        nd > cd
                    } else {
                        nd < cd
                    }
                } else {
                    (ni, nj) < (ci, cj)
                }
            }
        }
    };
    let row = |&i: &usize| -> Option<(usize, usize, usize)> {
        let s = &space.family[i];
        let mut best: Option<(usize, usize, usize)> = None;
        for &j in &space.right {
            if !include_identical && i == j {
                continue;
            }
            let d = s.members().xor_count(space.family[j].members());
            if better((i, j, d), best) {
                best = Some((i, j, d));
            }
        }
        best
    };
    #[cfg(feature = "parallel")]
    if limits.parallel {
        use rayon::prelude::*;
        let best = space
            .left
            .par_iter()
            .filter_map(row)
            .reduce_with(|a, b| if better(b, Some(a)) { b } else { a });
        return check_cancel(limits, best);
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for i in &space.left {
        if limits.cancel.is_cancelled() {
            return Err(cancelled(limits));
        }
        if let Some(hit) = row(i) {
            if better(hit, best) {
                best = Some(hit);
            }
        }
    }
    Ok(best)
}

fn scan_levels(
    space: &PairSpace,
    limits: &SearchLimits,
) -> Result<BTreeSet<usize>, DiversityError> {
    let row = |&i: &usize| -> BTreeSet<usize> {
        let s = &space.family[i];
        space
            .right
            .iter()
            .filter(|&&j| j > i)
            .map(|&j| s.members().xor_count(space.family[j].members()))
            .collect()
    };
    #[cfg(feature = "parallel")]
    if limits.parallel {
        use rayon::prelude::*;
        let levels = space
            .left
            .par_iter()
            .map(row)
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        return check_cancel(limits, levels);
    }
    let mut levels = BTreeSet::new();
    for i in &space.left {
        if limits.cancel.is_cancelled() {
            return Err(cancelled(limits));
        }
        levels.extend(row(i));
    }
    Ok(levels)
}

#[cfg(feature = "parallel")]
fn check_cancel<T>(limits: &SearchLimits, value: T) -> Result<T, DiversityError> {
    if limits.cancel.is_cancelled() {
        return Err(EngineError::Cancelled.into());
    }
    Ok(value)
}
