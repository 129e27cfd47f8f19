//! Membership predicates and exact enumeration for the eight supported
//! extension semantics.
//!
//! Enumeration is a backtracking labeller over argument ids with
//! conflict-freeness and defense propagation. Subset-maximal families
//! (naive, preferred) and range-maximal families (stage, semi-stable) use
//! maximality-aware branching: the search keeps an antichain of the best
//! candidates found so far and prunes any branch whose reachable upper
//! bound is already dominated. The contract is only the emitted set of
//! extensions, which is deterministic: ascending order of the member
//! bit-set read as an integer.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::af::{ArgumentationFramework, Extension};
use crate::bitset::ArgSet;
use crate::cancel::CancelToken;

/// Tag for one of the eight extension semantics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Semantics {
    ConflictFree,
    Naive,
    Admissible,
    Complete,
    Stable,
    Preferred,
    SemiStable,
    Stage,
}

impl Semantics {
    pub const ALL: [Semantics; 8] = [
        Semantics::ConflictFree,
        Semantics::Naive,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Stable,
        Semantics::Preferred,
        Semantics::SemiStable,
        Semantics::Stage,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "cf",
            Semantics::Naive => "naive",
            Semantics::Admissible => "adm",
            Semantics::Complete => "comp",
            Semantics::Stable => "stab",
            Semantics::Preferred => "pref",
            Semantics::SemiStable => "semi",
            Semantics::Stage => "stage",
        }
    }

    /// Semantics whose membership check needs a search over other
    /// candidate sets rather than a local predicate.
    pub fn needs_global_check(self) -> bool {
        matches!(
            self,
            Semantics::Preferred | Semantics::SemiStable | Semantics::Stage
        )
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cf" => Ok(Semantics::ConflictFree),
            "naive" => Ok(Semantics::Naive),
            "adm" => Ok(Semantics::Admissible),
            "comp" => Ok(Semantics::Complete),
            "stab" => Ok(Semantics::Stable),
            "pref" => Ok(Semantics::Preferred),
            "semi" => Ok(Semantics::SemiStable),
            "stage" => Ok(Semantics::Stage),
            other => Err(format!(
                "unknown semantics `{other}` (expected one of cf, naive, adm, comp, stab, pref, semi, stage)"
            )),
        }
    }
}

/// Bounds on exact computations. Checks that would require searching an
/// unbounded candidate space refuse to run beyond these limits instead of
/// silently approximating.
#[derive(Clone, Copy, Debug)]
pub struct SizeGuard {
    /// Maximum argument count for pref/semi/stage membership checks.
    pub max_args: usize,
    /// Maximum number of extensions an enumeration may produce.
    pub max_extensions: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_args: 64,
            max_extensions: 1_000_000,
        }
    }
}

/// Guard plus cancellation token threaded through every search.
#[derive(Clone)]
pub struct SearchLimits {
    pub guard: SizeGuard,
    pub cancel: CancelToken,
    /// Run diversity pair scans on the rayon pool. Only effective with the
    /// `parallel` feature; the sequential path is the fallback either way.
    pub parallel: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            guard: SizeGuard::default(),
            cancel: CancelToken::none(),
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl SearchLimits {
    pub fn with_cancel(cancel: CancelToken) -> Self {
        SearchLimits {
            cancel,
            ..SearchLimits::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("exact check refused: {n_args} arguments exceed the size guard of {max_args}")]
    SizeGuardExceeded { n_args: usize, max_args: usize },
    #[error("extension family exceeds the size guard of {max_extensions} sets")]
    ExtensionCapExceeded { max_extensions: usize },
    #[error("search cancelled")]
    Cancelled,
}

/// True iff no attack has both endpoints inside `ext`.
pub fn is_conflict_free(af: &ArgumentationFramework, ext: &Extension) -> bool {
    set_is_conflict_free(af, ext.members())
}

fn set_is_conflict_free(af: &ArgumentationFramework, set: &ArgSet) -> bool {
    set.iter().all(|a| !af.attacked_by(a).intersects(set))
}

/// The defense function: all arguments whose every attacker is attacked by
/// some member of `ext`.
pub fn defended_set(af: &ArgumentationFramework, ext: &Extension) -> Extension {
    let counter = af.attacked_by_set(ext.members());
    let defended = ArgSet::from_iter(
        af.n_args(),
        (0..af.n_args()).filter(|&a| af.attackers_of(a).is_subset(&counter)),
    );
    Extension::from(defended)
}

fn set_is_admissible(af: &ArgumentationFramework, set: &ArgSet) -> bool {
    if !set_is_conflict_free(af, set) {
        return false;
    }
    let counter = af.attacked_by_set(set);
    set.iter().all(|a| af.attackers_of(a).is_subset(&counter))
}

fn set_is_complete(af: &ArgumentationFramework, set: &ArgSet) -> bool {
    if !set_is_conflict_free(af, set) {
        return false;
    }
    let counter = af.attacked_by_set(set);
    let defended = ArgSet::from_iter(
        af.n_args(),
        (0..af.n_args()).filter(|&a| af.attackers_of(a).is_subset(&counter)),
    );
    defended == *set
}

fn set_is_stable(af: &ArgumentationFramework, set: &ArgSet) -> bool {
    set_is_conflict_free(af, set) && af.range_of(set) == ArgSet::full(af.n_args())
}

fn set_is_naive(af: &ArgumentationFramework, set: &ArgSet) -> bool {
    if !set_is_conflict_free(af, set) {
        return false;
    }
    // Conflict-freeness is closed under subsets, so maximality reduces to
    // single additions.
    (0..af.n_args()).all(|x| {
        set.contains(x) || af.self_attackers().contains(x) || af.conflicts_of(x).intersects(set)
    })
}

/// Exact membership test for `ext` under `sem`.
///
/// For preferred, semi-stable, and stage the check searches the candidate
/// space for a dominating set, which is refused above
/// `limits.guard.max_args`.
pub fn satisfies(
    af: &ArgumentationFramework,
    ext: &Extension,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<bool, EngineError> {
    debug_assert_eq!(ext.universe(), af.n_args());
    let set = ext.members();
    if sem.needs_global_check() && af.n_args() > limits.guard.max_args {
        return Err(EngineError::SizeGuardExceeded {
            n_args: af.n_args(),
            max_args: limits.guard.max_args,
        });
    }
    match sem {
        Semantics::ConflictFree => Ok(set_is_conflict_free(af, set)),
        Semantics::Naive => Ok(set_is_naive(af, set)),
        Semantics::Admissible => Ok(set_is_admissible(af, set)),
        Semantics::Complete => Ok(set_is_complete(af, set)),
        Semantics::Stable => Ok(set_is_stable(af, set)),
        Semantics::Preferred => {
            if !set_is_admissible(af, set) {
                return Ok(false);
            }
            Ok(!exists_dominating(af, set, Base::Admissible, Criterion::Subset, limits)?)
        }
        Semantics::SemiStable => {
            if !set_is_admissible(af, set) {
                return Ok(false);
            }
            Ok(!exists_dominating(af, set, Base::Admissible, Criterion::Range, limits)?)
        }
        Semantics::Stage => {
            if !set_is_conflict_free(af, set) {
                return Ok(false);
            }
            Ok(!exists_dominating(af, set, Base::ConflictFree, Criterion::Range, limits)?)
        }
    }
}

/// Enumerates all `sem`-extensions exactly once, in ascending bit-set
/// order, feeding each to `sink`.
pub fn enumerate_extensions(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
    sink: &mut dyn FnMut(&Extension),
) -> Result<(), EngineError> {
    let ctx = Ctx::new(af, limits);
    match sem {
        Semantics::ConflictFree => stream_base(&ctx, Base::ConflictFree, &mut |s| {
            sink(&Extension::from(s.clone()));
            Ok(())
        }),
        Semantics::Admissible => stream_base(&ctx, Base::Admissible, &mut |s| {
            sink(&Extension::from(s.clone()));
            Ok(())
        }),
        Semantics::Complete => stream_base(&ctx, Base::Complete, &mut |s| {
            sink(&Extension::from(s.clone()));
            Ok(())
        }),
        Semantics::Stable => stream_base(&ctx, Base::Stable, &mut |s| {
            sink(&Extension::from(s.clone()));
            Ok(())
        }),
        Semantics::Naive => {
            for set in maximal_family(&ctx, Base::ConflictFree, Criterion::Subset)? {
                sink(&Extension::from(set));
            }
            Ok(())
        }
        Semantics::Preferred => {
            for set in maximal_family(&ctx, Base::Admissible, Criterion::Subset)? {
                sink(&Extension::from(set));
            }
            Ok(())
        }
        Semantics::SemiStable => {
            for set in maximal_family(&ctx, Base::Admissible, Criterion::Range)? {
                sink(&Extension::from(set));
            }
            Ok(())
        }
        Semantics::Stage => {
            for set in maximal_family(&ctx, Base::ConflictFree, Criterion::Range)? {
                sink(&Extension::from(set));
            }
            Ok(())
        }
    }
}

/// Collects the full extension family, honoring the extension cap.
pub fn extensions(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<Vec<Extension>, EngineError> {
    let mut out = Vec::new();
    let cap = limits.guard.max_extensions;
    let mut overflow = false;
    enumerate_extensions(af, sem, limits, &mut |ext| {
        if out.len() >= cap {
            overflow = true;
        } else {
            out.push(ext.clone());
        }
    })?;
    if overflow {
        return Err(EngineError::ExtensionCapExceeded {
            max_extensions: cap,
        });
    }
    Ok(out)
}

/// Union over all `sem`-extensions.
pub fn credulous_set(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<Extension, EngineError> {
    let mut acc = ArgSet::empty(af.n_args());
    enumerate_extensions(af, sem, limits, &mut |ext| acc.union_with(ext.members()))?;
    Ok(Extension::from(acc))
}

/// Intersection over all `sem`-extensions. The intersection over an empty
/// family is the full argument set.
pub fn skeptical_set(
    af: &ArgumentationFramework,
    sem: Semantics,
    limits: &SearchLimits,
) -> Result<Extension, EngineError> {
    let mut acc = ArgSet::full(af.n_args());
    let mut any = false;
    enumerate_extensions(af, sem, limits, &mut |ext| {
        any = true;
        acc.intersect_with(ext.members());
    })?;
    let _ = any;
    Ok(Extension::from(acc))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Base {
    ConflictFree,
    Admissible,
    Complete,
    Stable,
}

impl Base {
    fn needs_defense(self) -> bool {
        matches!(self, Base::Admissible | Base::Complete)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Criterion {
    Subset,
    Range,
}

const TICK_INTERVAL: u32 = 4096;

struct Ctx<'a> {
    af: &'a ArgumentationFramework,
    n: usize,
    conflicts: Vec<ArgSet>,
    /// `below[i]` is the id set `{0, .., i-1}`.
    below: Vec<ArgSet>,
    cancel: CancelToken,
    ticks: std::cell::Cell<u32>,
}

impl<'a> Ctx<'a> {
    fn new(af: &'a ArgumentationFramework, limits: &SearchLimits) -> Self {
        let n = af.n_args();
        let conflicts = (0..n).map(|a| af.conflicts_of(a)).collect();
        let mut below = Vec::with_capacity(n + 1);
        let mut acc = ArgSet::empty(n);
        below.push(acc.clone());
        for i in 0..n {
            acc.insert(i);
            below.push(acc.clone());
        }
        Ctx {
            af,
            n,
            conflicts,
            below,
            cancel: limits.cancel.clone(),
            ticks: std::cell::Cell::new(0),
        }
    }

    fn tick(&self) -> Result<(), EngineError> {
        let t = self.ticks.get().wrapping_add(1);
        self.ticks.set(t);
        if t % TICK_INTERVAL == 0 && self.cancel.is_cancelled() {
            return Err(EngineError::Cancelled);
        }
        Ok(())
    }
}

struct BaseState {
    in_set: ArgSet,
    attacked_by_in: ArgSet,
    attackers_of_in: ArgSet,
}

/// Backtracking labeller for the downward-closed or locally checkable
/// families. Arguments are decided from the highest id to the lowest with
/// the out-branch first, which emits leaves in ascending bit-set order.
fn stream_base(
    ctx: &Ctx,
    base: Base,
    sink: &mut dyn FnMut(&ArgSet) -> Result<(), EngineError>,
) -> Result<(), EngineError> {
    let n = ctx.n;
    let state = BaseState {
        in_set: ArgSet::empty(n),
        attacked_by_in: ArgSet::empty(n),
        attackers_of_in: ArgSet::empty(n),
    };
    rec_base(ctx, base, n, &state, sink)
}

fn rec_base(
    ctx: &Ctx,
    base: Base,
    next: usize,
    state: &BaseState,
    sink: &mut dyn FnMut(&ArgSet) -> Result<(), EngineError>,
) -> Result<(), EngineError> {
    ctx.tick()?;
    if next == 0 {
        let ok = match base {
            Base::ConflictFree => true,
            Base::Stable => {
                state.in_set.union(&state.attacked_by_in) == ArgSet::full(ctx.n)
            }
            Base::Admissible => state.attackers_of_in.is_subset(&state.attacked_by_in),
            Base::Complete => {
                state.attackers_of_in.is_subset(&state.attacked_by_in) && {
                    let defended = ArgSet::from_iter(ctx.n, (0..ctx.n).filter(|&a| {
                        ctx.af.attackers_of(a).is_subset(&state.attacked_by_in)
                    }));
                    defended == state.in_set
                }
            }
        };
        if ok {
            sink(&state.in_set)?;
        }
        return Ok(());
    }
    let x = next - 1;
    let undecided_after = &ctx.below[x];

    // Out branch. Under stable semantics an excluded argument must still be
    // attackable by the final set.
    let out_feasible = base != Base::Stable || {
        let att = ctx.af.attackers_of(x);
        att.intersects(&state.in_set) || att.intersects(undecided_after)
    };
    if out_feasible {
        rec_base(ctx, base, x, state, sink)?;
    }

    // In branch.
    if ctx.af.self_attackers().contains(x) || ctx.conflicts[x].intersects(&state.in_set) {
        return Ok(());
    }
    let mut st = BaseState {
        in_set: state.in_set.clone(),
        attacked_by_in: state.attacked_by_in.clone(),
        attackers_of_in: state.attackers_of_in.clone(),
    };
    st.in_set.insert(x);
    st.attacked_by_in.union_with(ctx.af.attacked_by(x));
    if base.needs_defense() {
        st.attackers_of_in.union_with(ctx.af.attackers_of(x));
        // Every attacker of the in-set must still be counterable.
        let mut pending = st.attackers_of_in.clone();
        pending.difference_with(&st.attacked_by_in);
        for y in pending.iter() {
            let counters = ctx.af.attackers_of(y);
            if !counters.intersects(&st.in_set) && !counters.intersects(undecided_after) {
                return Ok(());
            }
        }
    }
    rec_base(ctx, base, x, &st, sink)
}

/// Search state for the subset- and range-maximal families.
struct MaxState {
    in_set: ArgSet,
    attacked_by_in: ArgSet,
    attackers_of_in: ArgSet,
    blocked: ArgSet,
}

struct Antichain {
    crit: Criterion,
    /// `(key, member set)`; for the subset criterion the key is the set
    /// itself, for the range criterion it is the range.
    entries: Vec<(ArgSet, ArgSet)>,
    cap: usize,
}

impl Antichain {
    fn dominates_strictly(&self, key: &ArgSet) -> bool {
        self.entries.iter().any(|(k, _)| key.is_strict_subset(k))
    }

    fn dominates(&self, key: &ArgSet) -> bool {
        self.entries.iter().any(|(k, _)| key.is_subset(k))
    }

    fn insert(&mut self, key: ArgSet, set: ArgSet) -> Result<(), EngineError> {
        match self.crit {
            Criterion::Subset => {
                if self.dominates(&key) {
                    return Ok(());
                }
                self.entries.retain(|(k, _)| !k.is_subset(&key));
            }
            Criterion::Range => {
                if self.dominates_strictly(&key) {
                    return Ok(());
                }
                self.entries.retain(|(k, _)| !k.is_strict_subset(&key));
            }
        }
        self.entries.push((key, set));
        if self.entries.len() > self.cap {
            return Err(EngineError::ExtensionCapExceeded {
                max_extensions: self.cap,
            });
        }
        Ok(())
    }
}

/// Enumerates the subset-maximal (naive, preferred) or range-maximal
/// (stage, semi-stable) members of a base family with maximality-aware
/// branching: the in-branch is explored first and branches whose reachable
/// upper bound is dominated by an already found candidate are cut.
fn maximal_family(
    ctx: &Ctx,
    base: Base,
    crit: Criterion,
) -> Result<Vec<ArgSet>, EngineError> {
    debug_assert!(matches!(base, Base::ConflictFree | Base::Admissible));
    let n = ctx.n;
    let mut chain = Antichain {
        crit,
        entries: Vec::new(),
        cap: usize::MAX,
    };
    let state = MaxState {
        in_set: ArgSet::empty(n),
        attacked_by_in: ArgSet::empty(n),
        attackers_of_in: ArgSet::empty(n),
        blocked: af_blocked_base(ctx),
    };
    rec_max(ctx, base, crit, n, &state, &mut chain)?;
    let mut out: Vec<ArgSet> = chain.entries.into_iter().map(|(_, s)| s).collect();
    out.sort_unstable();
    Ok(out)
}

fn af_blocked_base(ctx: &Ctx) -> ArgSet {
    ctx.af.self_attackers().clone()
}

fn rec_max(
    ctx: &Ctx,
    base: Base,
    crit: Criterion,
    next: usize,
    state: &MaxState,
    chain: &mut Antichain,
) -> Result<(), EngineError> {
    ctx.tick()?;
    // Compatible undecided arguments and the reachable upper bound.
    let mut candidates = ctx.below[next].clone();
    candidates.difference_with(&state.blocked);
    let mut ub = state.in_set.union(&candidates);
    match crit {
        Criterion::Subset => {
            if chain.dominates(&ub) {
                return Ok(());
            }
        }
        Criterion::Range => {
            ub.union_with(&state.attacked_by_in);
            for u in candidates.iter() {
                ub.union_with(ctx.af.attacked_by(u));
            }
            if chain.dominates_strictly(&ub) {
                return Ok(());
            }
        }
    }
    if next == 0 {
        if base == Base::Admissible && !state.attackers_of_in.is_subset(&state.attacked_by_in) {
            return Ok(());
        }
        let key = match crit {
            Criterion::Subset => state.in_set.clone(),
            Criterion::Range => state.in_set.union(&state.attacked_by_in),
        };
        return chain.insert(key, state.in_set.clone());
    }
    let x = next - 1;

    // In branch first so large candidates are found early.
    if !state.blocked.contains(x) {
        let mut st = MaxState {
            in_set: state.in_set.clone(),
            attacked_by_in: state.attacked_by_in.clone(),
            attackers_of_in: state.attackers_of_in.clone(),
            blocked: state.blocked.clone(),
        };
        st.in_set.insert(x);
        st.attacked_by_in.union_with(ctx.af.attacked_by(x));
        st.blocked.union_with(&ctx.conflicts[x]);
        let mut feasible = true;
        if base == Base::Admissible {
            st.attackers_of_in.union_with(ctx.af.attackers_of(x));
            let mut pending = st.attackers_of_in.clone();
            pending.difference_with(&st.attacked_by_in);
            for y in pending.iter() {
                let counters = ctx.af.attackers_of(y);
                if !counters.intersects(&st.in_set) && !counters.intersects(&ctx.below[x]) {
                    feasible = false;
                    break;
                }
            }
        }
        if feasible {
            rec_max(ctx, base, crit, x, &st, chain)?;
        }
    }

    rec_max(ctx, base, crit, x, state, chain)
}

/// Searches for a member of the base family dominating `set` under the
/// given criterion: a strict superset (subset criterion) or a set whose
/// range strictly contains `set`'s range (range criterion).
fn exists_dominating(
    af: &ArgumentationFramework,
    set: &ArgSet,
    base: Base,
    crit: Criterion,
    limits: &SearchLimits,
) -> Result<bool, EngineError> {
    let ctx = Ctx::new(af, limits);
    let n = af.n_args();
    match crit {
        Criterion::Subset => {
            // Force `set` in and look for any admissible strict superset.
            let mut blocked = af_blocked_base(&ctx);
            for a in set.iter() {
                blocked.union_with(&ctx.conflicts[a]);
            }
            blocked.difference_with(set);
            let candidates: Vec<usize> =
                (0..n).filter(|&x| !set.contains(x) && !blocked.contains(x)).collect();
            let state = BaseState {
                in_set: set.clone(),
                attacked_by_in: af.attacked_by_set(set),
                attackers_of_in: {
                    let mut acc = ArgSet::empty(n);
                    for a in set.iter() {
                        acc.union_with(af.attackers_of(a));
                    }
                    acc
                },
            };
            rec_superset(&ctx, base, &candidates, 0, &state, false)
        }
        Criterion::Range => {
            let target = af.range_of(set);
            let state = MaxState {
                in_set: ArgSet::empty(n),
                attacked_by_in: ArgSet::empty(n),
                attackers_of_in: ArgSet::empty(n),
                blocked: af_blocked_base(&ctx),
            };
            rec_wider_range(&ctx, base, &target, n, &state)
        }
    }
}

fn rec_superset(
    ctx: &Ctx,
    base: Base,
    candidates: &[usize],
    pos: usize,
    state: &BaseState,
    grown: bool,
) -> Result<bool, EngineError> {
    ctx.tick()?;
    if grown {
        let ok = match base {
            Base::ConflictFree => true,
            _ => state.attackers_of_in.is_subset(&state.attacked_by_in),
        };
        if ok {
            return Ok(true);
        }
    }
    if pos == candidates.len() {
        return Ok(false);
    }
    let x = candidates[pos];
    if !ctx.conflicts[x].intersects(&state.in_set) {
        let mut st = BaseState {
            in_set: state.in_set.clone(),
            attacked_by_in: state.attacked_by_in.clone(),
            attackers_of_in: state.attackers_of_in.clone(),
        };
        st.in_set.insert(x);
        st.attacked_by_in.union_with(ctx.af.attacked_by(x));
        st.attackers_of_in.union_with(ctx.af.attackers_of(x));
        if rec_superset(ctx, base, candidates, pos + 1, &st, true)? {
            return Ok(true);
        }
    }
    rec_superset(ctx, base, candidates, pos + 1, state, grown)
}

fn rec_wider_range(
    ctx: &Ctx,
    base: Base,
    target: &ArgSet,
    next: usize,
    state: &MaxState,
) -> Result<bool, EngineError> {
    ctx.tick()?;
    // Check the current set before branching further.
    let range = state.in_set.union(&state.attacked_by_in);
    let admissible_ok = base == Base::ConflictFree
        || state.attackers_of_in.is_subset(&state.attacked_by_in);
    if admissible_ok && target.is_strict_subset(&range) {
        return Ok(true);
    }
    if next == 0 {
        return Ok(false);
    }
    // The reachable range must be able to strictly exceed the target.
    let mut candidates = ctx.below[next].clone();
    candidates.difference_with(&state.blocked);
    let mut ub = range.union(&candidates);
    for u in candidates.iter() {
        ub.union_with(ctx.af.attacked_by(u));
    }
    if !target.is_strict_subset(&ub) {
        return Ok(false);
    }
    let x = next - 1;
    if !state.blocked.contains(x) {
        let mut st = MaxState {
            in_set: state.in_set.clone(),
            attacked_by_in: state.attacked_by_in.clone(),
            attackers_of_in: state.attackers_of_in.clone(),
            blocked: state.blocked.clone(),
        };
        st.in_set.insert(x);
        st.attacked_by_in.union_with(ctx.af.attacked_by(x));
        st.attackers_of_in.union_with(ctx.af.attackers_of(x));
        st.blocked.union_with(&ctx.conflicts[x]);
        if rec_wider_range(ctx, base, target, x, &st)? {
            return Ok(true);
        }
    }
    rec_wider_range(ctx, base, target, x, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::AfBuilder;

    fn af_from(n: usize, attacks: &[(usize, usize)]) -> ArgumentationFramework {
        let mut b = AfBuilder::with_numbered_args(n);
        for &(x, y) in attacks {
            b.add_attack(x, y).unwrap();
        }
        b.build().unwrap()
    }

    fn exts(af: &ArgumentationFramework, sem: Semantics) -> Vec<Vec<usize>> {
        extensions(af, sem, &SearchLimits::default())
            .unwrap()
            .iter()
            .map(|e| e.iter().collect())
            .collect()
    }

    #[test]
    fn conflict_free_simple_attack() {
        let af = af_from(2, &[(0, 1)]);
        assert!(is_conflict_free(&af, &af.extension_of([0])));
        assert!(!is_conflict_free(&af, &af.extension_of([0, 1])));
    }

    #[test]
    fn defended_set_examples() {
        // Attack-free framework: everything is defended.
        let af = af_from(3, &[]);
        let d = defended_set(&af, &af.empty_extension());
        assert_eq!(d.len(), 3);
        // a -> b -> c: {a} defends a and c.
        let af = af_from(3, &[(0, 1), (1, 2)]);
        let d = defended_set(&af, &af.extension_of([0]));
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn empty_set_is_admissible() {
        let af = af_from(2, &[(0, 1)]);
        assert!(satisfies(&af, &af.empty_extension(), Semantics::Admissible, &SearchLimits::default()).unwrap());
    }

    #[test]
    fn stable_singleton() {
        let af = af_from(2, &[(0, 1)]);
        assert!(satisfies(&af, &af.extension_of([0]), Semantics::Stable, &SearchLimits::default()).unwrap());
        assert!(!satisfies(&af, &af.extension_of([1]), Semantics::Stable, &SearchLimits::default()).unwrap());
    }

    #[test]
    fn attack_free_stable_family() {
        let af = af_from(2, &[]);
        assert_eq!(exts(&af, Semantics::Stable), vec![vec![0, 1]]);
    }

    #[test]
    fn self_attacker_families() {
        let af = af_from(1, &[(0, 0)]);
        assert_eq!(exts(&af, Semantics::Stable), Vec::<Vec<usize>>::new());
        assert_eq!(exts(&af, Semantics::ConflictFree), vec![Vec::<usize>::new()]);
        assert_eq!(exts(&af, Semantics::Naive), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn mutual_attack_families() {
        let af = af_from(2, &[(0, 1), (1, 0)]);
        assert_eq!(
            exts(&af, Semantics::ConflictFree),
            vec![vec![], vec![0], vec![1]]
        );
        assert_eq!(exts(&af, Semantics::Preferred), vec![vec![0], vec![1]]);
        assert_eq!(exts(&af, Semantics::Complete), vec![vec![], vec![0], vec![1]]);
        assert_eq!(exts(&af, Semantics::Stable), vec![vec![0], vec![1]]);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let af = af_from(4, &[(0, 1), (2, 3), (3, 2)]);
        for sem in Semantics::ALL {
            let family = extensions(&af, sem, &SearchLimits::default()).unwrap();
            for w in family.windows(2) {
                assert!(w[0] < w[1], "{sem}: not strictly ascending");
            }
        }
    }

    #[test]
    fn credulous_and_skeptical() {
        let af = af_from(2, &[]);
        let limits = SearchLimits::default();
        let cred = credulous_set(&af, Semantics::Stable, &limits).unwrap();
        let skep = skeptical_set(&af, Semantics::Stable, &limits).unwrap();
        assert_eq!(cred.len(), 2);
        assert_eq!(skep.len(), 2);
        // Empty family: the skeptical set is all of A.
        let af = af_from(1, &[(0, 0)]);
        let skep = skeptical_set(&af, Semantics::Stable, &limits).unwrap();
        assert_eq!(skep.len(), 1);
    }

    #[test]
    fn size_guard_refuses_large_preferred_checks() {
        let af = af_from(70, &[]);
        let err = satisfies(&af, &af.empty_extension(), Semantics::Preferred, &SearchLimits::default());
        assert!(matches!(err, Err(EngineError::SizeGuardExceeded { .. })));
    }

    #[test]
    fn cancellation_propagates() {
        let af = af_from(24, &[]);
        let limits = SearchLimits::with_cancel(CancelToken::with_deadline(std::time::Instant::now()));
        let err = extensions(&af, Semantics::ConflictFree, &limits);
        assert_eq!(err.unwrap_err(), EngineError::Cancelled);
    }
}
