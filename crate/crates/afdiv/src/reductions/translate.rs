//! Executable hardness constructions used as instance generators.
//!
//! Each generator produces a framework whose diversity behavior encodes a
//! SAT, QBF, or dominating-set question, together with the gadget argument
//! ids and the diversity threshold the construction targets. Symmetric
//! conflicts are materialized as two directed attacks, and every gadget
//! argument carries a structured name so tests can locate it after a
//! serialization round trip.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::af::{AfBuilder, ArgumentationFramework};
use crate::reductions::cnf::CnfFormula;
use crate::reductions::graph::SimpleGraph;
use crate::reductions::qbf::Qbf2Formula;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranslationError {
    #[error("the formula must have at least one clause")]
    EmptyFormula,
    #[error("clause {clause} has {len} literals; this construction needs exactly 3")]
    ClauseArityViolation { clause: usize, len: usize },
    #[error("variable {0} is declared but never occurs in the formula")]
    UnusedVariable(u32),
    #[error("the {0} block must be non-empty for this construction")]
    EmptyBlock(&'static str),
    #[error("the first formula must have more variables than the second")]
    VariableCountOrder,
    #[error("argument name `{0}` already exists; cannot add gadget arguments")]
    NameClash(String),
}

fn require_clauses(cnf: &CnfFormula) -> Result<(), TranslationError> {
    if cnf.n_clauses() == 0 {
        return Err(TranslationError::EmptyFormula);
    }
    Ok(())
}

fn require_all_vars_used(cnf: &CnfFormula) -> Result<(), TranslationError> {
    for v in 1..=cnf.n_vars() as u32 {
        let used = cnf
            .clauses()
            .iter()
            .any(|c| c.iter().any(|&l| l.unsigned_abs() == v));
        if !used {
            return Err(TranslationError::UnusedVariable(v));
        }
    }
    Ok(())
}

fn require_three_cnf(cnf: &CnfFormula) -> Result<(), TranslationError> {
    for (i, c) in cnf.clauses().iter().enumerate() {
        if c.len() != 3 {
            return Err(TranslationError::ClauseArityViolation {
                clause: i + 1,
                len: c.len(),
            });
        }
    }
    Ok(())
}

/// Literal argument ids of one translated formula, keyed by variable.
#[derive(Clone, Debug, Default)]
pub struct LiteralArgs {
    pos: BTreeMap<u32, usize>,
    neg: BTreeMap<u32, usize>,
}

impl LiteralArgs {
    pub fn pos(&self, var: u32) -> usize {
        self.pos[&var]
    }

    pub fn neg(&self, var: u32) -> usize {
        self.neg[&var]
    }

    /// Argument id of a signed literal.
    pub fn lit(&self, lit: i32) -> usize {
        if lit > 0 {
            self.pos(lit as u32)
        } else {
            self.neg(lit.unsigned_abs())
        }
    }

    pub fn all_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.pos.values().chain(self.neg.values()).copied()
    }
}

fn add_literal_pairs(
    b: &mut AfBuilder,
    prefix: &str,
    vars: impl Iterator<Item = u32>,
) -> Result<LiteralArgs, TranslationError> {
    let mut lits = LiteralArgs::default();
    for v in vars {
        let p = b
            .add_arg(format!("{prefix}x{v}"))
            .map_err(|_| TranslationError::NameClash(format!("{prefix}x{v}")))?;
        let n = b
            .add_arg(format!("{prefix}nx{v}"))
            .map_err(|_| TranslationError::NameClash(format!("{prefix}nx{v}")))?;
        b.add_mutual_attack(p, n).unwrap();
        lits.pos.insert(v, p);
        lits.neg.insert(v, n);
    }
    Ok(lits)
}

fn attack_clauses_by_literals(b: &mut AfBuilder, cnf: &CnfFormula, lits: &LiteralArgs, clause_ids: &[usize]) {
    for (ci, clause) in cnf.clauses().iter().enumerate() {
        for &l in clause {
            b.add_attack(lits.lit(l), clause_ids[ci]).unwrap();
        }
    }
}

/// The standard CNF translation for admissible semantics: the formula
/// argument is attacked by every clause, literal pairs attack each other,
/// and each literal attacks the clauses it occurs in. The formula is
/// satisfiable iff the formula argument is credulously accepted under
/// admissible, complete, or stable semantics.
#[derive(Debug)]
pub struct StdTranslation {
    pub af: ArgumentationFramework,
    pub formula: usize,
    pub clauses: Vec<usize>,
    pub literals: LiteralArgs,
}

pub fn std_translation_adm(cnf: &CnfFormula) -> Result<StdTranslation, TranslationError> {
    require_clauses(cnf)?;
    require_all_vars_used(cnf)?;
    let mut b = AfBuilder::new();
    let formula = b.add_arg("phi").unwrap();
    let clauses: Vec<usize> = (1..=cnf.n_clauses())
        .map(|i| b.add_arg(format!("cl_{i}")).unwrap())
        .collect();
    let literals = add_literal_pairs(&mut b, "", 1..=cnf.n_vars() as u32)?;
    for &c in &clauses {
        b.add_attack(c, formula).unwrap();
    }
    attack_clauses_by_literals(&mut b, cnf, &literals, &clauses);
    Ok(StdTranslation {
        af: b.build().unwrap(),
        formula,
        clauses,
        literals,
    })
}

/// The standard translation extended with a blocker argument attacked only
/// by the formula argument and attacking everything else. The formula is
/// satisfiable iff the formula argument and the blocker are contained in
/// two `(n_vars + 2)`-diverse extensions under adm, comp, or stab.
#[derive(Debug)]
pub struct DivArgTranslation {
    pub af: ArgumentationFramework,
    pub formula: usize,
    pub blocker: usize,
    pub k: usize,
}

pub fn div_arg_translation(cnf: &CnfFormula) -> Result<DivArgTranslation, TranslationError> {
    require_clauses(cnf)?;
    require_all_vars_used(cnf)?;
    let mut b = AfBuilder::new();
    let formula = b.add_arg("phi").unwrap();
    let clauses: Vec<usize> = (1..=cnf.n_clauses())
        .map(|i| b.add_arg(format!("cl_{i}")).unwrap())
        .collect();
    let literals = add_literal_pairs(&mut b, "", 1..=cnf.n_vars() as u32)?;
    for &c in &clauses {
        b.add_attack(c, formula).unwrap();
    }
    attack_clauses_by_literals(&mut b, cnf, &literals, &clauses);
    let inner = b.n_args();
    let blocker = b.add_arg("b").unwrap();
    b.add_attack(formula, blocker).unwrap();
    for x in 0..inner {
        b.add_attack(blocker, x).unwrap();
    }
    Ok(DivArgTranslation {
        af: b.build().unwrap(),
        formula,
        blocker,
        k: cnf.n_vars() + 2,
    })
}

/// The conflict-free-semantics core of the clause-triangle construction:
/// one argument per literal occurrence, a symmetric triangle per clause,
/// and symmetric attacks between occurrences of opposite parity.
#[derive(Debug)]
pub struct ConflictTranslation {
    pub af: ArgumentationFramework,
    /// `occurrences[i][j]` is the argument of literal position `j` of
    /// clause `i`.
    pub occurrences: Vec<[usize; 3]>,
}

pub fn conflict_translation(cnf: &CnfFormula) -> Result<ConflictTranslation, TranslationError> {
    require_clauses(cnf)?;
    require_three_cnf(cnf)?;
    let mut b = AfBuilder::new();
    let occurrences = add_conflict_core(&mut b, cnf, "");
    Ok(ConflictTranslation {
        af: b.build().unwrap(),
        occurrences,
    })
}

fn add_conflict_core(b: &mut AfBuilder, cnf: &CnfFormula, prefix: &str) -> Vec<[usize; 3]> {
    let occurrences: Vec<[usize; 3]> = cnf
        .clauses()
        .iter()
        .enumerate()
        .map(|(i, _)| {
            [1, 2, 3].map(|j| b.add_arg(format!("{prefix}cl_{}_lit_{j}", i + 1)).unwrap())
        })
        .collect();
    for occ in &occurrences {
        b.add_mutual_attack(occ[0], occ[1]).unwrap();
        b.add_mutual_attack(occ[1], occ[2]).unwrap();
        b.add_mutual_attack(occ[2], occ[0]).unwrap();
    }
    let flat: Vec<(usize, i32)> = cnf
        .clauses()
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().enumerate().map(move |(j, &l)| (i * 3 + j, l)))
        .map(|(k, l)| (k, l))
        .collect();
    let occ_of = |k: usize| occurrences[k / 3][k % 3];
    for (k1, l1) in &flat {
        for (k2, l2) in &flat {
            if k1 < k2 && *l1 == -*l2 {
                b.add_mutual_attack(occ_of(*k1), occ_of(*k2)).unwrap();
            }
        }
    }
    occurrences
}

/// The clause-triangle construction for conflict-free and naive semantics:
/// the conflict core plus fresh anchors `a` and `b`, where `b` attacks
/// everything else symmetrically. The formula is satisfiable iff `a` and
/// `b` are `(m + 2)`-diverse.
#[derive(Debug)]
pub struct TriangleTranslation {
    pub af: ArgumentationFramework,
    pub anchor_a: usize,
    pub anchor_b: usize,
    pub occurrences: Vec<[usize; 3]>,
    /// The target diversity `m + 2`.
    pub k: usize,
}

pub fn triangle_translation(cnf: &CnfFormula) -> Result<TriangleTranslation, TranslationError> {
    require_clauses(cnf)?;
    require_three_cnf(cnf)?;
    let mut b = AfBuilder::new();
    let occurrences = add_conflict_core(&mut b, cnf, "");
    let anchor_a = b.add_arg("a").unwrap();
    let anchor_b = b.add_arg("b").unwrap();
    b.add_mutual_attack(anchor_a, anchor_b).unwrap();
    for x in 0..b.n_args() {
        if x != anchor_b {
            b.add_mutual_attack(anchor_b, x).unwrap();
        }
    }
    Ok(TriangleTranslation {
        af: b.build().unwrap(),
        anchor_a,
        anchor_b,
        occurrences,
        k: cnf.n_clauses() + 2,
    })
}

/// Shadow duplication: every argument `s` gains a shadow `s_*` in
/// symmetric conflict with `s`, and every attack `(s, t)` spawns
/// `(s, t_*)`, `(s_*, t)`, and `(s_*, t_*)`. The star map is an
/// automorphism of the result.
#[derive(Debug)]
pub struct ShadowDuplication {
    pub af: ArgumentationFramework,
    pub original_n: usize,
}

impl ShadowDuplication {
    pub fn shadow_of(&self, id: usize) -> usize {
        if id < self.original_n {
            id + self.original_n
        } else {
            id - self.original_n
        }
    }
}

pub fn shadow_duplicate(
    af: &ArgumentationFramework,
) -> Result<ShadowDuplication, TranslationError> {
    let n = af.n_args();
    let mut b = AfBuilder::new();
    for id in 0..n {
        b.add_arg(af.name(id))
            .map_err(|_| TranslationError::NameClash(af.name(id).to_string()))?;
    }
    for id in 0..n {
        let name = format!("shadow_{}", af.name(id));
        b.add_arg(&name)
            .map_err(|_| TranslationError::NameClash(name))?;
    }
    for id in 0..n {
        b.add_mutual_attack(id, n + id).unwrap();
    }
    for (s, t) in af.attack_pairs() {
        b.add_attack(s, t).unwrap();
        b.add_attack(s, n + t).unwrap();
        b.add_attack(n + s, t).unwrap();
        b.add_attack(n + s, n + t).unwrap();
    }
    Ok(ShadowDuplication {
        af: b.build().unwrap(),
        original_n: n,
    })
}

/// The dominating-set gadget: the graph's edges become symmetric attacks
/// and the fresh anchor `b` symmetrically attacks `a` and every vertex.
/// The graph has an independent dominating set of size at most `k` iff
/// `a` and `b` are at-most-`(k + 2)`-diverse under naive semantics.
#[derive(Debug)]
pub struct DominatingGadget {
    pub af: ArgumentationFramework,
    pub anchor_a: usize,
    pub anchor_b: usize,
    pub vertices: Vec<usize>,
    /// The target bound `k + 2`.
    pub k: usize,
}

pub fn dominating_set_gadget(g: &SimpleGraph, k: usize) -> DominatingGadget {
    let mut b = AfBuilder::new();
    let vertices: Vec<usize> = (1..=g.n_vertices())
        .map(|i| b.add_arg(format!("v{i}")).unwrap())
        .collect();
    for (u, v) in g.edges() {
        b.add_mutual_attack(vertices[u], vertices[v]).unwrap();
    }
    let anchor_a = b.add_arg("a").unwrap();
    let anchor_b = b.add_arg("b").unwrap();
    b.add_mutual_attack(anchor_a, anchor_b).unwrap();
    for &v in &vertices {
        b.add_mutual_attack(anchor_b, v).unwrap();
    }
    DominatingGadget {
        af: b.build().unwrap(),
        anchor_a,
        anchor_b,
        vertices,
        k: k + 2,
    }
}

/// Gadget argument ids of one QBF side translated for semi-stable and
/// stage semantics.
#[derive(Debug)]
pub struct SemiSide {
    pub formula: usize,
    pub neg_formula: usize,
    pub blocker: usize,
    pub clauses: Vec<usize>,
    pub literals: LiteralArgs,
    pub starred: LiteralArgs,
}

fn add_semi_side(
    b: &mut AfBuilder,
    prefix: &str,
    qbf: &Qbf2Formula,
    self_attacking_clauses: bool,
) -> Result<SemiSide, TranslationError> {
    let cnf = qbf.matrix();
    require_clauses(cnf)?;
    require_all_vars_used(cnf)?;
    let formula = b.add_arg(format!("{prefix}phi")).unwrap();
    let neg_formula = b.add_arg(format!("{prefix}nphi")).unwrap();
    let blocker = b.add_arg(format!("{prefix}b")).unwrap();
    let clauses: Vec<usize> = (1..=cnf.n_clauses())
        .map(|i| b.add_arg(format!("{prefix}cl_{i}")).unwrap())
        .collect();
    let literals = add_literal_pairs(b, prefix, qbf.all_vars().into_iter())?;
    let mut starred = LiteralArgs::default();
    for &y in qbf.forall_vars() {
        let ps = b.add_arg(format!("{prefix}ys{y}")).unwrap();
        let ns = b.add_arg(format!("{prefix}nys{y}")).unwrap();
        b.add_attack(literals.pos(y), ps).unwrap();
        b.add_attack(literals.neg(y), ns).unwrap();
        b.add_attack(ps, ps).unwrap();
        b.add_attack(ns, ns).unwrap();
        starred.pos.insert(y, ps);
        starred.neg.insert(y, ns);
    }
    for &c in &clauses {
        b.add_attack(c, formula).unwrap();
        if self_attacking_clauses {
            b.add_attack(c, c).unwrap();
        }
    }
    attack_clauses_by_literals(b, cnf, &literals, &clauses);
    b.add_mutual_attack(formula, neg_formula).unwrap();
    b.add_attack(formula, blocker).unwrap();
    b.add_attack(blocker, blocker).unwrap();
    Ok(SemiSide {
        formula,
        neg_formula,
        blocker,
        clauses,
        literals,
        starred,
    })
}

/// The QBF translation for semi-stable and stage semantics, optionally
/// extended with mutually attacking duplicates of the negated-formula
/// argument. With one copy, the formula is false iff the negated-formula
/// argument and its copy are 2-diverse; with `2·|vars| + 1` copies, the
/// formula is false iff two `(copies + 1)`-diverse extensions exist.
#[derive(Debug)]
pub struct QbfSemiTranslation {
    pub af: ArgumentationFramework,
    pub side: SemiSide,
    pub copies: Vec<usize>,
}

pub fn qbf_semi_translation(
    qbf: &Qbf2Formula,
    copies: usize,
) -> Result<QbfSemiTranslation, TranslationError> {
    build_semi_translation(qbf, copies, false)
}

/// The same translation with self-attacking clause arguments, used where
/// extensions must be kept free of clause arguments. The formula is false
/// iff the result admits a semi-stable (stage) extension containing the
/// negated-formula argument.
pub fn self_attacking_translation(
    qbf: &Qbf2Formula,
) -> Result<QbfSemiTranslation, TranslationError> {
    build_semi_translation(qbf, 0, true)
}

fn build_semi_translation(
    qbf: &Qbf2Formula,
    copies: usize,
    self_attacking_clauses: bool,
) -> Result<QbfSemiTranslation, TranslationError> {
    let mut b = AfBuilder::new();
    let side = add_semi_side(&mut b, "", qbf, self_attacking_clauses)?;
    let copies: Vec<usize> = (1..=copies)
        .map(|i| {
            let id = b.add_arg(format!("copy_nphi_{i}")).unwrap();
            b.add_mutual_attack(side.formula, id).unwrap();
            b.add_mutual_attack(side.neg_formula, id).unwrap();
            id
        })
        .collect();
    Ok(QbfSemiTranslation {
        af: b.build().unwrap(),
        side,
        copies,
    })
}

/// The QBF translation for preferred semantics with a blocker gadget.
///
/// Without parity padding the construction carries a co-blocker and
/// targets anchored queries: the formula is false iff blocker and
/// co-blocker are `(|Y| + 2)`-diverse. With parity padding the co-blocker
/// is dropped, pad arguments even out odd quantifier blocks, and the
/// formula is false iff two `(|Y_padded| + 1)`-diverse preferred
/// extensions exist.
#[derive(Debug)]
pub struct PrefTranslation {
    pub af: ArgumentationFramework,
    pub formula: usize,
    pub neg_formula: usize,
    pub blocker: usize,
    pub co_blocker: Option<usize>,
    pub y_pad: Option<usize>,
    pub z_pad: Option<usize>,
    pub literals: LiteralArgs,
    pub k: usize,
}

pub fn pref_translation(
    qbf: &Qbf2Formula,
    parity_pad: bool,
) -> Result<PrefTranslation, TranslationError> {
    let cnf = qbf.matrix();
    require_clauses(cnf)?;
    require_all_vars_used(cnf)?;
    if qbf.forall_vars().is_empty() {
        return Err(TranslationError::EmptyBlock("universal"));
    }
    if qbf.exists_vars().is_empty() {
        return Err(TranslationError::EmptyBlock("existential"));
    }
    let mut b = AfBuilder::new();
    let formula = b.add_arg("phi").unwrap();
    let neg_formula = b.add_arg("nphi").unwrap();
    let clauses: Vec<usize> = (1..=cnf.n_clauses())
        .map(|i| b.add_arg(format!("cl_{i}")).unwrap())
        .collect();
    let literals = add_literal_pairs(&mut b, "", qbf.all_vars().into_iter())?;
    for &c in &clauses {
        b.add_attack(c, formula).unwrap();
    }
    attack_clauses_by_literals(&mut b, cnf, &literals, &clauses);
    b.add_attack(formula, neg_formula).unwrap();
    b.add_attack(neg_formula, neg_formula).unwrap();
    for &z in qbf.exists_vars() {
        b.add_attack(neg_formula, literals.pos(z)).unwrap();
        b.add_attack(neg_formula, literals.neg(z)).unwrap();
    }
    let inner = b.n_args();
    let blocker = b.add_arg("b").unwrap();
    b.add_attack(formula, blocker).unwrap();
    for x in 0..inner {
        b.add_attack(blocker, x).unwrap();
    }
    for &y in qbf.forall_vars() {
        b.add_attack(literals.pos(y), blocker).unwrap();
        b.add_attack(literals.neg(y), blocker).unwrap();
    }
    let mut co_blocker = None;
    let mut y_pad = None;
    let mut z_pad = None;
    let k;
    if parity_pad {
        if qbf.forall_vars().len() % 2 == 1 {
            let pad = b.add_arg("y_pad").unwrap();
            b.add_attack(blocker, pad).unwrap();
            y_pad = Some(pad);
        }
        if qbf.exists_vars().len() % 2 == 1 {
            let pad = b.add_arg("z_pad").unwrap();
            b.add_attack(blocker, pad).unwrap();
            // The pad mirrors an existential literal, so extensions built
            // from universal assignments alone cannot absorb it.
            b.add_attack(neg_formula, pad).unwrap();
            z_pad = Some(pad);
        }
        let y_padded = qbf.forall_vars().len() + usize::from(y_pad.is_some());
        k = y_padded + 1;
    } else {
        let cb = b.add_arg("nb").unwrap();
        b.add_mutual_attack(blocker, cb).unwrap();
        co_blocker = Some(cb);
        k = qbf.forall_vars().len() + 2;
    }
    Ok(PrefTranslation {
        af: b.build().unwrap(),
        formula,
        neg_formula,
        blocker,
        co_blocker,
        y_pad,
        z_pad,
        literals,
        k,
    })
}

/// SAT-UNSAT gadget over the conflict translation for cf and naive
/// semantics. The first formula's translation is copied once per clause
/// of the second formula and padded with free arguments; every argument
/// of one group symmetrically conflicts with every argument of the other
/// groups. With anchors, two signal arguments are added.
#[derive(Debug)]
pub struct CfNaiveGadget {
    pub af: ArgumentationFramework,
    pub k: usize,
    pub anchors: Option<(usize, usize)>,
    pub phi_group: Vec<usize>,
    pub psi_group: Vec<usize>,
    pub b_group: Vec<usize>,
}

pub fn satunsat_cf_naive_ext(
    phi: &CnfFormula,
    psi: &CnfFormula,
) -> Result<CfNaiveGadget, TranslationError> {
    build_cf_naive(phi, psi, false)
}

pub fn satunsat_cf_naive_arg(
    phi: &CnfFormula,
    psi: &CnfFormula,
) -> Result<CfNaiveGadget, TranslationError> {
    build_cf_naive(phi, psi, true)
}

fn build_cf_naive(
    phi: &CnfFormula,
    psi: &CnfFormula,
    with_anchors: bool,
) -> Result<CfNaiveGadget, TranslationError> {
    require_clauses(phi)?;
    require_clauses(psi)?;
    require_three_cnf(phi)?;
    require_three_cnf(psi)?;
    let m = phi.n_clauses();
    let n = psi.n_clauses();
    let mut b = AfBuilder::new();
    let mut phi_group: Vec<usize> = Vec::new();
    for c in 1..=n {
        let start = b.n_args();
        add_conflict_core(&mut b, phi, &format!("p{c}_"));
        phi_group.extend(start..b.n_args());
    }
    for j in 1..=m * n {
        phi_group.push(b.add_arg(format!("a_{j}")).unwrap());
    }
    let mut anchors = None;
    if with_anchors {
        let a1 = b.add_arg("sig_a1").unwrap();
        phi_group.push(a1);
        anchors = Some((a1, usize::MAX));
    }
    let mut psi_group: Vec<usize> = Vec::new();
    for c in 1..=2usize {
        let start = b.n_args();
        add_conflict_core(&mut b, psi, &format!("q{c}_"));
        psi_group.extend(start..b.n_args());
    }
    let b_group: Vec<usize> = (1..=2 * n - 1)
        .map(|i| b.add_arg(format!("b_{i}")).unwrap())
        .collect();
    let mut others: Vec<usize> = Vec::new();
    others.extend(&psi_group);
    others.extend(&b_group);
    if with_anchors {
        let a2 = b.add_arg("sig_a2").unwrap();
        others.push(a2);
        anchors = anchors.map(|(a1, _)| (a1, a2));
    }
    for &s in &phi_group {
        for &t in &others {
            b.add_mutual_attack(s, t).unwrap();
        }
    }
    for &s in &psi_group {
        for &t in &b_group {
            b.add_mutual_attack(s, t).unwrap();
        }
    }
    let k = 2 * (m * n) + 2 * n - 1 + if with_anchors { 2 } else { 0 };
    Ok(CfNaiveGadget {
        af: b.build().unwrap(),
        k,
        anchors,
        phi_group,
        psi_group,
        b_group,
    })
}

/// SAT-UNSAT gadget over the standard translation for adm, comp, and stab
/// semantics: a disjoint union of both translations, a large blocker set
/// `B` replacing the single blocker on the first formula's side, and a
/// single blocker on the second formula's side. The cycle variant guards
/// `B` with a chain of auxiliary arguments so only the full `B` is
/// admissible.
#[derive(Debug)]
pub struct AdmGadget {
    pub af: ArgumentationFramework,
    /// Threshold under stable semantics; see [`AdmGadget::threshold`].
    pub k: usize,
    pub formula_phi: usize,
    pub formula_psi: usize,
    pub b_psi: usize,
    pub b_set: Vec<usize>,
    pub c_set: Vec<usize>,
}

impl AdmGadget {
    /// The maximal diversity reached on positive instances. Under
    /// admissible and complete semantics witnesses may drop the shared
    /// psi-side blocker, which gains one over the stable threshold.
    pub fn threshold(&self, sem: crate::semantics::Semantics) -> usize {
        use crate::semantics::Semantics;
        match sem {
            Semantics::Stable => self.k,
            _ => self.k + 1,
        }
    }
}

pub fn satunsat_adm_arg(
    phi: &CnfFormula,
    psi: &CnfFormula,
) -> Result<AdmGadget, TranslationError> {
    build_adm_gadget(phi, psi, false)
}

pub fn satunsat_adm_ext_cycle(
    phi: &CnfFormula,
    psi: &CnfFormula,
) -> Result<AdmGadget, TranslationError> {
    build_adm_gadget(phi, psi, true)
}

fn build_adm_gadget(
    phi: &CnfFormula,
    psi: &CnfFormula,
    with_cycle: bool,
) -> Result<AdmGadget, TranslationError> {
    require_clauses(phi)?;
    require_clauses(psi)?;
    require_all_vars_used(phi)?;
    require_all_vars_used(psi)?;
    let k1 = phi.n_vars();
    let k2 = psi.n_vars();
    if k1 <= k2 {
        return Err(TranslationError::VariableCountOrder);
    }
    let mut b = AfBuilder::new();
    // Phi side: standard translation.
    let formula_phi = b.add_arg("phi").unwrap();
    let phi_clauses: Vec<usize> = (1..=phi.n_clauses())
        .map(|i| b.add_arg(format!("cl_{i}")).unwrap())
        .collect();
    let phi_lits = add_literal_pairs(&mut b, "", 1..=k1 as u32)?;
    for &c in &phi_clauses {
        b.add_attack(c, formula_phi).unwrap();
    }
    attack_clauses_by_literals(&mut b, phi, &phi_lits, &phi_clauses);
    let phi_args: Vec<usize> = (0..b.n_args()).collect();
    // Psi side: standard translation with distinct names.
    let psi_start = b.n_args();
    let formula_psi = b.add_arg("psi").unwrap();
    let psi_clauses: Vec<usize> = (1..=psi.n_clauses())
        .map(|j| b.add_arg(format!("dl_{j}")).unwrap())
        .collect();
    let psi_lits = add_literal_pairs(&mut b, "y", 1..=k2 as u32)?;
    for &c in &psi_clauses {
        b.add_attack(c, formula_psi).unwrap();
    }
    attack_clauses_by_literals(&mut b, psi, &psi_lits, &psi_clauses);
    let psi_args: Vec<usize> = (psi_start..b.n_args()).collect();
    // Blocker set B on the phi side, single blocker on the psi side.
    let n_phi_args = phi_args.len();
    let n_psi_args = psi_args.len();
    let m_aux = 2 * n_phi_args.max(n_psi_args);
    let b_set: Vec<usize> = (1..=m_aux)
        .map(|i| b.add_arg(format!("b_{i}")).unwrap())
        .collect();
    for &bb in &b_set {
        b.add_attack(formula_phi, bb).unwrap();
        for &s in &phi_args {
            b.add_attack(bb, s).unwrap();
        }
    }
    let b_psi = b.add_arg("b_psi").unwrap();
    b.add_attack(formula_psi, b_psi).unwrap();
    for &t in &psi_args {
        b.add_attack(b_psi, t).unwrap();
    }
    let mut c_set = Vec::new();
    if with_cycle {
        c_set = (1..=m_aux)
            .map(|i| b.add_arg(format!("c_{i}")).unwrap())
            .collect();
        for i in 0..m_aux {
            b.add_attack(b_set[i], c_set[i]).unwrap();
            b.add_attack(c_set[i], b_set[(i + 1) % m_aux]).unwrap();
        }
        b.add_attack(c_set[0], c_set[0]).unwrap();
        for &c in &c_set {
            b.add_attack(formula_phi, c).unwrap();
        }
    }
    Ok(AdmGadget {
        af: b.build().unwrap(),
        k: k1 + m_aux + 1,
        formula_phi,
        formula_psi,
        b_psi,
        b_set,
        c_set,
    })
}

/// SAT-UNSAT gadget for semi-stable and stage semantics over pairs of
/// 2-QBFs: the disjoint union of both self-attacking-clause translations,
/// each extended with a dummy-argument set in symmetric conflict with its
/// formula arguments and a pair of mutually attacking signal arguments.
#[derive(Debug)]
pub struct SemiPairGadget {
    pub af: ArgumentationFramework,
    pub k: usize,
    /// Signal pair on the second (to-be-false) formula's side.
    pub sig_a: usize,
    pub sig_na: usize,
    /// Signal pair on the first (to-be-true) formula's side.
    pub sig_b: usize,
    pub sig_nb: usize,
    pub d1: Vec<usize>,
    pub d2: Vec<usize>,
}

pub fn satunsat_semi_pair(
    first: &Qbf2Formula,
    second: &Qbf2Formula,
) -> Result<SemiPairGadget, TranslationError> {
    for (qbf, name) in [(first, "first"), (second, "second")] {
        let _ = name;
        if qbf.forall_vars().is_empty() {
            return Err(TranslationError::EmptyBlock("universal"));
        }
        if qbf.exists_vars().is_empty() {
            return Err(TranslationError::EmptyBlock("existential"));
        }
    }
    let k1 = second.all_vars().len() + 1;
    let k2 = first.all_vars().len() + 1;
    let mut b = AfBuilder::new();
    let side_phi = add_semi_side(&mut b, "s2_", second, true)?;
    let side_psi = add_semi_side(&mut b, "s1_", first, true)?;
    let d1: Vec<usize> = (1..=k1 * k2)
        .map(|i| b.add_arg(format!("d_{i}")).unwrap())
        .collect();
    for &d in &d1 {
        b.add_mutual_attack(side_phi.formula, d).unwrap();
        b.add_mutual_attack(side_phi.neg_formula, d).unwrap();
    }
    let d2: Vec<usize> = (1..=3 * k2)
        .map(|j| b.add_arg(format!("c_{j}")).unwrap())
        .collect();
    for &c in &d2 {
        b.add_mutual_attack(side_psi.formula, c).unwrap();
        b.add_mutual_attack(side_psi.neg_formula, c).unwrap();
    }
    let sig_a = b.add_arg("a_phi").unwrap();
    let sig_na = b.add_arg("na_phi").unwrap();
    b.add_mutual_attack(sig_a, sig_na).unwrap();
    for &c in &side_phi.clauses {
        b.add_attack(sig_na, c).unwrap();
    }
    let sig_b = b.add_arg("b_psi").unwrap();
    let sig_nb = b.add_arg("nb_psi").unwrap();
    b.add_mutual_attack(sig_b, sig_nb).unwrap();
    for &c in &side_psi.clauses {
        b.add_attack(sig_nb, c).unwrap();
    }
    Ok(SemiPairGadget {
        af: b.build().unwrap(),
        k: k1 * k2 + 2 * (k1 + k2) + 1,
        sig_a,
        sig_na,
        sig_b,
        sig_nb,
        d1,
        d2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn std_translation_single_positive_clause() {
        // phi = (x): four arguments and the four displayed attacks.
        let t = std_translation_adm(&cnf(1, &[&[1]])).unwrap();
        assert_eq!(t.af.n_args(), 4);
        assert_eq!(t.af.attack_count(), 4);
        assert!(t.af.attacks(t.clauses[0], t.formula));
        assert!(t.af.attacks(t.literals.pos(1), t.literals.neg(1)));
        assert!(t.af.attacks(t.literals.neg(1), t.literals.pos(1)));
        assert!(t.af.attacks(t.literals.pos(1), t.clauses[0]));
    }

    #[test]
    fn triangle_counts() {
        // One clause over three distinct variables: no opposite-parity
        // pairs, so 3 triangle conflicts and 4 blocker conflicts.
        let t = triangle_translation(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(t.af.n_args(), 5);
        assert_eq!(t.af.attack_count(), 2 * (3 + 4));
        assert_eq!(t.k, 3);
        // Two clauses with one complementary pair adds one parity conflict
        // per opposite-parity occurrence pair.
        let t = triangle_translation(&cnf(3, &[&[1, 2, 3], &[-1, 2, 3]])).unwrap();
        assert_eq!(t.af.n_args(), 8);
        // 6 triangle pairs, 1 parity pair, b against 7 others.
        assert_eq!(t.af.attack_count(), 2 * (6 + 1 + 7));
    }

    #[test]
    fn triangle_rejects_wrong_arity() {
        assert!(matches!(
            triangle_translation(&cnf(2, &[&[1, 2]])),
            Err(TranslationError::ClauseArityViolation { .. })
        ));
    }

    #[test]
    fn shadow_doubles_arguments() {
        let t = triangle_translation(&cnf(3, &[&[1, 2, 3]])).unwrap();
        let s = shadow_duplicate(&t.af).unwrap();
        assert_eq!(s.af.n_args(), 2 * t.af.n_args());
        assert_eq!(s.shadow_of(0), t.af.n_args());
        assert_eq!(s.shadow_of(t.af.n_args()), 0);
        assert_eq!(s.af.name(s.shadow_of(t.anchor_a)), "shadow_a");
        // Each original symmetric pair yields four conflicts, plus one
        // conflict per argument with its shadow.
        let orig_pairs = t.af.attack_count() / 2;
        assert_eq!(s.af.attack_count(), 2 * (4 * orig_pairs + t.af.n_args()));
    }

    #[test]
    fn qbf_semi_counts() {
        // forall y exists z . (y or z): phi, nphi, b, 1 clause, 4
        // literals, 2 starred arguments.
        let m = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let q = Qbf2Formula::new(vec![1], vec![2], m).unwrap();
        let t = qbf_semi_translation(&q, 1).unwrap();
        assert_eq!(t.af.n_args(), 3 + 1 + 4 + 2 + 1);
        assert!(t.af.self_attackers().contains(t.side.blocker));
        assert!(t.af.self_attackers().contains(t.side.starred.pos(1)));
        assert!(!t.af.self_attackers().contains(t.side.clauses[0]));
        // The copy is in symmetric conflict with both formula arguments.
        let copy = t.copies[0];
        assert!(t.af.attacks(copy, t.side.formula) && t.af.attacks(t.side.formula, copy));
        assert!(t.af.attacks(copy, t.side.neg_formula) && t.af.attacks(t.side.neg_formula, copy));

        let s = self_attacking_translation(&q).unwrap();
        assert!(s.af.self_attackers().contains(s.side.clauses[0]));
        assert!(s.copies.is_empty());
    }

    #[test]
    fn pref_translation_shapes() {
        let m = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let q = Qbf2Formula::new(vec![1], vec![2], m).unwrap();
        let arg = pref_translation(&q, false).unwrap();
        assert!(arg.co_blocker.is_some());
        assert_eq!(arg.k, 1 + 2);
        assert!(arg.y_pad.is_none() && arg.z_pad.is_none());
        // nphi self-attacks and attacks existential literals only.
        assert!(arg.af.self_attackers().contains(arg.neg_formula));
        assert!(arg.af.attacks(arg.neg_formula, arg.literals.pos(2)));
        assert!(!arg.af.attacks(arg.neg_formula, arg.literals.pos(1)));

        // Both blocks odd: two pads, k = (|Y| + 1) + 1.
        let ext = pref_translation(&q, true).unwrap();
        assert!(ext.co_blocker.is_none());
        assert!(ext.y_pad.is_some() && ext.z_pad.is_some());
        assert_eq!(ext.k, 3);

        // Even universal block: no y pad.
        let m = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        let q = Qbf2Formula::new(vec![1, 2], vec![3], m).unwrap();
        let ext = pref_translation(&q, true).unwrap();
        assert!(ext.y_pad.is_none() && ext.z_pad.is_some());
        assert_eq!(ext.k, 3);
    }

    #[test]
    fn cf_naive_gadget_counts() {
        let phi = cnf(3, &[&[1, 2, 3]]); // m = 1
        let psi = cnf(1, &[&[1, 1, 1], &[-1, -1, -1]]); // n = 2
        let g = satunsat_cf_naive_ext(&phi, &psi).unwrap();
        let (m, n) = (1, 2);
        assert_eq!(g.phi_group.len(), 3 * m * n + m * n);
        assert_eq!(g.psi_group.len(), 2 * 3 * n);
        assert_eq!(g.b_group.len(), 2 * n - 1);
        assert_eq!(g.k, 2 * m * n + 2 * n - 1);
        assert!(g.anchors.is_none());

        let g = satunsat_cf_naive_arg(&phi, &psi).unwrap();
        assert_eq!(g.k, 2 * m * n + 2 * n + 1);
        let (a1, a2) = g.anchors.unwrap();
        // a1 conflicts with the other groups but not with its own.
        assert!(g.af.attacks(a1, g.b_group[0]));
        assert!(g.af.attacks(a1, a2));
        assert!(!g.af.attacks(a1, g.phi_group[0]));
        // a2 conflicts with the phi group only.
        assert!(g.af.attacks(a2, g.phi_group[0]));
        assert!(!g.af.attacks(a2, g.b_group[0]));
        assert!(!g.af.attacks(a2, g.psi_group[0]));
    }

    #[test]
    fn adm_gadget_counts() {
        let phi = cnf(2, &[&[1, 2]]);
        let psi = cnf(1, &[&[1], &[-1]]);
        let g = satunsat_adm_arg(&phi, &psi).unwrap();
        // |A_phi| = 1 + 1 + 4 = 6, |A_psi| = 1 + 2 + 2 = 5, M = 12.
        assert_eq!(g.b_set.len(), 12);
        assert_eq!(g.k, 2 + 12 + 1);
        assert!(g.c_set.is_empty());
        let g = satunsat_adm_ext_cycle(&phi, &psi).unwrap();
        assert_eq!(g.c_set.len(), 12);
        assert!(g.af.self_attackers().contains(g.c_set[0]));
        // The cycle: b_i attacks c_i, c_i attacks the next b.
        assert!(g.af.attacks(g.b_set[3], g.c_set[3]));
        assert!(g.af.attacks(g.c_set[3], g.b_set[4]));
        assert!(g.af.attacks(g.c_set[11], g.b_set[0]));
    }

    #[test]
    fn adm_gadget_requires_more_phi_vars() {
        let phi = cnf(1, &[&[1]]);
        let psi = cnf(1, &[&[1]]);
        assert_eq!(
            build_adm_gadget(&phi, &psi, false).unwrap_err(),
            TranslationError::VariableCountOrder
        );
    }

    #[test]
    fn semi_pair_counts() {
        let m1 = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let first = Qbf2Formula::new(vec![1], vec![2], m1).unwrap();
        let m2 = CnfFormula::new(2, vec![vec![1, 2], vec![-1, 2]]).unwrap();
        let second = Qbf2Formula::new(vec![1], vec![2], m2).unwrap();
        let g = satunsat_semi_pair(&first, &second).unwrap();
        let (kk1, kk2) = (3, 3);
        assert_eq!(g.d1.len(), kk1 * kk2);
        assert_eq!(g.d2.len(), 3 * kk2);
        assert_eq!(g.k, kk1 * kk2 + 2 * (kk1 + kk2) + 1);
        // Signals form mutual pairs and the negative signals attack the
        // clause arguments of their side.
        assert!(g.af.attacks(g.sig_a, g.sig_na) && g.af.attacks(g.sig_na, g.sig_a));
        let na_phi_targets = g.af.attacked_by(g.sig_na);
        assert!(na_phi_targets.iter().any(|t| g.af.name(t).starts_with("s2_cl_")));
    }

    #[test]
    fn unused_variable_rejected() {
        assert_eq!(
            std_translation_adm(&cnf(2, &[&[1]])).unwrap_err(),
            TranslationError::UnusedVariable(2)
        );
    }
}
