//! The argumentation framework data model.
//!
//! A framework is a directed attack graph over dense 0-based argument ids
//! with a name table mapping ids back to the labels of the source file.
//! Frameworks are immutable after construction and safe to share across
//! threads.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bitset::ArgSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AfError {
    #[error("a framework needs at least one argument")]
    EmptyFramework,
    #[error("duplicate argument name `{0}`")]
    DuplicateArgument(String),
    #[error("invalid argument name `{0}` (allowed: [A-Za-z0-9_])")]
    InvalidName(String),
    #[error("attack endpoint {0} out of range")]
    IdOutOfRange(usize),
}

/// A directed attack graph `(A, R)` with both attack directions queryable.
#[derive(Clone)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    ids: HashMap<String, usize>,
    attackers: Vec<ArgSet>,
    attacked: Vec<ArgSet>,
    self_attackers: ArgSet,
    attack_count: usize,
    duplicate_attacks: usize,
}

impl ArgumentationFramework {
    pub fn n_args(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    /// Arguments attacking `id`.
    pub fn attackers_of(&self, id: usize) -> &ArgSet {
        &self.attackers[id]
    }

    /// Arguments attacked by `id`.
    pub fn attacked_by(&self, id: usize) -> &ArgSet {
        &self.attacked[id]
    }

    pub fn self_attackers(&self) -> &ArgSet {
        &self.self_attackers
    }

    pub fn attacks(&self, from: usize, to: usize) -> bool {
        self.attacked[from].contains(to)
    }

    /// Number of distinct attacks in `R`.
    pub fn attack_count(&self) -> usize {
        self.attack_count
    }

    /// How many attack statements were dropped as duplicates during
    /// construction. `R` is a set, so repeats collapse silently.
    pub fn duplicate_attack_count(&self) -> usize {
        self.duplicate_attacks
    }

    pub fn attack_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_args()).flat_map(move |from| self.attacked[from].iter().map(move |to| (from, to)))
    }

    /// Union of `set` and everything it attacks (the range `E^+`).
    pub fn range_of(&self, set: &ArgSet) -> ArgSet {
        let mut range = set.clone();
        for a in set.iter() {
            range.union_with(&self.attacked[a]);
        }
        range
    }

    /// Everything attacked by some member of `set`.
    pub fn attacked_by_set(&self, set: &ArgSet) -> ArgSet {
        let mut out = ArgSet::empty(self.n_args());
        for a in set.iter() {
            out.union_with(&self.attacked[a]);
        }
        out
    }

    /// Arguments in conflict with `id`, in either direction.
    pub fn conflicts_of(&self, id: usize) -> ArgSet {
        self.attackers[id].union(&self.attacked[id])
    }

    pub fn empty_extension(&self) -> Extension {
        Extension {
            members: ArgSet::empty(self.n_args()),
        }
    }

    pub fn extension_of(&self, ids: impl IntoIterator<Item = usize>) -> Extension {
        Extension {
            members: ArgSet::from_iter(self.n_args(), ids),
        }
    }

    /// Resolves a list of names into an extension.
    pub fn extension_of_names<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Option<Extension> {
        let mut set = ArgSet::empty(self.n_args());
        for n in names {
            set.insert(self.id_of(n)?);
        }
        Some(Extension { members: set })
    }

    /// Renders an extension as a sorted list of argument names.
    pub fn display_extension(&self, ext: &Extension) -> String {
        let mut names: Vec<&str> = ext.members.iter().map(|i| self.name(i)).collect();
        names.sort_unstable();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AF({} args, {} attacks)", self.n_args(), self.attack_count)
    }
}

/// A set of arguments bound to the universe of one framework.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Extension {
    members: ArgSet,
}

impl Extension {
    pub fn members(&self) -> &ArgSet {
        &self.members
    }

    pub fn universe(&self) -> usize {
        self.members.universe()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.contains(id)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

impl From<ArgSet> for Extension {
    fn from(members: ArgSet) -> Self {
        Extension { members }
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Incremental framework constructor used by the parsers and generators.
#[derive(Default)]
pub struct AfBuilder {
    names: Vec<String>,
    ids: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl AfBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Creates `n` arguments named `1..=n`.
    pub fn with_numbered_args(n: usize) -> Self {
        let mut b = Self::new();
        for i in 1..=n {
            b.add_arg(i.to_string()).expect("numbered names are unique");
        }
        b
    }

    pub fn n_args(&self) -> usize {
        self.names.len()
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    pub fn add_arg(&mut self, name: impl Into<String>) -> Result<usize, AfError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(AfError::InvalidName(name));
        }
        if self.ids.contains_key(&name) {
            return Err(AfError::DuplicateArgument(name));
        }
        let id = self.names.len();
        self.ids.insert(name.clone(), id);
        self.names.push(name);
        Ok(id)
    }

    pub fn add_attack(&mut self, from: usize, to: usize) -> Result<(), AfError> {
        if from >= self.names.len() {
            return Err(AfError::IdOutOfRange(from));
        }
        if to >= self.names.len() {
            return Err(AfError::IdOutOfRange(to));
        }
        self.edges.push((from, to));
        Ok(())
    }

    /// Adds both directed attacks of a symmetric conflict.
    pub fn add_mutual_attack(&mut self, a: usize, b: usize) -> Result<(), AfError> {
        self.add_attack(a, b)?;
        self.add_attack(b, a)
    }

    pub fn build(self) -> Result<ArgumentationFramework, AfError> {
        let n = self.names.len();
        if n == 0 {
            return Err(AfError::EmptyFramework);
        }
        let mut attackers = vec![ArgSet::empty(n); n];
        let mut attacked = vec![ArgSet::empty(n); n];
        let mut self_attackers = ArgSet::empty(n);
        let mut attack_count = 0usize;
        let mut duplicate_attacks = 0usize;
        for (from, to) in self.edges {
            if attacked[from].contains(to) {
                duplicate_attacks += 1;
                continue;
            }
            attacked[from].insert(to);
            attackers[to].insert(from);
            if from == to {
                self_attackers.insert(from);
            }
            attack_count += 1;
        }
        Ok(ArgumentationFramework {
            names: self.names,
            ids: self.ids,
            attackers,
            attacked,
            self_attackers,
            attack_count,
            duplicate_attacks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_views_are_symmetric() {
        let mut b = AfBuilder::with_numbered_args(3);
        b.add_attack(0, 1).unwrap();
        b.add_attack(1, 2).unwrap();
        b.add_attack(2, 2).unwrap();
        let af = b.build().unwrap();
        for x in 0..af.n_args() {
            for y in 0..af.n_args() {
                assert_eq!(
                    af.attackers_of(x).contains(y),
                    af.attacked_by(y).contains(x),
                    "views disagree on ({y},{x})"
                );
            }
        }
        assert!(af.self_attackers().contains(2));
        assert!(!af.self_attackers().contains(0));
    }

    #[test]
    fn duplicate_attacks_collapse() {
        let mut b = AfBuilder::with_numbered_args(2);
        b.add_attack(0, 1).unwrap();
        b.add_attack(0, 1).unwrap();
        let af = b.build().unwrap();
        assert_eq!(af.attack_count(), 1);
        assert_eq!(af.duplicate_attack_count(), 1);
    }

    #[test]
    fn empty_framework_rejected() {
        assert_eq!(AfBuilder::new().build().unwrap_err(), AfError::EmptyFramework);
    }

    #[test]
    fn name_validation() {
        let mut b = AfBuilder::new();
        assert!(b.add_arg("ok_Name9").is_ok());
        assert!(matches!(b.add_arg("bad name"), Err(AfError::InvalidName(_))));
        assert!(matches!(
            b.add_arg("ok_Name9"),
            Err(AfError::DuplicateArgument(_))
        ));
    }

    #[test]
    fn range_of_set() {
        let mut b = AfBuilder::with_numbered_args(4);
        b.add_attack(0, 1).unwrap();
        b.add_attack(1, 2).unwrap();
        let af = b.build().unwrap();
        let e = af.extension_of([0]);
        let range = af.range_of(e.members());
        assert_eq!(range.iter().collect::<Vec<_>>(), vec![0, 1]);
    }
}
