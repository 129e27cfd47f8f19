//! Fixed-universe bit sets used for argument sets throughout the crate.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of argument ids drawn from a fixed universe `0..len`.
///
/// Sets over the same universe compare by the numeric value of their
/// characteristic vector (bit `i` has weight `2^i`), which gives the
/// deterministic enumeration order used by the solvers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet {
    len: usize,
    words: Vec<u64>,
}

impl ArgSet {
    pub fn empty(len: usize) -> Self {
        ArgSet {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_iter(len: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in ids {
            s.insert(i);
        }
        s
    }

    /// Universe size, not the number of elements.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ArgSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ArgSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &ArgSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &ArgSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Cardinality of the symmetric difference.
    pub fn xor_count(&self, other: &ArgSet) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        // Numeric comparison of the characteristic vector.
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = ArgSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn numeric_order_matches_counting() {
        // Subsets of a 3-element universe in ascending numeric order.
        let sets: Vec<ArgSet> = (0u32..8)
            .map(|m| ArgSet::from_iter(3, (0..3).filter(|i| m >> i & 1 == 1)))
            .collect();
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sets, sorted);
    }

    #[test]
    fn subset_and_xor() {
        let a = ArgSet::from_iter(10, [1, 3, 5]);
        let b = ArgSet::from_iter(10, [1, 3, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(a.is_strict_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.xor_count(&b), 1);
        assert_eq!(a.xor_count(&a), 0);
    }
}
