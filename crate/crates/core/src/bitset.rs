//! Small fixed-width index sets.
//!
//! Vertex sets (squarefree multidegrees) and sets of facet indices are both
//! stored as 64-bit masks. Every algorithm in this crate works at desk scale,
//! so the 64 element ceiling is checked once at construction time and never
//! again.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Maximum number of distinct elements a [`BitSet`] can hold.
pub const CAPACITY: usize = 64;

#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet(u64);

/// A set of vertex indices; equivalently a squarefree monomial.
pub type VertexSet = BitSet;

/// A set of facet (generator) indices.
pub type FacetSet = BitSet;

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        BitSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "bit set capacity is {CAPACITY}");
        if n == CAPACITY {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < CAPACITY, "bit set capacity is {CAPACITY}");
        BitSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(BitSet::EMPTY, |acc, i| acc | BitSet::singleton(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < CAPACITY && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        *self |= BitSet::singleton(i);
    }

    pub fn remove(&mut self, i: usize) {
        if i < CAPACITY {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn with(self, i: usize) -> Self {
        self | BitSet::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: BitSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`, in
    /// increasing numeric order of their masks.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Lexicographic comparison of the sorted index lists.
    pub fn cmp_lex(self, other: BitSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Cardinality first, then lexicographic. This is the canonical
    /// presentation order used for covers, faces and multidegrees.
    pub fn cmp_graded(self, other: BitSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }
}

impl BitOr for BitSet {
    type Output = BitSet;
    fn bitor(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for BitSet {
    fn bitor_assign(&mut self, rhs: BitSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for BitSet {
    type Output = BitSet;
    fn bitand(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for BitSet {
    fn bitand_assign(&mut self, rhs: BitSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for BitSet {
    type Output = BitSet;
    fn sub(self, rhs: BitSet) -> BitSet {
        BitSet(self.0 & !rhs.0)
    }
}

impl Not for BitSet {
    type Output = BitSet;
    fn not(self) -> BitSet {
        BitSet(!self.0)
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        BitSet::from_indices(iter)
    }
}

impl IntoIterator for BitSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the ascending list of member indices.
impl serde::Serialize for BitSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for BitSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = indices.iter().find(|&&i| i >= CAPACITY) {
            return Err(serde::de::Error::custom(format!("index {bad} out of range")));
        }
        Ok(BitSet::from_indices(indices))
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // Standard "next submask" step in increasing order.
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(BitSet(cur))
    }
}

/// All `k`-element subsets of `universe` in lexicographic order of their
/// sorted index lists.
pub fn combinations(universe: BitSet, k: usize) -> impl Iterator<Item = BitSet> {
    use itertools::Itertools;
    universe
        .to_vec()
        .into_iter()
        .combinations(k)
        .map(BitSet::from_indices)
}

/// Every nonempty subset of `universe`, cardinality first, then
/// lexicographic.
pub fn graded_subsets(universe: BitSet) -> impl Iterator<Item = BitSet> {
    (1..=universe.len()).flat_map(move |k| combinations(universe, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_set_algebra() {
        let a = BitSet::from_indices([0, 2, 5]);
        let b = BitSet::from_indices([2, 3]);
        assert_eq!((a | b).to_vec(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).to_vec(), vec![2]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert!(BitSet::from_indices([0, 5]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert_eq!(BitSet::EMPTY.min(), None);
        assert_eq!(BitSet::full(64).len(), 64);
    }

    #[test]
    fn subsets_in_numeric_order() {
        let s = BitSet::from_indices([1, 3]);
        let subs: Vec<_> = s.subsets().map(|b| b.to_vec()).collect();
        assert_eq!(subs, vec![vec![], vec![1], vec![3], vec![1, 3]]);
        assert_eq!(BitSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn graded_order() {
        let order: Vec<_> = graded_subsets(BitSet::full(3)).map(|b| b.to_vec()).collect();
        assert_eq!(
            order,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }

    proptest! {
        #[test]
        fn subsets_are_exactly_the_submasks(bits in 0u64..(1 << 10)) {
            let s = BitSet::from_bits(bits);
            let subs: Vec<_> = s.subsets().collect();
            prop_assert_eq!(subs.len(), 1usize << s.len());
            prop_assert!(subs.iter().all(|t| t.is_subset(s)));
            prop_assert!(subs.windows(2).all(|w| w[0].bits() < w[1].bits()));
        }

        #[test]
        fn lex_order_agrees_with_vec_order(a in 0u64..(1 << 12), b in 0u64..(1 << 12)) {
            let (x, y) = (BitSet::from_bits(a), BitSet::from_bits(b));
            prop_assert_eq!(x.cmp_lex(y), x.to_vec().cmp(&y.to_vec()));
        }
    }
}
