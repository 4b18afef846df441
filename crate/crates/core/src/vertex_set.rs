//! Bitmask-backed subsets of the ground set `{1..n}`.
//!
//! Vertex `v` lives at bit `v - 1`, so ground sets up to 64 vertices fit in a
//! single word and subset tests are one `and`.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Largest ground set supported by any type in this crate.
pub const MAX_GROUND: usize = 62;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// `{1..k}`; the empty set for `k = 0`.
    pub fn prefix(k: usize) -> Self {
        Self::full(k)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=64).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn pair(u: usize, v: usize) -> Self {
        Self::singleton(u).union(Self::singleton(v))
    }

    /// Builds a set from 1-based labels. Labels outside `1..=64` are rejected.
    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Option<Self> {
        let mut bits = 0u64;
        for v in vs {
            if !(1..=64).contains(&v) {
                return None;
            }
            bits |= 1u64 << (v - 1);
        }
        Some(VertexSet(bits))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        Self::try_from_vertices(vs).expect("vertex label outside 1..=64")
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    /// `{1..n} \ self`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(Self::full(n).0 & !self.0)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    /// Largest label in the set, 0 if empty.
    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Ascending 1-based labels.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels through `perm`, where `perm[v - 1]` is the image of `v`.
    pub fn permuted(self, perm: &[usize]) -> Self {
        let mut out = 0u64;
        for v in self.iter() {
            out |= 1u64 << (perm[v - 1] - 1);
        }
        VertexSet(out)
    }

    /// Lexicographic comparison of the ascending label lists.
    pub fn cmp_lex(self, other: VertexSet) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        let at_or_above = !(low - 1);
        // Below `low` the sorted lists agree; the side holding `low` is
        // smaller unless the other side has nothing left.
        if self.0 & low != 0 {
            if other.0 & at_or_above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & at_or_above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Set-system order: ascending size, then lexicographic.
    pub fn cmp_ascending(self, other: VertexSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp_lex(other))
    }

    /// Hyperedge order: the exact reverse of [`VertexSet::cmp_ascending`], so
    /// larger sets come first and complements of an ascending set system stay
    /// in step with it.
    pub fn cmp_descending(self, other: VertexSet) -> Ordering {
        other.cmp_ascending(self)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{2,3,4}` style; the empty set prints as `{}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct SetVisitor;

        impl<'de> Visitor<'de> for SetVisitor {
            type Value = VertexSet;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of distinct vertex labels in 1..=62")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<VertexSet, A::Error> {
                let mut set = VertexSet::EMPTY;
                while let Some(v) = seq.next_element::<usize>()? {
                    if !(1..=MAX_GROUND).contains(&v) {
                        return Err(de::Error::custom(format!("vertex {v} outside 1..={MAX_GROUND}")));
                    }
                    if set.contains(v) {
                        return Err(de::Error::custom(format!("vertex {v} repeated")));
                    }
                    set.insert(v);
                }
                Ok(set)
            }
        }

        deserializer.deserialize_seq(SetVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex_oracle(a: VertexSet, b: VertexSet) -> Ordering {
        a.to_vec().cmp(&b.to_vec())
    }

    #[test]
    fn lex_matches_vec_comparison() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let (a, b) = (VertexSet(a), VertexSet(b));
                assert_eq!(a.cmp_lex(b), lex_oracle(a, b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn descending_order_lists_co_singletons_like_complements() {
        let n = 5;
        let mut sets: Vec<_> = (1..=n)
            .map(|v| VertexSet::singleton(v).complement(n))
            .collect();
        sets.sort_by(|a, b| a.cmp_descending(*b));
        let firsts: Vec<usize> = sets.iter().map(|s| s.complement(n).to_vec()[0]).collect();
        assert_eq!(firsts, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn display_and_iter() {
        let s = VertexSet::from_vertices([4, 2, 3]);
        assert_eq!(s.to_string(), "{2,3,4}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
        assert_eq!(s.complement(5).to_vec(), vec![1, 5]);
        assert_eq!(s.max_vertex(), 4);
    }
}
