use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

pub(crate) type Words = SmallVec<[u64; 2]>;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertices of some host graph, stored as a bit row.
///
/// Sets up to 128 vertices live inline; larger hosts spill to the heap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: Words,
}

impl VertexSet {
    /// An empty set sized for a host with `n` vertices.
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: smallvec::smallvec![0; words_for(n)],
        }
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(words: &[u64]) -> Self {
        VertexSet {
            bits: Words::from_slice(words),
        }
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    /// Largest vertex id this set can hold, plus one.
    pub fn capacity(&self) -> usize {
        self.bits.len() * 64
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.bits[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v >> 6 < self.bits.len() && self.bits[v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> VertexIter<'_> {
        VertexIter {
            words: &self.bits,
            idx: 0,
            cur: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a |= b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other.words());
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other.words());
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other.words());
        s
    }

    pub fn intersects(&self, other: &[u64]) -> bool {
        self.bits.iter().zip(other).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &[u64]) -> usize {
        self.bits
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(other.words()).all(|(a, b)| a & !b == 0)
            && self.bits.iter().skip(other.words().len()).all(|&w| w == 0)
    }
}

pub struct VertexIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for VertexIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = VertexIter<'a>;

    fn into_iter(self) -> VertexIter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        let n = vs.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_vertices(n, vs))
    }
}

/// Iterates the set bits of a raw row.
pub(crate) fn iter_bits(words: &[u64]) -> VertexIter<'_> {
    VertexIter {
        words,
        idx: 0,
        cur: words.first().copied().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_sets_iterate_in_order() {
        let s = VertexSet::from_vertices(200, [3, 64, 65, 199, 0]);
        assert_eq!(s.to_vec(), vec![0, 3, 64, 65, 199]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.first(), Some(0));
        assert!(s.contains(199));
        assert!(!s.contains(198));
        assert!(!s.contains(10_000));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let b = VertexSet::from_vertices(10, [2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection_len(b.words()), 2);
    }
}
