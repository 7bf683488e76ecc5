use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Fixed-capacity set of vertex indices `0..capacity`, stored as a bitmap.
///
/// Serializes as the ascending list of members.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::new(capacity);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns true if `v` was not already present.
    ///
    /// Panics if `v` is outside the capacity.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} outside set capacity {}", self.capacity);
        let w = &mut self.words[v / 64];
        let bit = 1u64 << (v % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members as a 128-bit mask, if every member is below 128.
    pub fn to_mask(&self) -> Option<u128> {
        if self.iter().any(|v| v >= 128) {
            return None;
        }
        let lo = self.words.first().copied().unwrap_or(0) as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        Some(lo | hi << 64)
    }

    pub fn from_mask(capacity: usize, mask: u128) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity.min(128) {
            if mask >> v & 1 == 1 {
                s.insert(v);
            }
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    /// The capacity is not part of the wire form; it is set to one past the
    /// largest member and callers resize against their graph.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        let capacity = members.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_iter_with_capacity(capacity, members))
    }
}
