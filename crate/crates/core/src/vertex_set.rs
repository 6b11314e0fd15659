//! Vertex sets as single-word bit masks.

use std::fmt;

/// Hard cap on vertex count so every vertex set fits in one machine word.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `{0, .., n-1}` of some graph, stored as a 64-bit
/// mask. The vertex count of the owning graph is carried by context; the set
/// itself only stores bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn overlaps(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Renders the set as an `n`-character 0/1 string, vertex 0 leftmost.
    pub fn bitstring(self, n: usize) -> String {
        (0..n).map(|v| if self.contains(v) { '1' } else { '0' }).collect()
    }

    /// Parses an 0/1 string (vertex 0 leftmost) into a set plus its width.
    pub fn parse_bitstring(s: &str) -> Option<(VertexSet, usize)> {
        if s.is_empty() || s.len() > MAX_VERTICES {
            return None;
        }
        let mut set = VertexSet::EMPTY;
        for (v, c) in s.chars().enumerate() {
            match c {
                '1' => set.insert(v),
                '0' => {}
                _ => return None,
            }
        }
        Some((set, s.len()))
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
