//! Canonical forms for tiny graphs and exhaustive enumeration up to
//! isomorphism.
//!
//! The canonical form of a graph on `n <= 11` vertices is the
//! lexicographically minimal upper-triangle adjacency bit string over all
//! `n!` vertex orderings, read column by column (the graph6 bit order). The
//! string is packed into a `u64` with earlier bits more significant, so
//! integer comparison is string comparison. Minimality is found by
//! backtracking over partial orderings: placing the `t`-th vertex fixes the
//! first `t(t-1)/2` bits, so any partial ordering whose prefix already
//! exceeds the best known string is pruned.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::collections::BTreeSet;
use std::fmt;

/// Largest order whose packed triangle fits in a `u64` (55 bits at 11).
pub const MAX_CANONICAL_VERTICES: usize = 11;

/// Order cap for exhaustive enumeration.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderOutOfRange {
    pub n: usize,
    pub max: usize,
}

impl fmt::Display for OrderOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {} outside the supported range 1..={}", self.n, self.max)
    }
}

impl std::error::Error for OrderOutOfRange {}

fn pair_position(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn packed_identity(g: &Graph) -> u64 {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        bits |= 1u64 << (total - 1 - pair_position(u, v));
    }
    bits
}

/// Rebuilds the graph a packed triangle describes under the identity order.
fn graph_from_packed(n: usize, bits: u64) -> Graph {
    let total = n * (n - 1) / 2;
    let mut g = Graph::empty(n).expect("order in range");
    for j in 1..n {
        for i in 0..j {
            if bits >> (total - 1 - pair_position(i, j)) & 1 != 0 {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    g
}

struct CanonicalSearch<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    placed: Vec<usize>,
    used: VertexSet,
    best: u64,
}

impl CanonicalSearch<'_> {
    fn run(&mut self, prefix: u64, bits_done: usize) {
        let t = self.placed.len();
        if t == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        for c in 0..self.n {
            if self.used.contains(c) {
                continue;
            }
            let mut extended = prefix;
            for (offset, &p) in self.placed.iter().enumerate() {
                if self.g.has_edge(p, c) {
                    extended |= 1u64 << (self.total - 1 - (bits_done + offset));
                }
            }
            let done = bits_done + t;
            let mask = if done == 0 { 0 } else { ((1u64 << done) - 1) << (self.total - done) };
            if extended > self.best & mask {
                continue;
            }
            self.placed.push(c);
            self.used.insert(c);
            self.run(extended, done);
            self.placed.pop();
            self.used.remove(c);
        }
    }
}

/// The canonical packed bit string of `g` (order at most 11).
pub fn canonical_bits(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical form limited to {MAX_CANONICAL_VERTICES} vertices");
    if n == 1 {
        return 0;
    }
    let mut search = CanonicalSearch {
        g,
        n,
        total: n * (n - 1) / 2,
        placed: Vec::with_capacity(n),
        used: VertexSet::EMPTY,
        best: packed_identity(g),
    };
    search.run(0, 0);
    search.best
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    graph_from_packed(g.n(), canonical_bits(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_bits(a) == canonical_bits(b)
}

/// All graphs on `n` vertices up to isomorphism (order at most 8), one
/// canonical representative each, in ascending canonical order. Intermediate
/// levels keep disconnected graphs even when `connected_only` is set, since
/// deleting a vertex of a connected graph may disconnect it.
pub fn enumerate_small_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, OrderOutOfRange> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(OrderOutOfRange { n, max: MAX_ENUMERATION_VERTICES });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for t in 2..=n {
        let mut next = BTreeSet::new();
        for &bits in &level {
            let parent = graph_from_packed(t - 1, bits);
            // attach vertex t-1 with every possible neighborhood
            for mask in 0..(1u64 << (t - 1)) {
                let mut child = Graph::empty(t).expect("order in range");
                for (u, v) in parent.edges() {
                    child.add_edge(u, v).expect("in range");
                }
                for v in VertexSet::from_bits(mask).iter() {
                    child.add_edge(v, t - 1).expect("in range");
                }
                next.insert(canonical_bits(&child));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|bits| graph_from_packed(n, bits))
        .filter(|g| !connected_only || g.is_connected())
        .collect())
}
