//! Simple graphs on at most 64 labeled vertices, one neighbor mask per vertex.

use crate::vertex_set::{VertexSet, MAX_VERTICES};
use std::fmt;

/// An immutable simple graph. Adjacency is symmetric and irreflexive; all
/// neighbor sets are subsets of `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    NoVertices,
    TooManyVertices(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NoVertices => write!(f, "graph must have at least one vertex"),
            GraphError::TooManyVertices(n) => {
                write!(f, "graph has {n} vertices, at most {MAX_VERTICES} supported")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// A graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an undirected edge; duplicates collapse silently.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].card()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.card()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Exactly the vertices with an empty neighbor set.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// True if the graph contains a matching of size two.
    pub fn has_two_disjoint_edges(&self) -> bool {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            let ends = VertexSet::singleton(u).with(v);
            if edges[i + 1..]
                .iter()
                .any(|&(x, y)| !ends.contains(x) && !ends.contains(y))
            {
                return true;
            }
        }
        false
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        loop {
            let mut grown = seen;
            for v in seen.iter() {
                grown = grown.union(self.adj[v]);
            }
            if grown == seen {
                break;
            }
            seen = grown;
        }
        seen == self.vertices()
    }

    /// Independence number by branch and bound; exact, intended for small n.
    pub fn independence_number(&self) -> usize {
        fn mis(g: &Graph, remaining: VertexSet) -> usize {
            // branch on a max-degree vertex of the remaining subgraph
            let mut pick = None;
            let mut best_deg = 0;
            for v in remaining.iter() {
                let d = g.neighbors(v).intersection(remaining).card();
                if pick.is_none() || d > best_deg {
                    pick = Some(v);
                    best_deg = d;
                }
            }
            let Some(v) = pick else { return 0 };
            if best_deg == 0 {
                return 1 + mis(g, remaining.without(v));
            }
            let take = 1 + mis(g, remaining.difference(g.closed_neighbors(v)));
            let skip = mis(g, remaining.without(v));
            take.max(skip)
        }
        mis(self, self.vertices())
    }

    // Common fixtures, used across the crate and its consumers.

    /// Path on `n` vertices: `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star with the given number of leaves; leaves are `0..leaves` and the
    /// center is the highest index `leaves`.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1).unwrap();
        for v in 0..leaves {
            g.add_edge(v, leaves).unwrap();
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
