//! Dominating-set reconfiguration on small simple graphs.
//!
//! Given a graph `G` and a size bound `k`, the *k-dominating graph* `D_k(G)`
//! has one node per dominating set of `G` of cardinality at most `k`, with an
//! edge whenever two sets differ by adding or deleting a single vertex. The
//! *token-jump graph* `X_k(G)` instead keeps the dominating sets of
//! cardinality exactly `k` and joins sets that differ by swapping one vertex
//! for another. Two dominating sets can be reconfigured into one another
//! exactly when they lie in the same connected component of these graphs.
//!
//! This crate materializes `D_k(G)` and `X_k(G)` for graphs on up to 64
//! vertices, decides their connectivity, computes the threshold `d0(G)` above
//! which every level is connected, and constructs explicit reconfiguration
//! walks: generic strategies that route through the union with a minimum
//! dominating set, and tighter strategies for bipartite and chordal graphs
//! that stay within cardinality `Γ(G) + 1`. A breadth-first oracle over the
//! implicit reconfiguration graph provides ground truth for all of them.

pub mod bipartite;
pub mod chordal;
pub mod domination;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod reconfig;
pub mod vertex_set;
pub mod walks;

pub use graph::Graph;
pub use vertex_set::VertexSet;
