//! Bipartition with a minimized side.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::collections::VecDeque;

/// A bipartition `(X, Y)` of the vertex set with no edge inside either side
/// and `|X| <= |Y|`. Per connected component the smaller color class joins
/// `X` (on ties, the class not containing the component's smallest vertex),
/// which minimizes `|X|` globally; isolated vertices land in `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

/// Two-colors the graph, or returns `None` if it has an odd cycle.
pub fn bipartition_min_side(g: &Graph) -> Option<Bipartition> {
    let n = g.n();
    let mut seen = VertexSet::EMPTY;
    let mut x = VertexSet::EMPTY;

    for root in 0..n {
        if seen.contains(root) {
            continue;
        }
        let mut side0 = VertexSet::singleton(root);
        let mut side1 = VertexSet::EMPTY;
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let u_side0 = side0.contains(u);
            for v in g.neighbors(u).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    if u_side0 {
                        side1.insert(v);
                    } else {
                        side0.insert(v);
                    }
                    queue.push_back(v);
                } else if side0.contains(v) == u_side0 {
                    return None; // odd cycle
                }
            }
        }
        if side1.card() < side0.card() {
            x = x.union(side1);
        } else if side0.card() < side1.card() {
            x = x.union(side0);
        } else {
            x = x.union(side1); // tie: keep the root's class in Y
        }
    }

    Some(Bipartition { x, y: g.vertices().difference(x) })
}
