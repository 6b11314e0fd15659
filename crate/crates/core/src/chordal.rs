//! Chordal recognition and the certificate the chordal walk strategy needs.
//!
//! Recognition runs maximum cardinality search and checks that the resulting
//! ordering is a perfect elimination ordering, which succeeds exactly on
//! chordal graphs. A greedy scan along the PEO then extracts an independent
//! set `S = {s_1, .., s_m}` together with a vertex-disjoint clique cover
//! `{H_1, .., H_m}` of equal size with `s_i` in `H_i`; equality of the two
//! sizes certifies `|S| = α(G)`, which for chordal graphs also equals the
//! upper domination number.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalStructure {
    /// Perfect elimination ordering: each vertex's later-ordered neighbors
    /// form a clique.
    pub peo: Vec<usize>,
    /// One representative per clique, in cover order; independent in `G`.
    pub reps: Vec<usize>,
    /// Vertex-disjoint cliques covering `V`, aligned with `reps`.
    pub cliques: Vec<VertexSet>,
    /// The members of `reps` as a set.
    pub independent_set: VertexSet,
}

/// Returns the chordal certificate, or `None` when the graph has an induced
/// cycle of length at least four.
pub fn chordal_structure(g: &Graph) -> Option<ChordalStructure> {
    let peo = mcs_ordering(g);
    if !is_perfect_elimination(g, &peo) {
        return None;
    }

    let mut reps = Vec::new();
    let mut cliques = Vec::new();
    let mut assigned = VertexSet::EMPTY;
    for &v in &peo {
        if assigned.contains(v) {
            continue;
        }
        // unassigned neighbors of v all come later in the PEO, so together
        // with v they form a clique
        let clique = g.neighbors(v).difference(assigned).with(v);
        debug_assert!(is_clique(g, clique));
        reps.push(v);
        cliques.push(clique);
        assigned = assigned.union(clique);
    }
    debug_assert_eq!(assigned, g.vertices());

    let independent_set = reps.iter().copied().collect();
    Some(ChordalStructure { peo, reps, cliques, independent_set })
}

/// Maximum cardinality search; ties go to the lowest vertex index. The
/// reversed visit order is a PEO whenever the graph is chordal.
fn mcs_ordering(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    order.reverse();
    order
}

fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: VertexSet = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        if !is_clique(g, later) {
            return false;
        }
    }
    true
}

fn is_clique(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|u| set.without(u).is_subset_of(g.neighbors(u)))
}
