//! Dominating-set predicates, enumeration, and the parameters γ and Γ.

use crate::chordal::chordal_structure;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// True iff every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating_within(g, g.vertices(), s)
}

/// Domination restricted to the subgraph induced by `active`; `s` must be a
/// subset of `active`.
pub(crate) fn is_dominating_within(g: &Graph, active: VertexSet, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(active));
    let mut covered = s;
    for v in s.iter() {
        covered = covered.union(g.neighbors(v));
    }
    active.is_subset_of(covered)
}

/// True iff `s` dominates and no single-vertex deletion keeps it dominating.
pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && s.iter().all(|v| !is_dominating(g, s.without(v)))
}

/// Shrinks a dominating set to a minimal one by a single ascending pass:
/// each vertex is dropped if the remainder still dominates. Once a vertex
/// fails the test it can never become removable again, so one pass reaches a
/// fixpoint.
pub fn minimal_subset(g: &Graph, s: VertexSet) -> VertexSet {
    assert!(is_dominating(g, s), "minimal_subset requires a dominating set");
    minimal_subset_within(g, g.vertices(), s)
}

pub(crate) fn minimal_subset_within(g: &Graph, active: VertexSet, s: VertexSet) -> VertexSet {
    debug_assert!(is_dominating_within(g, active, s));
    let mut cur = s;
    for v in s.iter() {
        if is_dominating_within(g, active, cur.without(v)) {
            cur.remove(v);
        }
    }
    cur
}

/// All dominating sets of cardinality at most `k`, ascending as n-bit
/// integers. Depth-first branch over vertices in index order, pruning
/// branches whose remaining budget cannot cover the still-undominated
/// vertices; agrees with the naive power-set filter.
pub fn enumerate_dominating_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    struct Search<'a> {
        g: &'a Graph,
        k: usize,
        max_closed: usize,
        out: Vec<VertexSet>,
    }

    impl Search<'_> {
        fn branch(&mut self, v: usize, current: VertexSet, covered: VertexSet) {
            let uncovered = self.g.vertices().difference(covered);
            if current.card() == self.k || v == self.g.n() {
                if uncovered.is_empty() {
                    self.out.push(current);
                }
                return;
            }
            // budget: each added vertex covers at most max_closed new vertices
            let budget = self.k - current.card();
            if uncovered.card() > budget * self.max_closed {
                return;
            }
            // a still-uncovered vertex whose closed neighborhood lies
            // entirely among the already-decided vertices can never be covered
            let undecided = self.g.vertices().difference(VertexSet::full(v));
            for u in uncovered.iter() {
                if !self.g.closed_neighbors(u).overlaps(undecided) {
                    return;
                }
            }
            self.branch(v + 1, current, covered);
            self.branch(v + 1, current.with(v), covered.union(self.g.closed_neighbors(v)));
        }
    }

    let max_closed = (0..g.n()).map(|v| g.closed_neighbors(v).card()).max().unwrap_or(1);
    let mut search = Search { g, k: k.min(g.n()), max_closed, out: Vec::new() };
    search.branch(0, VertexSet::EMPTY, VertexSet::EMPTY);
    let mut out = search.out;
    out.sort_unstable_by_key(|s| s.bits());
    out
}

/// All minimal dominating sets, ascending as n-bit integers.
pub fn enumerate_minimal_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    enumerate_dominating_sets(g, g.n())
        .into_iter()
        .filter(|&s| s.iter().all(|v| !is_dominating(g, s.without(v))))
        .collect()
}

/// The smallest cardinality of a dominating set.
pub fn domination_number(g: &Graph) -> usize {
    // branch on which closed neighbor covers the lowest uncovered vertex
    fn exists(g: &Graph, budget: usize, covered: VertexSet) -> bool {
        let Some(u) = g.vertices().difference(covered).min_elem() else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        g.closed_neighbors(u)
            .iter()
            .any(|w| exists(g, budget - 1, covered.union(g.closed_neighbors(w))))
    }
    (1..=g.n())
        .find(|&k| exists(g, k, VertexSet::EMPTY))
        .expect("the full vertex set dominates")
}

/// γ, Γ, and the witnessing set families, assembled from the full minimal
/// dominating set enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationProfile {
    pub gamma: usize,
    pub big_gamma: usize,
    pub gamma_sets: Vec<VertexSet>,
    pub minimal_sets: Vec<VertexSet>,
}

pub fn domination_profile(g: &Graph) -> DominationProfile {
    let minimal_sets = enumerate_minimal_dominating_sets(g);
    let gamma = minimal_sets.iter().map(|s| s.card()).min().expect("nonempty graph dominates itself");
    let big_gamma = minimal_sets.iter().map(|s| s.card()).max().expect("nonempty");
    let gamma_sets = minimal_sets.iter().copied().filter(|s| s.card() == gamma).collect();
    DominationProfile { gamma, big_gamma, gamma_sets, minimal_sets }
}

/// Γ, taking the clique-cover shortcut on chordal graphs (where Γ equals the
/// independence number) and falling back to full enumeration otherwise.
pub fn upper_domination_number(g: &Graph) -> usize {
    match chordal_structure(g) {
        Some(cs) => cs.reps.len(),
        None => domination_profile(g).big_gamma,
    }
}
