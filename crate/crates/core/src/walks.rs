//! Constructive reconfiguration walks, walk surgery, and a BFS oracle.
//!
//! A [`Walk`] is a sequence of dominating sets in which consecutive sets
//! differ by the annotated single-vertex addition or removal, all within a
//! governing cardinality bound `k`; a [`JumpPath`] keeps a fixed cardinality
//! and swaps one vertex per step. The strategies here construct walks with
//! provable bounds:
//!
//! - [`walk_subset_chain`] descends from a set to a dominating subset;
//! - [`walk_gamma_union`] routes any dominating set to a minimum dominating
//!   set through the union with its minimal core, at level
//!   `min(n-1, Γ+γ)`;
//! - [`walk_near_full`] connects any two dominating sets at level `n-1`
//!   (two independent edges required), passing near the full vertex set;
//! - [`walk_bipartite`] reaches the minimized side of a bipartition at level
//!   `Γ+1` by swapping covered vertices of the big side for missing ones of
//!   the small side;
//! - [`walk_chordal`] reaches the canonical independent set of a chordal
//!   graph at level `Γ+1` by peeling cliques of the cover or rotating each
//!   clique's token onto its representative.
//!
//! [`compress_walk`] rewrites a walk between two cardinality-`l` sets so it
//! only visits cardinalities `l` and `l+1`; [`project_to_jump`] and
//! [`lift_from_jump`] translate between such walks and jump paths.
//! [`oracle_bfs`] searches the implicit reconfiguration graph directly
//! (single-bit flips plus a domination test, no materialization) and serves
//! as ground truth for everything above.

use crate::bipartite::bipartition_min_side;
use crate::chordal::chordal_structure;
use crate::domination::{
    domination_number, domination_profile, is_dominating, is_dominating_within, minimal_subset,
    minimal_subset_within,
};
use crate::graph::Graph;
use crate::reconfig::EdgeRule;
use crate::vertex_set::VertexSet;
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    Add(usize),
    Remove(usize),
}

/// A reconfiguration walk in `D_k`: every step is dominating, has
/// cardinality at most `k`, and follows from its predecessor by the
/// annotated move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub k: usize,
    pub steps: Vec<VertexSet>,
    pub moves: Vec<Move>,
}

impl Walk {
    pub fn trivial(k: usize, s: VertexSet) -> Walk {
        Walk { k, steps: vec![s], moves: Vec::new() }
    }

    pub fn start(&self) -> VertexSet {
        self.steps[0]
    }

    pub fn end(&self) -> VertexSet {
        *self.steps.last().expect("walks are nonempty")
    }

    /// Number of sets visited (moves + 1).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn max_card(&self) -> usize {
        self.steps.iter().map(|s| s.card()).max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Walk {
        let steps = self.steps.iter().rev().copied().collect();
        let moves = self
            .moves
            .iter()
            .rev()
            .map(|m| match *m {
                Move::Add(v) => Move::Remove(v),
                Move::Remove(v) => Move::Add(v),
            })
            .collect();
        Walk { k: self.k, steps, moves }
    }

    /// Joins two walks sharing an endpoint; the bound becomes the larger of
    /// the two.
    pub fn concat(mut self, other: Walk) -> Walk {
        assert_eq!(self.end(), other.start(), "concatenated walks must share an endpoint");
        self.k = self.k.max(other.k);
        self.steps.extend(other.steps.into_iter().skip(1));
        self.moves.extend(other.moves);
        self
    }
}

/// A path in `X_k`: equal-cardinality dominating sets, one token jump
/// `(out, in)` per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpPath {
    pub k: usize,
    pub steps: Vec<VertexSet>,
    pub moves: Vec<(usize, usize)>,
}

impl JumpPath {
    pub fn trivial(k: usize, s: VertexSet) -> JumpPath {
        JumpPath { k, steps: vec![s], moves: Vec::new() }
    }

    pub fn start(&self) -> VertexSet {
        self.steps[0]
    }

    pub fn end(&self) -> VertexSet {
        *self.steps.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Either kind of reconfiguration route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    Walk(Walk),
    Jump(JumpPath),
}

struct WalkBuilder {
    k: usize,
    steps: Vec<VertexSet>,
    moves: Vec<Move>,
}

impl WalkBuilder {
    fn new(k: usize, start: VertexSet) -> WalkBuilder {
        WalkBuilder { k, steps: vec![start], moves: Vec::new() }
    }

    fn current(&self) -> VertexSet {
        *self.steps.last().expect("builder starts nonempty")
    }

    fn add(&mut self, v: usize) {
        let next = self.current().with(v);
        debug_assert_ne!(next, self.current());
        self.steps.push(next);
        self.moves.push(Move::Add(v));
    }

    fn remove(&mut self, v: usize) {
        let next = self.current().without(v);
        debug_assert_ne!(next, self.current());
        self.steps.push(next);
        self.moves.push(Move::Remove(v));
    }

    fn apply(&mut self, m: Move) {
        match m {
            Move::Add(v) => self.add(v),
            Move::Remove(v) => self.remove(v),
        }
    }

    /// Removes `current \ target` in descending vertex order.
    fn descend_to(&mut self, target: VertexSet) {
        debug_assert!(target.is_subset_of(self.current()));
        let mut doomed: Vec<usize> = self.current().difference(target).iter().collect();
        doomed.reverse();
        for v in doomed {
            self.remove(v);
        }
    }

    /// Adds `target \ current` in ascending vertex order.
    fn ascend_to(&mut self, target: VertexSet) {
        debug_assert!(self.current().is_subset_of(target));
        for v in target.difference(self.current()).iter() {
            self.add(v);
        }
    }

    /// Appends a walk starting at the current set.
    fn append_walk(&mut self, w: &Walk) {
        debug_assert_eq!(w.start(), self.current());
        for m in &w.moves {
            self.apply(*m);
        }
    }

    fn finish(self) -> Walk {
        Walk { k: self.k, steps: self.steps, moves: self.moves }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    MoveCountMismatch,
    OutOfRange,
    CardinalityExceeded,
    NotDominating,
    MoveMismatch,
}

/// First failure found when checking a walk or jump path, with the step (for
/// set-level problems) or move (for transition problems) it occurred at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for WalkViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Empty => "walk has no steps",
            ViolationKind::MoveCountMismatch => "move count does not match step count",
            ViolationKind::OutOfRange => "set contains a vertex outside the graph",
            ViolationKind::CardinalityExceeded => "set exceeds the cardinality bound",
            ViolationKind::NotDominating => "set is not dominating",
            ViolationKind::MoveMismatch => "step does not follow from the annotated move",
        };
        write!(f, "{} (at index {})", what, self.index)
    }
}

impl std::error::Error for WalkViolation {}

/// Checks every walk invariant against `g`, reporting the first failure.
pub fn verify_walk(g: &Graph, w: &Walk) -> Result<(), WalkViolation> {
    if w.steps.is_empty() {
        return Err(WalkViolation { index: 0, kind: ViolationKind::Empty });
    }
    if w.moves.len() + 1 != w.steps.len() {
        return Err(WalkViolation { index: 0, kind: ViolationKind::MoveCountMismatch });
    }
    for (index, &s) in w.steps.iter().enumerate() {
        if !s.is_subset_of(g.vertices()) {
            return Err(WalkViolation { index, kind: ViolationKind::OutOfRange });
        }
        if s.card() > w.k {
            return Err(WalkViolation { index, kind: ViolationKind::CardinalityExceeded });
        }
        if !is_dominating(g, s) {
            return Err(WalkViolation { index, kind: ViolationKind::NotDominating });
        }
    }
    for (index, &m) in w.moves.iter().enumerate() {
        let cur = w.steps[index];
        let next = w.steps[index + 1];
        let legal = match m {
            Move::Add(v) => !cur.contains(v) && next == cur.with(v),
            Move::Remove(v) => cur.contains(v) && next == cur.without(v),
        };
        if !legal {
            return Err(WalkViolation { index, kind: ViolationKind::MoveMismatch });
        }
    }
    Ok(())
}

/// Jump-path analogue of [`verify_walk`]; with `slide` set, swapped vertices
/// must additionally be adjacent in `g`.
pub fn verify_jump_path(g: &Graph, p: &JumpPath, slide: bool) -> Result<(), WalkViolation> {
    if p.steps.is_empty() {
        return Err(WalkViolation { index: 0, kind: ViolationKind::Empty });
    }
    if p.moves.len() + 1 != p.steps.len() {
        return Err(WalkViolation { index: 0, kind: ViolationKind::MoveCountMismatch });
    }
    for (index, &s) in p.steps.iter().enumerate() {
        if !s.is_subset_of(g.vertices()) {
            return Err(WalkViolation { index, kind: ViolationKind::OutOfRange });
        }
        if s.card() != p.k {
            return Err(WalkViolation { index, kind: ViolationKind::CardinalityExceeded });
        }
        if !is_dominating(g, s) {
            return Err(WalkViolation { index, kind: ViolationKind::NotDominating });
        }
    }
    for (index, &(out, tin)) in p.moves.iter().enumerate() {
        let cur = p.steps[index];
        let next = p.steps[index + 1];
        let mut legal =
            cur.contains(out) && !cur.contains(tin) && next == cur.without(out).with(tin);
        if slide {
            legal = legal && g.has_edge(out, tin);
        }
        if !legal {
            return Err(WalkViolation { index, kind: ViolationKind::MoveMismatch });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyError {
    /// An input violates the strategy's stated requirements.
    Precondition(String),
    NotBipartite,
    NotChordal,
    /// A step the construction guarantees failed to materialize; never
    /// expected, always reported rather than looped on.
    ProofViolation(String),
}

impl fmt::Display for StrategyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            StrategyError::NotBipartite => write!(f, "graph is not bipartite"),
            StrategyError::NotChordal => write!(f, "graph is not chordal"),
            StrategyError::ProofViolation(msg) => write!(f, "internal proof violation: {msg}"),
        }
    }
}

impl std::error::Error for StrategyError {}

fn precondition(msg: impl Into<String>) -> StrategyError {
    StrategyError::Precondition(msg.into())
}

fn require_dominating(g: &Graph, s: VertexSet, name: &str) -> Result<(), StrategyError> {
    if !s.is_subset_of(g.vertices()) {
        return Err(precondition(format!("{name} is not a subset of the vertex set")));
    }
    if !is_dominating(g, s) {
        return Err(precondition(format!("{name} is not dominating")));
    }
    Ok(())
}

/// The walk from `b` down to a dominating subset `a`, removing the vertices
/// of `b \ a` in descending order; every intermediate set contains `a` and
/// therefore dominates. Reverse the result for the ascending direction.
pub fn walk_subset_chain(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    k: usize,
) -> Result<Walk, StrategyError> {
    require_dominating(g, a, "a")?;
    if !a.is_subset_of(b) {
        return Err(precondition("a must be a subset of b"));
    }
    if !b.is_subset_of(g.vertices()) {
        return Err(precondition("b is not a subset of the vertex set"));
    }
    if b.card() > k {
        return Err(precondition(format!("|b| = {} exceeds k = {k}", b.card())));
    }
    let mut builder = WalkBuilder::new(k, b);
    builder.descend_to(a);
    Ok(builder.finish())
}

/// Routes a dominating set `a` to a minimum dominating set `s` via the four
/// sets `a ⊇ a₁ ⊆ a₁ ∪ s ⊇ s`, where `a₁` is the minimal core of `a`. Works
/// at every level `k >= min(n-1, Γ+γ)` on graphs with two disjoint edges;
/// when `Γ+γ` exceeds `n-1` the route goes through near-full sets instead.
pub fn walk_gamma_union(
    g: &Graph,
    a: VertexSet,
    s: VertexSet,
    k: usize,
) -> Result<Walk, StrategyError> {
    require_dominating(g, a, "a")?;
    require_dominating(g, s, "s")?;
    if !g.has_two_disjoint_edges() {
        return Err(precondition("graph needs two disjoint edges"));
    }
    let gamma = domination_number(g);
    if s.card() != gamma {
        return Err(precondition(format!("s has cardinality {}, but gamma = {gamma}", s.card())));
    }
    if a.card() > k {
        return Err(precondition(format!("|a| = {} exceeds k = {k}", a.card())));
    }
    let profile = domination_profile(g);
    let bound = (g.n() - 1).min(profile.big_gamma + gamma);
    if k < bound {
        return Err(precondition(format!("k = {k} below the strategy bound {bound}")));
    }

    let core = minimal_subset(g, a);
    if profile.big_gamma + gamma > g.n() - 1 {
        // the union route would overshoot n-1; go through near-full sets
        let mut builder = WalkBuilder::new(k, a);
        builder.descend_to(core);
        let tail = walk_near_full(g, core, s)?;
        let mut walk = builder.finish().concat(tail);
        walk.k = k;
        return Ok(walk);
    }

    let mut builder = WalkBuilder::new(k, a);
    builder.descend_to(core);
    builder.ascend_to(core.union(s));
    builder.descend_to(s);
    Ok(builder.finish())
}

/// Connects two dominating sets of cardinality at most `n-1` inside the
/// level `n-1`, going through their union if it fits and otherwise through
/// complements of single vertices. Requires two independent edges.
pub fn walk_near_full(g: &Graph, s: VertexSet, t: VertexSet) -> Result<Walk, StrategyError> {
    require_dominating(g, s, "s")?;
    require_dominating(g, t, "t")?;
    if !g.has_two_disjoint_edges() {
        return Err(precondition("graph needs two disjoint edges"));
    }
    let n = g.n();
    let k = n - 1;
    if s.card() > k || t.card() > k {
        return Err(precondition(format!("endpoints must have cardinality at most {k}")));
    }
    if s == t {
        return Ok(Walk::trivial(k, s));
    }

    let mut builder = WalkBuilder::new(k, s);
    if s.union(t).card() <= k {
        builder.ascend_to(s.union(t));
        builder.descend_to(t);
        return Ok(builder.finish());
    }

    // the union is everything: lift both endpoints to complements of single
    // vertices and hand over between those
    let x = g.vertices().difference(s).min_elem().expect("s is not everything");
    let y = g.vertices().difference(t).min_elem().expect("t is not everything");
    debug_assert_ne!(x, y, "s ∪ t = V forces distinct missing vertices");
    builder.ascend_to(g.vertices().without(x));
    let mid = g.vertices().without(x).without(y);
    if is_dominating(g, mid) {
        builder.remove(y);
        builder.add(x);
    } else {
        // x and y must be adjacent with one of them pendant; detour through
        // an independent edge u-v disjoint from both
        let (u, _) = g
            .edges()
            .find(|&(u, v)| u != x && u != y && v != x && v != y)
            .ok_or_else(|| {
                StrategyError::ProofViolation(
                    "no edge disjoint from the failing pair despite two disjoint edges".into(),
                )
            })?;
        builder.remove(u);
        builder.add(x);
        builder.remove(y);
        builder.add(u);
    }
    builder.descend_to(t);
    Ok(builder.finish())
}

/// Walks a dominating set of cardinality at most `Γ+1` to the minimized
/// bipartition side (plus all isolated vertices) without ever exceeding
/// `Γ+1`: shrink to a minimal core, grow back to cardinality `Γ` preferring
/// missing small-side vertices, then repeatedly swap a replaceable big-side
/// vertex for a missing small-side one, and finally descend.
pub fn walk_bipartite(g: &Graph, s: VertexSet) -> Result<Walk, StrategyError> {
    let bip = bipartition_min_side(g).ok_or(StrategyError::NotBipartite)?;
    require_dominating(g, s, "s")?;
    let isolated = g.isolated_vertices();
    let target = bip.x.union(isolated);
    let big_gamma = domination_profile(g).big_gamma;
    let k = big_gamma + 1;
    if s.card() > k {
        return Err(precondition(format!("|s| = {} exceeds Γ+1 = {k}", s.card())));
    }

    let mut builder = WalkBuilder::new(k, s);
    let mut cur = minimal_subset(g, s);
    builder.descend_to(cur);

    // grow to cardinality exactly Γ, wanted small-side vertices first
    let mut filler: Vec<usize> = bip.x.difference(cur).iter().collect();
    filler.extend(g.vertices().difference(cur).difference(bip.x).iter());
    for v in filler {
        if cur.card() == big_gamma {
            break;
        }
        builder.add(v);
        cur.insert(v);
    }
    debug_assert_eq!(cur.card(), big_gamma);

    // isolated vertices sit in every dominating set and never swap out
    let swappable = bip.y.difference(isolated);
    let mut rounds = 0;
    while !bip.x.is_subset_of(cur) {
        rounds += 1;
        if rounds > g.n() {
            return Err(StrategyError::ProofViolation(
                "swap phase failed to make progress".into(),
            ));
        }
        let missing = bip.x.difference(cur);
        let covered = swappable.intersection(cur);
        // a big-side vertex with no neighbor among the missing small-side
        // vertices is already dominated by the small side and swaps freely
        let free = covered.iter().find(|&y| !g.neighbors(y).overlaps(missing));
        let (swap_out, swap_in) = match free {
            Some(y) => (y, missing.min_elem().expect("missing is nonempty")),
            None => forest_leaf_swap(g, missing, covered)?,
        };
        builder.add(swap_in);
        builder.remove(swap_out);
        cur = cur.with(swap_in).without(swap_out);
    }

    builder.descend_to(target);
    Ok(builder.finish())
}

/// Spanning-forest step of the bipartite strategy: in the subgraph induced
/// by `missing ∪ covered`, a forest leaf on the covered side always exists
/// (there are at least as many covered as missing vertices, so a spanning
/// forest cannot give them all degree two); swapping it for its unique
/// forest neighbor keeps the set dominating.
fn forest_leaf_swap(
    g: &Graph,
    missing: VertexSet,
    covered: VertexSet,
) -> Result<(usize, usize), StrategyError> {
    let members = missing.union(covered);
    let mut visited = VertexSet::EMPTY;
    let mut forest_degree = [0usize; 64];
    let mut forest_neighbor = [usize::MAX; 64];
    for root in members.iter() {
        if visited.contains(root) {
            continue;
        }
        visited.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).intersection(members).iter() {
                if !visited.contains(w) {
                    visited.insert(w);
                    forest_degree[u] += 1;
                    forest_degree[w] += 1;
                    forest_neighbor[u] = w;
                    forest_neighbor[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    covered
        .iter()
        .find(|&y| forest_degree[y] == 1)
        .map(|y| (y, forest_neighbor[y]))
        .ok_or_else(|| {
            StrategyError::ProofViolation("no forest leaf on the covered side".into())
        })
}

/// A walk produced by the chordal strategy plus the number of segments that
/// had to fall back to the oracle because a constructed step failed its
/// domination check (expected to stay zero).
#[derive(Clone, Debug)]
pub struct ChordalWalk {
    pub walk: Walk,
    pub oracle_fallbacks: usize,
}

/// Walks a dominating set of cardinality at most `Γ+1` to the canonical
/// independent set of the chordal certificate, never exceeding `Γ+1`.
pub fn walk_chordal(g: &Graph, a: VertexSet) -> Result<Walk, StrategyError> {
    walk_chordal_detailed(g, a).map(|out| out.walk)
}

pub fn walk_chordal_detailed(g: &Graph, a: VertexSet) -> Result<ChordalWalk, StrategyError> {
    let cs = chordal_structure(g).ok_or(StrategyError::NotChordal)?;
    require_dominating(g, a, "a")?;
    let k = cs.reps.len() + 1;
    if a.card() > k {
        return Err(precondition(format!("|a| = {} exceeds Γ+1 = {k}", a.card())));
    }
    let mut fallbacks = 0;
    let walk =
        chordal_walk_rec(g, g.vertices(), &cs.reps, &cs.cliques, a, &mut fallbacks)?;
    Ok(ChordalWalk { walk, oracle_fallbacks: fallbacks })
}

/// One level of the chordal recursion, restricted to the subgraph induced by
/// `active`. `reps`/`cliques` are the restriction of the cover to `active`.
/// Either some clique misses the minimal core entirely — then that clique
/// can be deleted, the smaller problem solved, and the result lifted by the
/// clique's representative — or every clique holds exactly one core vertex,
/// and rotating each clique's token onto its representative walks the core
/// to the representative set directly.
fn chordal_walk_rec(
    g: &Graph,
    active: VertexSet,
    reps: &[usize],
    cliques: &[VertexSet],
    a: VertexSet,
    fallbacks: &mut usize,
) -> Result<Walk, StrategyError> {
    let level_gamma = reps.len();
    let k = level_gamma + 1;
    let core = minimal_subset_within(g, active, a);
    if core.card() > level_gamma {
        return Err(StrategyError::ProofViolation(
            "minimal dominating set exceeds the clique cover size".into(),
        ));
    }
    let mut builder = WalkBuilder::new(k, a);
    builder.descend_to(core);

    if let Some(i) = (0..cliques.len()).position(|i| !cliques[i].overlaps(core)) {
        // the core avoids clique i: its representative dominates the clique
        // all by itself, so solve the graph without the clique and lift
        builder.add(reps[i]);
        let sub_active = active.difference(cliques[i]);
        let sub_reps: Vec<usize> =
            reps.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &r)| r).collect();
        let sub_cliques: Vec<VertexSet> =
            cliques.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &c)| c).collect();
        let sub_walk = chordal_walk_rec(g, sub_active, &sub_reps, &sub_cliques, core, fallbacks)?;
        // lift: replay the sub-walk's moves with the representative riding
        // along (it never occurs in them, living outside the sub-level)
        debug_assert_eq!(sub_walk.start(), core);
        for m in &sub_walk.moves {
            builder.apply(*m);
        }
        return Ok(builder.finish());
    }

    // every clique holds exactly one core token
    debug_assert_eq!(core.card(), level_gamma);
    let target: VertexSet = reps.iter().copied().collect();
    let mut cur = core;
    for (i, &rep) in reps.iter().enumerate() {
        let token = cliques[i].intersection(cur).min_elem().expect("one token per clique");
        if token == rep {
            continue;
        }
        let next = cur.with(rep).without(token);
        if is_dominating_within(g, active, next) {
            builder.add(rep);
            builder.remove(token);
            cur = next;
        } else {
            // the rotation failed its check: hand the rest of the level to
            // the oracle and record the gap
            *fallbacks += 1;
            let tail = oracle_walk_masked(g, active, cur, target, k).ok_or_else(|| {
                StrategyError::ProofViolation(
                    "token rotation failed and the oracle found no replacement walk".into(),
                )
            })?;
            builder.append_walk(&tail);
            cur = target;
            break;
        }
    }
    debug_assert_eq!(cur, target);
    Ok(builder.finish())
}

/// Rewrites a walk between two cardinality-`l` sets, valid at level `l+1`,
/// into one visiting only cardinalities `l` and `l+1` with the same
/// endpoints. Wherever the walk dips below `l`, the first vertex it later
/// re-adds is instead carried along from the start of the dip; each rewrite
/// strictly shrinks the number of below-`l` sets, so the loop terminates.
pub fn compress_walk(g: &Graph, w: &Walk, l: usize) -> Result<Walk, StrategyError> {
    let candidate = Walk { k: l + 1, steps: w.steps.clone(), moves: w.moves.clone() };
    verify_walk(g, &candidate)
        .map_err(|e| precondition(format!("walk is not valid at level l+1: {e}")))?;
    if candidate.start().card() != l || candidate.end().card() != l {
        return Err(precondition(format!("endpoints must have cardinality {l}")));
    }

    let mut steps = candidate.steps;
    loop {
        let below = steps.iter().filter(|s| s.card() < l).count();
        if below == 0 {
            break;
        }
        let p = steps.iter().position(|s| s.card() < l).expect("found above");
        let start = p - 1; // cardinality l, the step before the dip
        let j = (start..steps.len() - 1)
            .find(|&i| steps[i + 1].card() > steps[i].card())
            .expect("the walk climbs back to cardinality l");
        let x = steps[j + 1].difference(steps[j]).min_elem().expect("an addition");

        let mut rewritten: Vec<VertexSet> = steps[..=start].to_vec();
        rewritten.extend((start..j).map(|i| steps[i].with(x)));
        rewritten.extend_from_slice(&steps[j + 1..]);
        rewritten.dedup();
        let now_below = rewritten.iter().filter(|s| s.card() < l).count();
        if now_below >= below {
            return Err(StrategyError::ProofViolation(
                "dip rewrite failed to make progress".into(),
            ));
        }
        steps = rewritten;
    }

    let mut moves = Vec::with_capacity(steps.len() - 1);
    for pair in steps.windows(2) {
        let gone = pair[0].difference(pair[1]);
        let came = pair[1].difference(pair[0]);
        let mv = match (gone.min_elem(), came.min_elem()) {
            (Some(v), None) if gone.card() == 1 => Move::Remove(v),
            (None, Some(v)) if came.card() == 1 => Move::Add(v),
            _ => {
                return Err(StrategyError::ProofViolation(
                    "rewritten steps no longer differ by single moves".into(),
                ))
            }
        };
        moves.push(mv);
    }

    let out = Walk { k: l + 1, steps, moves };
    if out.len() > 2 * w.len() + 2 {
        eprintln!(
            "warning: compressed walk length {} exceeds the expected bound {}",
            out.len(),
            2 * w.len() + 2
        );
    }
    Ok(out)
}

/// Keeps the even positions of a cardinality-alternating walk, yielding the
/// jump path it encodes (consecutive duplicates collapse).
pub fn project_to_jump(g: &Graph, w: &Walk) -> Result<JumpPath, StrategyError> {
    let l = w.start().card();
    let candidate = Walk { k: l + 1, steps: w.steps.clone(), moves: w.moves.clone() };
    verify_walk(g, &candidate)
        .map_err(|e| precondition(format!("walk is not valid at level l+1: {e}")))?;
    if w.end().card() != l {
        return Err(precondition("endpoints must share one cardinality"));
    }
    if w.steps.iter().any(|s| s.card() < l) {
        return Err(precondition("walk must alternate cardinalities l and l+1; compress first"));
    }

    let mut steps: Vec<VertexSet> = w.steps.iter().copied().step_by(2).collect();
    steps.dedup();
    let mut moves = Vec::with_capacity(steps.len().saturating_sub(1));
    for pair in steps.windows(2) {
        let out = pair[0].difference(pair[1]).min_elem().expect("one vertex leaves");
        let tin = pair[1].difference(pair[0]).min_elem().expect("one vertex enters");
        moves.push((out, tin));
    }
    Ok(JumpPath { k: l, steps, moves })
}

/// Expands each jump `(out, in)` into an addition followed by a removal,
/// giving a walk one level up.
pub fn lift_from_jump(g: &Graph, p: &JumpPath) -> Result<Walk, StrategyError> {
    verify_jump_path(g, p, false)
        .map_err(|e| precondition(format!("jump path is not valid: {e}")))?;
    let mut builder = WalkBuilder::new(p.k + 1, p.start());
    for &(out, tin) in &p.moves {
        builder.add(tin);
        builder.remove(out);
    }
    Ok(builder.finish())
}

/// Shortest-walk search in the implicit reconfiguration graph at level `k`:
/// neighbors are generated by bit flips (or token moves) plus a domination
/// test, with no graph materialization. Returns `None` when the endpoints
/// lie in different components.
pub fn oracle_bfs(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    k: usize,
    rule: EdgeRule,
) -> Result<Option<Route>, StrategyError> {
    require_dominating(g, a, "a")?;
    require_dominating(g, b, "b")?;
    if k > g.n() {
        return Err(precondition(format!("k = {k} exceeds n = {}", g.n())));
    }
    match rule {
        EdgeRule::TokenAddRemove => {
            if a.card() > k || b.card() > k {
                return Err(precondition(format!("endpoints must have cardinality at most {k}")));
            }
            Ok(oracle_walk_masked(g, g.vertices(), a, b, k).map(Route::Walk))
        }
        EdgeRule::TokenJump | EdgeRule::TokenSlide => {
            if a.card() != k || b.card() != k {
                return Err(precondition(format!("endpoints must have cardinality exactly {k}")));
            }
            Ok(oracle_jump(g, a, b, k, rule == EdgeRule::TokenSlide).map(Route::Jump))
        }
    }
}

/// Add/remove BFS restricted to the subgraph induced by `active`.
fn oracle_walk_masked(
    g: &Graph,
    active: VertexSet,
    a: VertexSet,
    b: VertexSet,
    k: usize,
) -> Option<Walk> {
    debug_assert!(is_dominating_within(g, active, a));
    debug_assert!(is_dominating_within(g, active, b));
    if a == b {
        return Some(Walk::trivial(k, a));
    }
    let mut parent: HashMap<u64, (u64, Move)> = HashMap::new();
    parent.insert(a.bits(), (a.bits(), Move::Add(0))); // sentinel self-parent
    let mut queue = VecDeque::from([a]);
    'search: while let Some(cur) = queue.pop_front() {
        for v in active.iter() {
            let (cand, mv) = if cur.contains(v) {
                (cur.without(v), Move::Remove(v))
            } else {
                (cur.with(v), Move::Add(v))
            };
            if cand.card() > k || parent.contains_key(&cand.bits()) {
                continue;
            }
            // supersets of dominating sets dominate; only removals need the test
            if matches!(mv, Move::Remove(_)) && !is_dominating_within(g, active, cand) {
                continue;
            }
            parent.insert(cand.bits(), (cur.bits(), mv));
            if cand == b {
                break 'search;
            }
            queue.push_back(cand);
        }
    }

    parent.contains_key(&b.bits()).then(|| {
        let mut rev_moves = Vec::new();
        let mut at = b.bits();
        while at != a.bits() {
            let (prev, mv) = parent[&at];
            rev_moves.push(mv);
            at = prev;
        }
        let mut builder = WalkBuilder::new(k, a);
        for mv in rev_moves.into_iter().rev() {
            builder.apply(mv);
        }
        builder.finish()
    })
}

fn oracle_jump(g: &Graph, a: VertexSet, b: VertexSet, k: usize, slide: bool) -> Option<JumpPath> {
    if a == b {
        return Some(JumpPath::trivial(k, a));
    }
    let mut parent: HashMap<u64, (u64, (usize, usize))> = HashMap::new();
    parent.insert(a.bits(), (a.bits(), (0, 0)));
    let mut queue = VecDeque::from([a]);
    'search: while let Some(cur) = queue.pop_front() {
        for out in cur.iter() {
            let targets = if slide {
                g.neighbors(out).difference(cur)
            } else {
                g.vertices().difference(cur)
            };
            for tin in targets.iter() {
                let cand = cur.without(out).with(tin);
                if parent.contains_key(&cand.bits()) || !is_dominating(g, cand) {
                    continue;
                }
                parent.insert(cand.bits(), (cur.bits(), (out, tin)));
                if cand == b {
                    break 'search;
                }
                queue.push_back(cand);
            }
        }
    }

    parent.contains_key(&b.bits()).then(|| {
        let mut rev = Vec::new();
        let mut at = b.bits();
        while at != a.bits() {
            let (prev, jump) = parent[&at];
            rev.push(jump);
            at = prev;
        }
        let mut steps = vec![a];
        let mut moves = Vec::new();
        for (out, tin) in rev.into_iter().rev() {
            let next = steps.last().unwrap().without(out).with(tin);
            steps.push(next);
            moves.push((out, tin));
        }
        JumpPath { k, steps, moves }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteParseError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for RouteParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

impl std::error::Error for RouteParseError {}

/// Serializes a route, one set per line as an `n`-character 0/1 string
/// (vertex 0 leftmost), each step prefixed by its move annotation:
/// `+v`/`-v` for walks, `-s +t` for jump paths.
pub fn route_to_text(route: &Route, n: usize) -> String {
    let mut out = String::new();
    match route {
        Route::Walk(w) => {
            out.push_str(&w.steps[0].bitstring(n));
            out.push('\n');
            for (i, m) in w.moves.iter().enumerate() {
                match m {
                    Move::Add(v) => out.push_str(&format!("+{v} ")),
                    Move::Remove(v) => out.push_str(&format!("-{v} ")),
                }
                out.push_str(&w.steps[i + 1].bitstring(n));
                out.push('\n');
            }
        }
        Route::Jump(p) => {
            out.push_str(&p.steps[0].bitstring(n));
            out.push('\n');
            for (i, &(s, t)) in p.moves.iter().enumerate() {
                out.push_str(&format!("-{s} +{t} "));
                out.push_str(&p.steps[i + 1].bitstring(n));
                out.push('\n');
            }
        }
    }
    out
}

/// Parses the serialization produced by [`route_to_text`], returning the
/// route and the vertex count implied by the line width. Walk bounds are set
/// to the largest cardinality seen; callers may tighten or relax them.
pub fn route_from_text(text: &str) -> Result<(Route, usize), RouteParseError> {
    let err = |line: usize, reason: &str| RouteParseError { line, reason: reason.to_string() };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(err(1, "empty route"));
    };
    let (start, n) = VertexSet::parse_bitstring(first)
        .ok_or_else(|| err(first_no, "expected an 0/1 set string"))?;

    let mut steps = vec![start];
    let mut walk_moves: Vec<Move> = Vec::new();
    let mut jump_moves: Vec<(usize, usize)> = Vec::new();
    for &(line_no, line) in &lines[1..] {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_vertex = |tok: &str, sign: char| -> Result<usize, RouteParseError> {
            let rest = tok
                .strip_prefix(sign)
                .ok_or_else(|| err(line_no, "expected a move annotation like +3 or -1"))?;
            let v: usize =
                rest.parse().map_err(|_| err(line_no, "move annotation is not a vertex"))?;
            if v >= n {
                return Err(err(line_no, "move annotation names a vertex outside the set width"));
            }
            Ok(v)
        };
        let set_token = *tokens.last().ok_or_else(|| err(line_no, "missing set string"))?;
        let (set, width) = VertexSet::parse_bitstring(set_token)
            .ok_or_else(|| err(line_no, "expected an 0/1 set string"))?;
        if width != n {
            return Err(err(line_no, "set strings have inconsistent widths"));
        }
        match tokens.len() {
            2 => {
                if !jump_moves.is_empty() {
                    return Err(err(line_no, "walk move inside a jump path"));
                }
                let mv = match tokens[0].chars().next() {
                    Some('+') => Move::Add(parse_vertex(tokens[0], '+')?),
                    Some('-') => Move::Remove(parse_vertex(tokens[0], '-')?),
                    _ => return Err(err(line_no, "expected a move annotation like +3 or -1")),
                };
                walk_moves.push(mv);
            }
            3 => {
                if !walk_moves.is_empty() {
                    return Err(err(line_no, "jump move inside a walk"));
                }
                let out = parse_vertex(tokens[0], '-')?;
                let tin = parse_vertex(tokens[1], '+')?;
                jump_moves.push((out, tin));
            }
            _ => return Err(err(line_no, "expected `+v set`, `-v set`, or `-s +t set`")),
        }
        steps.push(set);
    }

    if !jump_moves.is_empty() {
        let k = steps[0].card();
        Ok((Route::Jump(JumpPath { k, steps, moves: jump_moves }), n))
    } else {
        let k = steps.iter().map(|s| s.card()).max().unwrap_or(0);
        Ok((Route::Walk(Walk { k, steps, moves: walk_moves }), n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::{build, connectivity};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn verify_accepts_trivial_and_flags_failures() {
        let star = Graph::star(3);
        let w = Walk::trivial(3, set(&[3]));
        assert!(verify_walk(&star, &w).is_ok());

        // non-dominating intermediate flagged at its index
        let bad = Walk {
            k: 3,
            steps: vec![set(&[3, 0]), set(&[0]), set(&[0, 1])],
            moves: vec![Move::Remove(3), Move::Add(1)],
        };
        assert_eq!(
            verify_walk(&star, &bad),
            Err(WalkViolation { index: 1, kind: ViolationKind::NotDominating })
        );

        let mismatched = Walk {
            k: 3,
            steps: vec![set(&[3]), set(&[3, 1])],
            moves: vec![Move::Add(2)],
        };
        assert_eq!(
            verify_walk(&star, &mismatched),
            Err(WalkViolation { index: 0, kind: ViolationKind::MoveMismatch })
        );

        let too_big = Walk { k: 0, steps: vec![set(&[3])], moves: vec![] };
        assert_eq!(
            verify_walk(&star, &too_big),
            Err(WalkViolation { index: 0, kind: ViolationKind::CardinalityExceeded })
        );
    }

    #[test]
    fn subset_chain_shapes() {
        let k3 = Graph::complete(3);
        let w = walk_subset_chain(&k3, set(&[0]), set(&[0, 1, 2]), 3).unwrap();
        assert_eq!(w.steps, vec![set(&[0, 1, 2]), set(&[0, 1]), set(&[0])]);
        assert!(verify_walk(&k3, &w).is_ok());

        // a = b degenerates to a single step
        let w = walk_subset_chain(&k3, set(&[0]), set(&[0]), 3).unwrap();
        assert_eq!(w.len(), 1);

        let star = Graph::star(3);
        let w = walk_subset_chain(&star, set(&[3]), star.vertices(), 4).unwrap();
        assert_eq!(w.len(), 4);
        assert!(verify_walk(&star, &w).is_ok());

        assert!(walk_subset_chain(&k3, set(&[1]), set(&[0, 2]), 3).is_err());
        assert!(walk_subset_chain(&k3, set(&[0]), set(&[0, 1, 2]), 2).is_err());
    }

    #[test]
    fn gamma_union_route_on_cycle() {
        let c4 = Graph::cycle(4);
        let w = walk_gamma_union(&c4, set(&[0, 1]), set(&[0, 2]), 4).unwrap();
        assert!(verify_walk(&c4, &w).is_ok());
        assert_eq!(w.start(), set(&[0, 1]));
        assert_eq!(w.end(), set(&[0, 2]));
        // never exceeds Γ + γ = 4
        assert!(w.max_card() <= 4);

        // degenerate: start at the target
        let w = walk_gamma_union(&c4, set(&[0, 2]), set(&[0, 2]), 4).unwrap();
        assert_eq!(w.len(), 1);

        // k below the bound is rejected
        assert!(matches!(
            walk_gamma_union(&c4, set(&[0, 1]), set(&[0, 2]), 2),
            Err(StrategyError::Precondition(_))
        ));
    }

    #[test]
    fn near_full_direct_and_detour() {
        let p4 = Graph::path(4);
        let s = set(&[1, 2, 3]);
        let t = set(&[0, 1, 2]);
        let w = walk_near_full(&p4, s, t).unwrap();
        assert!(verify_walk(&p4, &w).is_ok());
        // the middle set is exactly the shared interior
        assert_eq!(w.steps, vec![s, set(&[1, 2]), t]);

        assert_eq!(walk_near_full(&p4, s, s).unwrap().len(), 1);
    }

    #[test]
    fn near_full_pendant_pattern() {
        // two disjoint edges, vertex 0 pendant to 1: the complement pair
        // {0,1} fails the middle-set test and forces the detour
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = g.vertices().without(0);
        let t = g.vertices().without(1);
        let w = walk_near_full(&g, s, t).unwrap();
        assert!(verify_walk(&g, &w).is_ok());
        assert_eq!(w.len(), 5);
        assert_eq!(w.start(), s);
        assert_eq!(w.end(), t);
    }

    #[test]
    fn bipartite_walk_reaches_small_side() {
        let c4 = Graph::cycle(4);
        let bip = crate::bipartite::bipartition_min_side(&c4).unwrap();
        // start from the big side
        let w = walk_bipartite(&c4, bip.y).unwrap();
        assert!(verify_walk(&c4, &w).is_ok());
        assert_eq!(w.end(), bip.x);
        assert!(w.max_card() <= 3);

        // starting at the target still verifies and ends there
        let w = walk_bipartite(&c4, bip.x).unwrap();
        assert!(verify_walk(&c4, &w).is_ok());
        assert_eq!(w.end(), bip.x);

        assert!(matches!(walk_bipartite(&Graph::cycle(5), set(&[0, 2])), Err(StrategyError::NotBipartite)));
    }

    #[test]
    fn bipartite_walk_exhaustive_small() {
        use crate::domination::enumerate_dominating_sets;
        for n in 1..=5 {
            for g in crate::enumerate::enumerate_small_graphs(n, false).unwrap() {
                let Some(bip) = crate::bipartite::bipartition_min_side(&g) else { continue };
                let target = bip.x.union(g.isolated_vertices());
                let k = domination_profile(&g).big_gamma + 1;
                for s in enumerate_dominating_sets(&g, k.min(g.n())) {
                    let w = walk_bipartite(&g, s).unwrap();
                    assert!(verify_walk(&g, &w).is_ok(), "graph {g:?} start {s:?}");
                    assert_eq!(w.end(), target);
                    assert!(w.max_card() <= k);
                }
            }
        }
    }

    #[test]
    fn chordal_walk_on_complete_and_path() {
        let k4 = Graph::complete(4);
        let cs = chordal_structure(&k4).unwrap();
        let w = walk_chordal(&k4, set(&[1, 3])).unwrap();
        assert!(verify_walk(&k4, &w).is_ok());
        assert_eq!(w.end(), cs.independent_set);

        let p4 = Graph::path(4);
        let cs = chordal_structure(&p4).unwrap();
        let w = walk_chordal(&p4, set(&[1, 2])).unwrap();
        assert!(verify_walk(&p4, &w).is_ok());
        assert_eq!(w.end(), cs.independent_set);

        assert!(matches!(walk_chordal(&Graph::cycle(4), set(&[0, 2])), Err(StrategyError::NotChordal)));
    }

    #[test]
    fn chordal_walk_exhaustive_small() {
        use crate::domination::enumerate_dominating_sets;
        for n in 1..=5 {
            for g in crate::enumerate::enumerate_small_graphs(n, false).unwrap() {
                let Some(cs) = chordal_structure(&g) else { continue };
                let k = cs.reps.len() + 1;
                for a in enumerate_dominating_sets(&g, k.min(g.n())) {
                    let out = walk_chordal_detailed(&g, a).unwrap();
                    assert!(verify_walk(&g, &out.walk).is_ok(), "graph {g:?} start {a:?}");
                    assert_eq!(out.walk.end(), cs.independent_set);
                    assert_eq!(out.oracle_fallbacks, 0);
                    assert!(out.walk.max_card() <= k);
                }
            }
        }
    }

    #[test]
    fn compress_leaves_alternating_walks_alone() {
        let star = Graph::star(3);
        let w = Walk {
            k: 3,
            steps: vec![set(&[3, 0]), set(&[3, 0, 1]), set(&[3, 1])],
            moves: vec![Move::Add(1), Move::Remove(0)],
        };
        let out = compress_walk(&star, &w, 2).unwrap();
        assert_eq!(out.steps, w.steps);
    }

    #[test]
    fn compress_rewrites_shallow_dip() {
        // remove-then-add becomes add-then-remove
        let star4 = Graph::star(4);
        let c = 4;
        let w = Walk {
            k: 3,
            steps: vec![set(&[c, 0]), set(&[c]), set(&[c, 1])],
            moves: vec![Move::Remove(0), Move::Add(1)],
        };
        let out = compress_walk(&star4, &w, 2).unwrap();
        assert_eq!(out.steps, vec![set(&[c, 0]), set(&[c, 0, 1]), set(&[c, 1])]);
        assert!(verify_walk(&star4, &out).is_ok());
    }

    #[test]
    fn compress_rewrites_deep_dip() {
        // dips two below the top cardinality; two rewrite rounds needed
        let star4 = Graph::star(4);
        let c = 4;
        let w = Walk {
            k: 4,
            steps: vec![set(&[c, 0, 1]), set(&[c, 0]), set(&[c]), set(&[c, 2]), set(&[c, 2, 3])],
            moves: vec![Move::Remove(1), Move::Remove(0), Move::Add(2), Move::Add(3)],
        };
        let out = compress_walk(&star4, &w, 3).unwrap();
        assert!(verify_walk(&star4, &out).is_ok());
        assert_eq!(out.start(), w.start());
        assert_eq!(out.end(), w.end());
        assert!(out.steps.iter().all(|s| s.card() == 3 || s.card() == 4));
        assert_eq!(
            out.steps,
            vec![
                set(&[c, 0, 1]),
                set(&[c, 0, 1, 2]),
                set(&[c, 0, 2]),
                set(&[c, 0, 2, 3]),
                set(&[c, 2, 3]),
            ]
        );
    }

    #[test]
    fn projection_and_lift_are_inverse() {
        let star = Graph::star(3);
        // S, S ∪ {t}, (S \ {s}) ∪ {t} projects to the jump (s out, t in)
        let w = Walk {
            k: 3,
            steps: vec![set(&[3, 0]), set(&[3, 0, 1]), set(&[3, 1])],
            moves: vec![Move::Add(1), Move::Remove(0)],
        };
        let p = project_to_jump(&star, &w).unwrap();
        assert_eq!(p.steps, vec![set(&[3, 0]), set(&[3, 1])]);
        assert_eq!(p.moves, vec![(0, 1)]);
        assert!(verify_jump_path(&star, &p, false).is_ok());

        let lifted = lift_from_jump(&star, &p).unwrap();
        assert_eq!(lifted.steps, w.steps);
        let back = project_to_jump(&star, &lifted).unwrap();
        assert_eq!(back, p);

        // single-set round trip
        let w1 = Walk::trivial(2, set(&[3, 0]));
        let p1 = project_to_jump(&star, &w1).unwrap();
        assert_eq!(p1.len(), 1);
        assert_eq!(lift_from_jump(&star, &p1).unwrap().len(), 1);
    }

    #[test]
    fn oracle_respects_components() {
        let star = Graph::star(3);
        let leaves = set(&[0, 1, 2]);
        let center = set(&[3]);
        // level 3 separates the leaf set from everything else
        assert_eq!(oracle_bfs(&star, leaves, center, 3, EdgeRule::TokenAddRemove).unwrap(), None);
        // one level up they reconnect
        let route = oracle_bfs(&star, leaves, center, 4, EdgeRule::TokenAddRemove)
            .unwrap()
            .expect("connected at level 4");
        let Route::Walk(w) = route else { panic!("add-remove oracle returns walks") };
        assert!(verify_walk(&star, &w).is_ok());
        assert_eq!((w.start(), w.end()), (leaves, center));

        // identical endpoints give a single-set route
        let same = oracle_bfs(&star, center, center, 3, EdgeRule::TokenAddRemove).unwrap();
        assert!(matches!(same, Some(Route::Walk(w)) if w.len() == 1));
    }

    #[test]
    fn oracle_jump_routes_triangle() {
        let star = Graph::star(3);
        let route = oracle_bfs(&star, set(&[3, 0]), set(&[3, 2]), 2, EdgeRule::TokenJump)
            .unwrap()
            .expect("jump level 2 of the star is connected");
        let Route::Jump(p) = route else { panic!("jump oracle returns jump paths") };
        assert!(verify_jump_path(&star, &p, false).is_ok());
        assert_eq!(p.len(), 2);

        // slides must move along edges of the base graph
        let p4 = Graph::path(4);
        let route = oracle_bfs(&p4, set(&[0, 2]), set(&[1, 3]), 2, EdgeRule::TokenSlide)
            .unwrap()
            .expect("slide route exists");
        let Route::Jump(p) = route else { panic!() };
        assert!(verify_jump_path(&p4, &p, true).is_ok());
    }

    #[test]
    fn oracle_walks_in_star_component_project_to_jumps() {
        // walks between size-2 dominating sets of the star at level 3
        // compress and project to valid jump paths at level 2
        let star = Graph::star(3);
        let x2 = build(&star, EdgeRule::TokenJump, 2).unwrap();
        for &a in &x2.nodes {
            for &b in &x2.nodes {
                let Some(Route::Walk(w)) =
                    oracle_bfs(&star, a, b, 3, EdgeRule::TokenAddRemove).unwrap()
                else {
                    panic!("size-2 sets live in the principal component");
                };
                let compressed = compress_walk(&star, &w, 2).unwrap();
                let p = project_to_jump(&star, &compressed).unwrap();
                assert!(verify_jump_path(&star, &p, false).is_ok());
                assert_eq!((p.start(), p.end()), (a, b));
            }
        }
    }

    #[test]
    fn oracle_agrees_with_explicit_components() {
        let g = Graph::star(3);
        let rg = build(&g, EdgeRule::TokenAddRemove, 3).unwrap();
        let report = connectivity(&rg);
        for (i, &a) in rg.nodes.iter().enumerate() {
            for (j, &b) in rg.nodes.iter().enumerate() {
                let reachable = oracle_bfs(&g, a, b, 3, EdgeRule::TokenAddRemove)
                    .unwrap()
                    .is_some();
                assert_eq!(reachable, report.component_of[i] == report.component_of[j]);
            }
        }
    }

    #[test]
    fn route_serialization_roundtrip() {
        let star = Graph::star(3);
        let w = Walk {
            k: 3,
            steps: vec![set(&[3, 0]), set(&[3, 0, 1]), set(&[3, 1])],
            moves: vec![Move::Add(1), Move::Remove(0)],
        };
        let text = route_to_text(&Route::Walk(w.clone()), 4);
        assert_eq!(text, "1001\n+1 1101\n-0 0101\n");
        let (parsed, n) = route_from_text(&text).unwrap();
        assert_eq!(n, 4);
        let Route::Walk(back) = parsed else { panic!("expected a walk") };
        assert_eq!(back.steps, w.steps);
        assert_eq!(back.moves, w.moves);

        let p = JumpPath { k: 2, steps: vec![set(&[3, 0]), set(&[3, 1])], moves: vec![(0, 1)] };
        let text = route_to_text(&Route::Jump(p.clone()), 4);
        assert_eq!(text, "1001\n-0 +1 0101\n");
        let (parsed, _) = route_from_text(&text).unwrap();
        assert_eq!(parsed, Route::Jump(p));

        assert!(route_from_text("").is_err());
        assert!(route_from_text("1001\n+9 1001").is_err());
        assert!(route_from_text("1001\nx1 0001").is_err());
        assert!(route_from_text("1001\n+1 11011").is_err());
    }
}
