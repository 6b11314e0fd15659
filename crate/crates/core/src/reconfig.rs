//! Explicit reconfiguration graphs over dominating sets.
//!
//! Under the add/remove rule the level-`k` graph `D_k(G)` holds every
//! dominating set of cardinality at most `k`; under the jump and slide rules
//! `X_k(G)` holds exactly the sets of cardinality `k`. Edges are generated by
//! flipping one bit (or moving one token) per node and testing membership in
//! a hash index, never by all-pairs comparison.

use crate::domination::{domination_number, domination_profile, enumerate_dominating_sets};
use crate::format::encode_graph6;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeRule {
    /// Sets adjacent iff they differ by adding or deleting a single vertex.
    TokenAddRemove,
    /// Equal-cardinality sets adjacent iff one vertex is swapped for another.
    TokenJump,
    /// Token jump restricted to swaps along an edge of the base graph.
    TokenSlide,
}

impl EdgeRule {
    /// The pair predicate the rule induces (domination of both sides is
    /// assumed; this only checks the move shape).
    pub fn admits(self, g: &Graph, a: VertexSet, b: VertexSet) -> bool {
        match self {
            EdgeRule::TokenAddRemove => a.symmetric_difference(b).card() == 1,
            EdgeRule::TokenJump => {
                a.card() == b.card() && a.difference(b).card() == 1 && b.difference(a).card() == 1
            }
            EdgeRule::TokenSlide => {
                if !EdgeRule::TokenJump.admits(g, a, b) {
                    return false;
                }
                let s = a.difference(b).min_elem().expect("one vertex out");
                let t = b.difference(a).min_elem().expect("one vertex in");
                g.has_edge(s, t)
            }
        }
    }
}

impl fmt::Display for EdgeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeRule::TokenAddRemove => write!(f, "add-remove"),
            EdgeRule::TokenJump => write!(f, "jump"),
            EdgeRule::TokenSlide => write!(f, "slide"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    KOutOfRange { k: usize, n: usize },
    KBelowGamma { k: usize, gamma: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::KOutOfRange { k, n } => write!(f, "k = {k} out of range for n = {n}"),
            BuildError::KBelowGamma { k, gamma } => {
                write!(f, "no dominating set of cardinality <= {k} exists (gamma = {gamma})")
            }
        }
    }
}

impl std::error::Error for BuildError {}

/// A materialized reconfiguration graph. Nodes are sorted ascending as n-bit
/// integers; adjacency lists hold node indices, sorted.
#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    pub rule: EdgeRule,
    pub k: usize,
    pub nodes: Vec<VertexSet>,
    pub adjacency: Vec<Vec<usize>>,
    pub base: Graph,
}

impl ReconfigGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn node_index(&self, s: VertexSet) -> Option<usize> {
        self.nodes.binary_search_by_key(&s.bits(), |t| t.bits()).ok()
    }

    /// The reconfiguration graph itself as a [`Graph`], for isomorphism
    /// checks; fails if it has more than 64 nodes.
    pub fn to_graph(&self) -> Result<Graph, crate::graph::GraphError> {
        let mut g = Graph::empty(self.nodes.len())?;
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if j > i {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

/// Materializes the reconfiguration graph of `g` at level `k`.
pub fn build(g: &Graph, rule: EdgeRule, k: usize) -> Result<ReconfigGraph, BuildError> {
    let n = g.n();
    if k > n {
        return Err(BuildError::KOutOfRange { k, n });
    }
    let mut nodes = enumerate_dominating_sets(g, k);
    match rule {
        EdgeRule::TokenAddRemove => {
            if nodes.is_empty() {
                return Err(BuildError::KBelowGamma { k, gamma: domination_number(g) });
            }
        }
        EdgeRule::TokenJump | EdgeRule::TokenSlide => {
            nodes.retain(|s| s.card() == k);
        }
    }

    let index: HashMap<u64, usize> =
        nodes.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for (i, &s) in nodes.iter().enumerate() {
        let push_candidate = |cand: VertexSet, adjacency: &mut Vec<Vec<usize>>| {
            if let Some(&j) = index.get(&cand.bits()) {
                if j > i {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        };
        match rule {
            EdgeRule::TokenAddRemove => {
                for v in 0..n {
                    let cand = if s.contains(v) { s.without(v) } else { s.with(v) };
                    if cand.card() <= k {
                        push_candidate(cand, &mut adjacency);
                    }
                }
            }
            EdgeRule::TokenJump => {
                for out in s.iter() {
                    for tin in g.vertices().difference(s).iter() {
                        push_candidate(s.without(out).with(tin), &mut adjacency);
                    }
                }
            }
            EdgeRule::TokenSlide => {
                for out in s.iter() {
                    for tin in g.neighbors(out).difference(s).iter() {
                        push_candidate(s.without(out).with(tin), &mut adjacency);
                    }
                }
            }
        }
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
        nbrs.dedup();
    }

    Ok(ReconfigGraph { rule, k, nodes, adjacency, base: g.clone() })
}

/// Connected components of a reconfiguration graph. Component ids are
/// assigned in order of each component's smallest node index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub component_count: usize,
    pub component_of: Vec<usize>,
    pub component_sizes: Vec<usize>,
    pub isolated_nodes: Vec<VertexSet>,
}

impl ConnectivityReport {
    /// Empty graphs count as connected (vacuously).
    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }
}

pub fn connectivity(rg: &ReconfigGraph) -> ConnectivityReport {
    let n = rg.nodes.len();
    let mut component_of = vec![usize::MAX; n];
    let mut component_sizes = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = component_sizes.len();
        let mut stack = vec![start];
        component_of[start] = id;
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in &rg.adjacency[u] {
                if component_of[v] == usize::MAX {
                    component_of[v] = id;
                    stack.push(v);
                }
            }
        }
        component_sizes.push(size);
    }
    let isolated_nodes = (0..n)
        .filter(|&i| rg.adjacency[i].is_empty())
        .map(|i| rg.nodes[i])
        .collect();
    ConnectivityReport {
        component_count: component_sizes.len(),
        component_of,
        component_sizes,
        isolated_nodes,
    }
}

/// Diameter of each component (longest shortest path, in component-id
/// order). Reported as a statistic only.
pub fn component_diameters(rg: &ReconfigGraph, report: &ConnectivityReport) -> Vec<usize> {
    let n = rg.nodes.len();
    let mut diameters = vec![0usize; report.component_count];
    let mut dist = vec![usize::MAX; n];
    for start in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut far = 0;
        while let Some(u) = queue.pop_front() {
            far = dist[u];
            for &v in &rg.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        let id = report.component_of[start];
        diameters[id] = diameters[id].max(far);
    }
    diameters
}

/// The least `d` such that `D_k` is connected for every `k` with
/// `d <= k <= n`, found by descending from `k = n` to the first disconnected
/// level. Connectivity is not monotone at or below Γ, so every level is
/// tested explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D0Result {
    pub value: usize,
    /// Set when the graph has no edges: the only level with any nodes is
    /// `k = n`, and `n` is returned by convention.
    pub edgeless: bool,
}

pub fn d0(g: &Graph) -> D0Result {
    if g.edge_count() == 0 {
        return D0Result { value: g.n(), edgeless: true };
    }
    let gamma = domination_number(g);
    let mut value = gamma;
    for k in (gamma..=g.n()).rev() {
        let rg = build(g, EdgeRule::TokenAddRemove, k).expect("k in range");
        if !connectivity(&rg).is_connected() {
            value = k + 1;
            break;
        }
    }
    D0Result { value, edgeless: false }
}

/// Checks `Γ + 1 <= d0 <= min(n - 1, Γ + γ)`, which holds whenever the graph
/// has two disjoint edges. A violated hypothesis is reported, not raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub gamma: usize,
    pub big_gamma: usize,
    pub d0: usize,
    pub hypothesis_met: bool,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl BoundsReport {
    pub fn all_ok(&self) -> bool {
        self.hypothesis_met && self.lower_ok && self.upper_ok
    }
}

pub fn check_bounds(g: &Graph) -> BoundsReport {
    let profile = domination_profile(g);
    let d0 = d0(g).value;
    let upper = (g.n() - 1).min(profile.big_gamma + profile.gamma);
    BoundsReport {
        gamma: profile.gamma,
        big_gamma: profile.big_gamma,
        d0,
        hypothesis_met: g.has_two_disjoint_edges(),
        lower_ok: d0 > profile.big_gamma,
        upper_ok: d0 <= upper,
    }
}

/// One scanned graph: the parameters and whether `D_{Γ+1}` came out
/// connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub graph6: String,
    pub gamma: usize,
    pub big_gamma: usize,
    pub d0: usize,
    pub ok: bool,
}

/// Witness of a disconnected `D_{Γ+1}`: the node sets of one component other
/// than the one holding the smallest node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub big_gamma: usize,
    pub component: Vec<VertexSet>,
}

#[derive(Clone, Debug, Default)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub counterexamples: Vec<Counterexample>,
}

/// Scans one graph (at least one edge required).
pub fn scan_graph(g: &Graph) -> (ScanRecord, Option<Counterexample>) {
    debug_assert!(g.edge_count() >= 1);
    let profile = domination_profile(g);
    let d0 = d0(g).value;
    let graph6 = encode_graph6(g);
    let ok = d0 <= profile.big_gamma + 1;
    let counterexample = if ok {
        None
    } else {
        let rg = build(g, EdgeRule::TokenAddRemove, profile.big_gamma + 1).expect("k in range");
        let report = connectivity(&rg);
        let other = report.component_of.iter().position(|&c| c != 0).expect("disconnected");
        let id = report.component_of[other];
        let component = (0..rg.nodes.len())
            .filter(|&i| report.component_of[i] == id)
            .map(|i| rg.nodes[i])
            .collect();
        Some(Counterexample { graph6: graph6.clone(), big_gamma: profile.big_gamma, component })
    };
    let record = ScanRecord { graph6, gamma: profile.gamma, big_gamma: profile.big_gamma, d0, ok };
    (record, counterexample)
}

/// Scans a batch of graphs, distributing whole graphs across `workers`
/// threads; results merge deterministically in input order.
pub fn scan_conjecture(graphs: &[Graph], workers: usize) -> ScanOutcome {
    let mut slots: Vec<Option<(ScanRecord, Option<Counterexample>)>> = Vec::new();
    if workers <= 1 || graphs.len() < 2 {
        slots.extend(graphs.iter().map(|g| Some(scan_graph(g))));
    } else {
        slots.resize_with(graphs.len(), || None);
        let next = AtomicUsize::new(0);
        let slots_mutex = Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..workers.min(graphs.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= graphs.len() {
                        break;
                    }
                    let result = scan_graph(&graphs[i]);
                    slots_mutex.lock().expect("scan worker panicked")[i] = Some(result);
                });
            }
        });
    }
    let mut outcome = ScanOutcome::default();
    for slot in slots {
        let (record, counterexample) = slot.expect("every graph scanned");
        outcome.records.push(record);
        outcome.counterexamples.extend(counterexample);
    }
    outcome
}

/// DOT rendering with 0/1-string node labels (vertex 0 leftmost) and stable
/// node ordering.
pub fn to_dot(rg: &ReconfigGraph) -> String {
    let n = rg.base.n();
    let mut out = String::from("graph reconfig {\n");
    for (i, s) in rg.nodes.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", s.bitstring(n)));
    }
    for (i, nbrs) in rg.adjacency.iter().enumerate() {
        for &j in nbrs {
            if j > i {
                out.push_str(&format!("  n{i} -- n{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckpointError {
    pub line: usize,
}

impl fmt::Display for CheckpointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "corrupt checkpoint at line {}", self.line)
    }
}

impl std::error::Error for CheckpointError {}

/// One checkpoint line per processed graph.
pub fn checkpoint_line(r: &ScanRecord) -> String {
    format!(
        "{} {} {} {} {}",
        r.graph6,
        r.gamma,
        r.big_gamma,
        r.d0,
        if r.ok { "ok" } else { "COUNTEREXAMPLE" }
    )
}

pub fn parse_checkpoint(text: &str) -> Result<Vec<ScanRecord>, CheckpointError> {
    let mut records = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let corrupt = || CheckpointError { line: idx + 1 };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(corrupt());
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| corrupt());
        let ok = match fields[4] {
            "ok" => true,
            "COUNTEREXAMPLE" => false,
            _ => return Err(corrupt()),
        };
        records.push(ScanRecord {
            graph6: fields[0].to_string(),
            gamma: parse(fields[1])?,
            big_gamma: parse(fields[2])?,
            d0: parse(fields[3])?,
            ok,
        });
    }
    Ok(records)
}
