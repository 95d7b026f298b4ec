//! Connected relations and complete sets of connected relations.
//!
//! A connected relation is a non-empty union of circled trees; it has a
//! unique strongly connected sink component. A complete set of connected
//! relations is a family whose sinks partition the node set and whose parts
//! agree on shared structure: condition (a) is the partition, condition (b)
//! matches each part's contraction against the others along everything
//! flowing into each sink, and condition (c) forbids a path into one sink
//! from reappearing in another part when a branch point splits off earlier.
//!
//! Complete sets form a join semilattice; the join is computed by repeated
//! graph unions plus cycle tracking, merging sink blocks whenever a cycle
//! escapes the current sinks.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::digraph::{node_set_vec, Digraph, NodeSet, Path};
use crate::error::{Error, Result};

/// Connected relation: digraph plus its unique sink component and the
/// induced subgraph on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectedRelation {
    graph: Digraph,
    sink: NodeSet,
    sink_subgraph: Digraph,
}

fn connected_relation_cache() -> &'static Mutex<HashMap<(usize, u128), bool>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u128), bool>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn is_connected_relation_cached(g: &Digraph) -> Result<bool> {
    let key = (g.n(), g.edge_mask());
    if let Some(&hit) = connected_relation_cache().lock().unwrap().get(&key) {
        return Ok(hit);
    }
    let ans = g.is_connected_relation()?;
    connected_relation_cache().lock().unwrap().insert(key, ans);
    Ok(ans)
}

impl ConnectedRelation {
    pub fn new(graph: Digraph) -> Result<Self> {
        if !is_connected_relation_cached(&graph)? {
            return Err(Error::NotConnectedRelation(format!(
                "graph with edges {:?} is not a union of circled trees",
                graph.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>()
            )));
        }
        let sinks = graph.sink_components();
        debug_assert_eq!(sinks.len(), 1, "connected relation must have a unique sink");
        let sink = sinks[0];
        Ok(ConnectedRelation {
            graph,
            sink,
            sink_subgraph: graph.induced(sink),
        })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn sink(&self) -> NodeSet {
        self.sink
    }

    pub fn sink_nodes(&self) -> Vec<usize> {
        node_set_vec(self.sink)
    }

    pub fn min_sink_node(&self) -> usize {
        self.sink.trailing_zeros() as usize
    }

    /// Induced subgraph on the sink.
    pub fn sink_subgraph(&self) -> &Digraph {
        &self.sink_subgraph
    }

    pub fn sink_has_edge(&self) -> bool {
        !self.sink_subgraph.is_edgeless()
    }
}

/// Which clause of the completeness definition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A part is not a connected relation at all.
    Part { index: usize, reason: String },
    /// (a): the sinks do not partition the node set.
    SinksNotPartition { detail: String },
    /// (b): a rooted contraction subgraph disagrees with the induced one.
    Contraction {
        i: usize,
        j: usize,
        only_in_rooted: Vec<(usize, usize)>,
        only_in_induced: Vec<(usize, usize)>,
    },
    /// (c): a path into one sink reappears in another part although a
    /// branch to that sink splits off it.
    Triple {
        u: usize,
        v: usize,
        w: usize,
        path: Path,
        branch: Path,
    },
}

impl Violation {
    pub fn clause(&self) -> char {
        match self {
            Violation::Part { .. } => '-',
            Violation::SinksNotPartition { .. } => 'a',
            Violation::Contraction { .. } => 'b',
            Violation::Triple { .. } => 'c',
        }
    }
}

fn fmt_nodes_1based(path: &[usize]) -> String {
    path.iter().map(|u| (u + 1).to_string()).collect::<Vec<_>>().join("->")
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Part { index, reason } => write!(f, "part {}: {}", index + 1, reason),
            Violation::SinksNotPartition { detail } => {
                write!(f, "condition (a) violated: {detail}")
            }
            Violation::Contraction { i, j, only_in_rooted, only_in_induced } => {
                let fmt_edges = |es: &[(usize, usize)]| {
                    es.iter()
                        .map(|&(u, v)| format!("{}->{}", u + 1, v + 1))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                write!(
                    f,
                    "condition (b) violated for parts ({}, {}): rooted-only edges [{}], induced-only edges [{}]",
                    i + 1,
                    j + 1,
                    fmt_edges(only_in_rooted),
                    fmt_edges(only_in_induced)
                )
            }
            Violation::Triple { u, v, w, path, branch } => write!(
                f,
                "condition (c) violated for nodes (u={}, v={}, w={}): path {} is shared but branch {} splits off",
                u + 1,
                v + 1,
                w + 1,
                fmt_nodes_1based(path),
                fmt_nodes_1based(branch)
            ),
        }
    }
}

/// Complete set of connected relations, parts ordered by minimum sink node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompleteSet {
    n: usize,
    parts: Vec<ConnectedRelation>,
    owner: Vec<usize>,
}

impl CompleteSet {
    /// Validate parts against conditions (a), (b), (c) and assemble.
    pub fn validate(n: usize, part_graphs: Vec<Digraph>) -> std::result::Result<CompleteSet, Violation> {
        let mut parts = Vec::with_capacity(part_graphs.len());
        for (index, g) in part_graphs.into_iter().enumerate() {
            if g.n() != n {
                return Err(Violation::Part {
                    index,
                    reason: format!("graph is on {} nodes, expected {}", g.n(), n),
                });
            }
            match ConnectedRelation::new(g) {
                Ok(cr) => parts.push(cr),
                Err(e) => {
                    return Err(Violation::Part {
                        index,
                        reason: e.to_string(),
                    })
                }
            }
        }

        // (a) sinks partition the node set.
        let mut cover: NodeSet = 0;
        for p in &parts {
            if cover & p.sink != 0 {
                return Err(Violation::SinksNotPartition {
                    detail: format!(
                        "sink {{{}}} overlaps another sink",
                        p.sink_nodes().iter().map(|u| (u + 1).to_string()).collect::<Vec<_>>().join(",")
                    ),
                });
            }
            cover |= p.sink;
        }
        if cover != (1 << n) - 1 {
            let missing: Vec<String> =
                (0..n).filter(|u| cover & (1 << u) == 0).map(|u| (u + 1).to_string()).collect();
            return Err(Violation::SinksNotPartition {
                detail: format!("missing a part whose sink covers {{{}}}", missing.join(",")),
            });
        }

        parts.sort_by_key(|p| p.min_sink_node());
        let mut owner = vec![0usize; n];
        for (idx, p) in parts.iter().enumerate() {
            for u in p.sink_nodes() {
                owner[u] = idx;
            }
        }
        let cs = CompleteSet { n, parts, owner };
        cs.check_contractions()?;
        cs.check_triples()?;
        Ok(cs)
    }

    /// Condition (b). Contract every part by the common sink partition,
    /// keeping within-block edges as loop arcs. For each ordered pair
    /// (i, j), the arcs of part j's contraction that flow into block i must
    /// coincide with part i's arcs induced on the blocks they touch.
    fn check_contractions(&self) -> std::result::Result<(), Violation> {
        let blocks: Vec<NodeSet> = self.parts.iter().map(|p| p.sink).collect();
        let contractions: Vec<_> = self
            .parts
            .iter()
            .map(|p| p.graph.contraction(&blocks, true).expect("sinks partition the nodes"))
            .collect();
        for i in 0..self.parts.len() {
            for (j, cj) in contractions.iter().enumerate() {
                let rooted = cj.rooted_arcs(i);
                let mut touched: Vec<bool> = vec![false; blocks.len()];
                touched[i] = true;
                for a in &rooted {
                    touched[a.src_block] = true;
                    touched[a.tgt_block] = true;
                }
                let induced: Vec<_> = contractions[i]
                    .arcs
                    .iter()
                    .filter(|a| touched[a.src_block] && touched[a.tgt_block])
                    .map(|a| a.edge)
                    .collect();
                let rooted_edges: Vec<_> = rooted.iter().map(|a| a.edge).collect();
                let only_in_rooted: Vec<_> =
                    rooted_edges.iter().copied().filter(|e| !induced.contains(e)).collect();
                let only_in_induced: Vec<_> =
                    induced.iter().copied().filter(|e| !rooted_edges.contains(e)).collect();
                if !only_in_rooted.is_empty() || !only_in_induced.is_empty() {
                    return Err(Violation::Contraction {
                        i,
                        j,
                        only_in_rooted,
                        only_in_induced,
                    });
                }
            }
        }
        Ok(())
    }

    /// Condition (c), for nodes u, v in different sinks: if some path
    /// `w -> v` inside v's part also appears in u's part, then every path
    /// `w -> u` inside v's part must be a prefix of it.
    fn check_triples(&self) -> std::result::Result<(), Violation> {
        match self.find_triple_violation() {
            Some(t) => Err(t),
            None => Ok(()),
        }
    }

    fn find_triple_violation(&self) -> Option<Violation> {
        let n = self.n;
        for v in 0..n {
            let part_v = &self.parts[self.owner[v]].graph;
            for u in 0..n {
                if u == v || self.owner[u] == self.owner[v] {
                    continue;
                }
                let part_u = &self.parts[self.owner[u]].graph;
                for w in 0..n {
                    if w == u || w == v {
                        continue;
                    }
                    let branches = part_v.simple_paths(w, u);
                    if branches.is_empty() {
                        continue;
                    }
                    for path in part_v.simple_paths(w, v) {
                        if !part_u.contains_path(&path) {
                            continue;
                        }
                        for branch in &branches {
                            if !path.starts_with(branch) {
                                return Some(Violation::Triple {
                                    u,
                                    v,
                                    w,
                                    path,
                                    branch: branch.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[ConnectedRelation] {
        &self.parts
    }

    /// The part whose sink contains `u`.
    pub fn part_of(&self, u: usize) -> &ConnectedRelation {
        &self.parts[self.owner[u]]
    }

    pub fn owner(&self, u: usize) -> usize {
        self.owner[u]
    }

    pub fn sink_partition(&self) -> Vec<NodeSet> {
        self.parts.iter().map(|p| p.sink).collect()
    }

    /// Sink sizes in decreasing order.
    pub fn sink_size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> =
            self.parts.iter().map(|p| p.sink.count_ones() as usize).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Split into the parts whose sinks carry at least one edge and the
    /// parts whose sinks are bare singletons.
    pub fn decompose(&self) -> (CompatibleSet, Vec<ConnectedRelation>) {
        let mut d = Vec::new();
        let mut e = Vec::new();
        for p in &self.parts {
            if p.sink_has_edge() {
                d.push(*p);
            } else {
                e.push(*p);
            }
        }
        (CompatibleSet { n: self.n, parts: d }, e)
    }

    /// True when the edged-sink half is a single connected function and each
    /// part is a minimal circled tree (n edges) sharing that function's
    /// cycle. These are exactly the join-irreducibles.
    pub fn is_complete_connected_function(&self) -> bool {
        let (d, _) = self.decompose();
        if d.parts.len() != 1 {
            return false;
        }
        let dg = d.parts[0].graph();
        if (0..self.n).any(|u| dg.out_degree(u) != 1) {
            return false;
        }
        let cycle = match dg.canonical_cycle() {
            Some(c) => c,
            None => return false,
        };
        self.parts.iter().all(|p| {
            p.graph.edge_count() == self.n
                && p.graph.simple_cycles().len() == 1
                && p.graph.contains_cycle(&cycle)
        })
    }

    /// All simple cycles inside sink subgraphs (the critical cycles).
    pub fn sink_cycles(&self) -> Vec<Path> {
        let mut cycles = Vec::new();
        for p in &self.parts {
            cycles.extend(p.sink_subgraph.simple_cycles());
        }
        cycles
    }

    /// Canonical reference cycle: the canonical cycle of the edged sink with
    /// the smallest node.
    pub fn reference_cycle(&self) -> Path {
        self.parts
            .iter()
            .filter(|p| p.sink_has_edge())
            .filter_map(|p| p.sink_subgraph.canonical_cycle())
            .min_by_key(|c| (c.len(), c.clone()))
            .expect("a complete set always has a critical cycle")
    }

    pub fn canonical_key(&self) -> (usize, Vec<u128>) {
        (self.n, self.parts.iter().map(|p| p.graph.edge_mask()).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<CompleteSet> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Relabel nodes by a permutation (`u` becomes `perm[u]`).
    pub fn relabel(&self, perm: &[usize]) -> CompleteSet {
        let parts = self.parts.iter().map(|p| p.graph.relabel(perm)).collect();
        CompleteSet::validate(self.n, parts).expect("relabeling preserves completeness")
    }
}

#[derive(Serialize, Deserialize)]
struct PartJson {
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct CompleteSetJson {
    n: usize,
    parts: Vec<PartJson>,
}

impl Serialize for CompleteSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let parts = self
            .parts
            .iter()
            .map(|p| PartJson {
                edges: p.graph.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
            })
            .collect();
        CompleteSetJson { n: self.n, parts }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CompleteSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = CompleteSetJson::deserialize(de)?;
        let graphs = raw
            .parts
            .iter()
            .map(|p| {
                let edges: Vec<(usize, usize)> = p
                    .edges
                    .iter()
                    .map(|&(u, v)| {
                        if u == 0 || v == 0 {
                            Err(D::Error::custom("nodes are 1-based"))
                        } else {
                            Ok((u - 1, v - 1))
                        }
                    })
                    .collect::<std::result::Result<_, _>>()?;
                Digraph::with_edges(raw.n, &edges).map_err(|e| D::Error::custom(e.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CompleteSet::validate(raw.n, graphs).map_err(|v| D::Error::custom(v.to_string()))
    }
}

/// The edged-sink half of a decomposition: the parts carrying critical
/// cycles. Indexes cones of linearity of the eigenvector map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompatibleSet {
    pub n: usize,
    pub parts: Vec<ConnectedRelation>,
}

/// Partial order: `g <= h` iff for every target v, the edges on paths
/// `u -> v` (and on cycles through v, for u = v) in g's part of v all appear
/// in h's part of v.
pub fn leq(g: &CompleteSet, h: &CompleteSet) -> bool {
    assert_eq!(g.n(), h.n());
    let n = g.n();
    for v in 0..n {
        let gv = g.part_of(v).graph();
        let hv = h.part_of(v).graph();
        for u in 0..n {
            if u == v {
                for cyc in gv.cycles_through(v) {
                    if !hv.contains_cycle(&cyc) {
                        return false;
                    }
                }
            } else if !gv.path_union(u, v).is_subgraph_of(hv) {
                return false;
            }
        }
    }
    true
}

/// Join of two complete sets: iterated graph union over the common
/// coarsening of the sink partitions, pulling every discovered cycle into
/// all parts and merging the blocks it touches, until no cycle escapes the
/// sinks and no triple condition fires.
pub fn join(g: &CompleteSet, h: &CompleteSet) -> CompleteSet {
    assert_eq!(g.n(), h.n());
    let n = g.n();
    let mut lambda = common_coarsening(n, &g.sink_partition(), &h.sink_partition());
    let mut pulled = Digraph::new(n);

    for _round in 0..=n * n + 1 {
        // Step 1: per block, union of both owners' parts over the block,
        // plus everything pulled in so far.
        let parts: Vec<Digraph> = lambda
            .iter()
            .map(|&block| {
                let mut acc = pulled;
                for u in node_set_vec(block) {
                    acc = acc.union(g.part_of(u).graph()).union(h.part_of(u).graph());
                }
                acc
            })
            .collect();

        // Sink subgraphs of the candidate parts (union over sink components,
        // which is the unique sink once the iteration settles).
        let sink_subgraphs: Vec<Digraph> = parts
            .iter()
            .map(|p| {
                let mut s = Digraph::new(n);
                for comp in p.sink_components() {
                    s = s.union(&p.induced(comp));
                }
                s
            })
            .collect();

        // Step 2: cycles not inside any sink subgraph force merges.
        let mut new_cycles: Vec<Path> = Vec::new();
        for part in &parts {
            for cyc in part.simple_cycles() {
                if !sink_subgraphs.iter().any(|s| s.contains_cycle(&cyc)) {
                    new_cycles.push(cyc);
                }
            }
        }

        // Step 3: triple-condition violations force the cycles formed by the
        // two path families between the offending sinks.
        let owner_of = |x: usize| lambda.iter().position(|&b| b & (1 << x) != 0).unwrap();
        for v in 0..n {
            for u in 0..n {
                if u == v || owner_of(u) == owner_of(v) {
                    continue;
                }
                let pv = &parts[owner_of(v)];
                let pu = &parts[owner_of(u)];
                let mut fired = false;
                'outer: for w in 0..n {
                    if w == u || w == v {
                        continue;
                    }
                    for path in pv.simple_paths(w, v) {
                        if !pu.contains_path(&path) {
                            continue;
                        }
                        for branch in pv.simple_paths(w, u) {
                            if !path.starts_with(&branch) {
                                fired = true;
                                break 'outer;
                            }
                        }
                    }
                }
                if fired {
                    let closure = pv.path_union(u, v).union(&pu.path_union(v, u));
                    new_cycles.extend(closure.simple_cycles());
                }
            }
        }

        let mut next_pulled = pulled;
        for cyc in &new_cycles {
            next_pulled.add_cycle(cyc);
        }
        let next_lambda = merge_blocks(&lambda, &new_cycles);
        if next_pulled == pulled && next_lambda == lambda {
            return CompleteSet::validate(n, parts)
                .unwrap_or_else(|v| panic!("join produced an invalid set: {v}"));
        }
        pulled = next_pulled;
        lambda = next_lambda;
    }
    unreachable!("join failed to stabilize within n^2 rounds");
}

/// Finest partition coarser than both arguments.
fn common_coarsening(n: usize, a: &[NodeSet], b: &[NodeSet]) -> Vec<NodeSet> {
    let mut blocks: Vec<NodeSet> = (0..n).map(|u| 1 << u).collect();
    for &set in a.iter().chain(b) {
        merge_into(&mut blocks, set);
    }
    blocks.sort_unstable_by_key(|b| b.trailing_zeros());
    blocks
}

fn merge_blocks(lambda: &[NodeSet], cycles: &[Path]) -> Vec<NodeSet> {
    let mut blocks = lambda.to_vec();
    for cyc in cycles {
        let set: NodeSet = cyc.iter().fold(0, |m, &u| m | (1 << u));
        merge_into(&mut blocks, set);
    }
    blocks.sort_unstable_by_key(|b| b.trailing_zeros());
    blocks
}

/// Merge all blocks meeting `set` (and `set` itself) into one block.
fn merge_into(blocks: &mut Vec<NodeSet>, set: NodeSet) {
    let mut merged = set;
    blocks.retain(|&b| {
        if b & merged != 0 {
            merged |= b;
            false
        } else {
            true
        }
    });
    blocks.push(merged);
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn g(n: usize, edges: &[(usize, usize)]) -> Digraph {
        let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Digraph::with_edges(n, &shifted).unwrap()
    }

    pub fn cs(n: usize, parts: &[&[(usize, usize)]]) -> CompleteSet {
        CompleteSet::validate(n, parts.iter().map(|p| g(n, p)).collect()).unwrap()
    }

    /// The three full-dimensional types for n = 2.
    pub fn loop1_ccf() -> CompleteSet {
        cs(2, &[&[(1, 1), (2, 1)], &[(1, 1), (1, 2)]])
    }

    pub fn loop2_ccf() -> CompleteSet {
        cs(2, &[&[(2, 2), (2, 1)], &[(2, 2), (1, 2)]])
    }

    pub fn twocycle_ccf() -> CompleteSet {
        cs(2, &[&[(1, 2), (2, 1)]])
    }

    pub fn two_loops_set() -> CompleteSet {
        cs(2, &[&[(1, 1), (2, 2), (2, 1)], &[(1, 1), (2, 2), (1, 2)]])
    }

    #[test]
    fn validate_accepts_known_complete_sets() {
        loop1_ccf();
        loop2_ccf();
        twocycle_ccf();
        two_loops_set();
        // The worked three-node example: 2-cycle sink {1,2} plus part at 3.
        cs(3, &[&[(1, 2), (2, 1), (3, 1)], &[(1, 2), (2, 1), (2, 3)]]);
    }

    #[test]
    fn validate_reports_missing_sink() {
        // Two parts with sinks {2} and {3}: no part owns node 1.
        let d = g(3, &[(1, 2), (3, 2), (2, 2)]);
        let e = g(3, &[(1, 3), (2, 3), (3, 3)]);
        let err = CompleteSet::validate(3, vec![d, e]).unwrap_err();
        assert_eq!(err.clause(), 'a');
        assert!(err.to_string().contains('1'), "witness names node 1: {err}");
    }

    #[test]
    fn validate_reports_overlapping_sinks() {
        let err =
            CompleteSet::validate(2, vec![g(2, &[(1, 2), (2, 1)]), g(2, &[(1, 1), (1, 2)])]).unwrap_err();
        assert_eq!(err.clause(), 'a');
    }

    #[test]
    fn validate_reports_contraction_mismatch() {
        // Parts at 1 and 2 both need both loops; the part at 2 misses one.
        let err =
            CompleteSet::validate(2, vec![g(2, &[(1, 1), (2, 2), (2, 1)]), g(2, &[(2, 2), (1, 2)])])
                .unwrap_err();
        assert_eq!(err.clause(), 'b');
    }

    #[test]
    fn part_not_connected_relation_reported() {
        let err = CompleteSet::validate(3, vec![g(3, &[(1, 2)])]).unwrap_err();
        assert_eq!(err.clause(), '-');
    }

    #[test]
    fn join_two_loops() {
        let j = join(&loop1_ccf(), &loop2_ccf());
        assert_eq!(j, two_loops_set());
        let (d, e) = j.decompose();
        assert_eq!(d.parts.len(), 2);
        assert!(e.is_empty());
    }

    #[test]
    fn join_loop_with_twocycle() {
        let j = join(&loop1_ccf(), &twocycle_ccf());
        assert_eq!(j, cs(2, &[&[(1, 1), (2, 1), (1, 2)]]));
    }

    #[test]
    fn join_is_idempotent_and_commutative_n2() {
        let elems = [loop1_ccf(), loop2_ccf(), twocycle_ccf()];
        for a in &elems {
            assert_eq!(&join(a, a), a);
            for b in &elems {
                assert_eq!(join(a, b), join(b, a));
            }
        }
    }

    #[test]
    fn leq_laws_n2() {
        let elems = [loop1_ccf(), loop2_ccf(), twocycle_ccf(), two_loops_set()];
        for a in &elems {
            assert!(leq(a, a));
            for b in &elems {
                let j = join(a, b);
                assert!(leq(a, &j));
                assert!(leq(b, &j));
                // leq(a,b) iff join(a,b) == b.
                assert_eq!(leq(a, b), join(a, b) == *b);
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b);
                }
            }
        }
        // Distinct open cones are incomparable.
        assert!(!leq(&loop1_ccf(), &loop2_ccf()));
        assert!(!leq(&loop2_ccf(), &loop1_ccf()));
    }

    #[test]
    fn decompose_examples() {
        let (d, e) = cs(3, &[&[(1, 2), (2, 1), (3, 1)], &[(1, 2), (2, 1), (2, 3)]]).decompose();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(e.len(), 1);
        let (d, e) = two_loops_set().decompose();
        assert_eq!((d.parts.len(), e.len()), (2, 0));
    }

    #[test]
    fn ccf_recognition() {
        assert!(loop1_ccf().is_complete_connected_function());
        assert!(twocycle_ccf().is_complete_connected_function());
        assert!(!two_loops_set().is_complete_connected_function());
        assert!(cs(3, &[&[(1, 2), (2, 1), (3, 1)], &[(1, 2), (2, 1), (2, 3)]])
            .is_complete_connected_function());
        // Extra tied path into 3 makes the last part non-minimal: a valid
        // element, but not a join-irreducible.
        let deeper = cs(3, &[&[(1, 2), (2, 1), (3, 1)], &[(1, 2), (2, 1), (1, 3), (2, 3)]]);
        assert!(!deeper.is_complete_connected_function());
    }

    #[test]
    fn json_round_trip() {
        let s = two_loops_set().to_json();
        assert_eq!(CompleteSet::from_json(&s).unwrap(), two_loops_set());
        assert!(CompleteSet::from_json(r#"{"n":2,"parts":[{"edges":[[1,2]]}]}"#).is_err());
    }
}
