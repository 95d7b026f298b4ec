//! Directed-graph substrate.
//!
//! Graphs are directed, allow self-loops, and have no multi-edges. Nodes are
//! `1..n` externally (JSON, DOT, reports) and `0..n-1` internally. The edge
//! set lives in a `u128` bitmask (bit `u*n + v` for edge `u -> v`), which
//! caps `n` at 11; the exhaustive machinery downstream never goes past 6.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const MAX_NODES: usize = 11;

/// Node subset as a bitmask.
pub type NodeSet = u32;

pub fn node_set(nodes: &[usize]) -> NodeSet {
    nodes.iter().fold(0, |m, &u| m | (1 << u))
}

pub fn node_set_vec(set: NodeSet) -> Vec<usize> {
    (0..32).filter(|b| set & (1 << b) != 0).map(|b| b as usize).collect()
}

/// Simple path or cycle as a node sequence. For a path `u -> ... -> v` the
/// sequence lists every node; for a cycle the closing edge back to the first
/// node is implicit (a self-loop is the singleton sequence).
pub type Path = Vec<usize>;

pub fn path_edges(path: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    path.windows(2).map(|w| (w[0], w[1]))
}

pub fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digraph {
    n: usize,
    mask: u128,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_NODES, "node count out of range");
        Digraph { n, mask: 0 }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge ({},{}) out of range", u + 1, v + 1)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Complete digraph, optionally with all self-loops.
    pub fn complete(n: usize, loops: bool) -> Self {
        let mut g = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v || loops {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn bit(&self, u: usize, v: usize) -> u128 {
        1u128 << (u * self.n + v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.mask |= self.bit(u, v);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.mask &= !self.bit(u, v);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.mask & self.bit(u, v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_edgeless(&self) -> bool {
        self.mask == 0
    }

    pub fn edge_mask(&self) -> u128 {
        self.mask
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_edge(u, v)).collect()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.has_edge(u, v)).count()
    }

    pub fn union(&self, other: &Digraph) -> Digraph {
        assert_eq!(self.n, other.n);
        Digraph {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    pub fn contains_path(&self, path: &[usize]) -> bool {
        path_edges(path).all(|(u, v)| self.has_edge(u, v))
    }

    pub fn contains_cycle(&self, cycle: &[usize]) -> bool {
        cycle_edges(cycle).all(|(u, v)| self.has_edge(u, v))
    }

    pub fn add_cycle(&mut self, cycle: &[usize]) {
        let edges: Vec<_> = cycle_edges(cycle).collect();
        for (u, v) in edges {
            self.add_edge(u, v);
        }
    }

    /// Induced subgraph on a node subset (other nodes stay, isolated).
    pub fn induced(&self, nodes: NodeSet) -> Digraph {
        let mut g = Digraph::new(self.n);
        for (u, v) in self.edges() {
            if node_set(&[u]) & nodes != 0 && node_set(&[v]) & nodes != 0 {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn reverse(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(v, u);
        }
        g
    }

    /// Relabel nodes: node `u` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let mut g = Digraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Nodes reachable from `u` (including `u`).
    pub fn reach_set(&self, u: usize) -> NodeSet {
        let mut seen: NodeSet = 1 << u;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for y in self.out_neighbors(x) {
                if seen & (1 << y) == 0 {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.reach_set(u) & (1 << v) != 0
    }

    /// Strong components, listed by minimum element.
    pub fn strong_components(&self) -> Vec<NodeSet> {
        let reach: Vec<NodeSet> = (0..self.n).map(|u| self.reach_set(u)).collect();
        let mut seen: NodeSet = 0;
        let mut comps = Vec::new();
        for u in 0..self.n {
            if seen & (1 << u) != 0 {
                continue;
            }
            let mut comp: NodeSet = 0;
            for v in 0..self.n {
                if reach[u] & (1 << v) != 0 && reach[v] & (1 << u) != 0 {
                    comp |= 1 << v;
                }
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// Strong components with no edge leaving them.
    pub fn sink_components(&self) -> Vec<NodeSet> {
        self.strong_components()
            .into_iter()
            .filter(|&comp| {
                self.edges()
                    .iter()
                    .all(|&(u, v)| comp & (1 << u) == 0 || comp & (1 << v) != 0)
            })
            .collect()
    }

    /// Edges lying on walks that end at `u`: all edges whose target reaches
    /// `u`, together with the nodes they touch and `u` itself.
    pub fn rooted_subgraph(&self, u: usize) -> Digraph {
        let into = self.reverse().reach_set(u);
        let mut g = Digraph::new(self.n);
        for (x, y) in self.edges() {
            if into & (1 << y) != 0 {
                g.add_edge(x, y);
            }
        }
        g
    }

    /// All simple directed cycles, each in canonical rotation (smallest node
    /// first); self-loops are singleton sequences.
    pub fn simple_cycles(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for start in 0..self.n {
            if self.has_edge(start, start) {
                out.push(vec![start]);
            }
            let mut path = vec![start];
            let mut on_path: NodeSet = 1 << start;
            self.cycle_dfs(start, start, &mut path, &mut on_path, &mut out);
        }
        out
    }

    fn cycle_dfs(&self, start: usize, at: usize, path: &mut Path, on_path: &mut NodeSet, out: &mut Vec<Path>) {
        for next in self.out_neighbors(at) {
            if next == start && path.len() >= 2 {
                out.push(path.clone());
            } else if next > start && *on_path & (1 << next) == 0 {
                path.push(next);
                *on_path |= 1 << next;
                self.cycle_dfs(start, next, path, on_path, out);
                *on_path &= !(1 << next);
                path.pop();
            }
        }
    }

    /// Simple cycles containing node `u`.
    pub fn cycles_through(&self, u: usize) -> Vec<Path> {
        self.simple_cycles().into_iter().filter(|c| c.contains(&u)).collect()
    }

    /// All simple paths `u -> ... -> v` for `u != v`.
    pub fn simple_paths(&self, u: usize, v: usize) -> Vec<Path> {
        assert_ne!(u, v);
        let mut out = Vec::new();
        let mut path = vec![u];
        let mut on_path: NodeSet = 1 << u;
        self.path_dfs(u, v, &mut path, &mut on_path, &mut out);
        out
    }

    fn path_dfs(&self, at: usize, goal: usize, path: &mut Path, on_path: &mut NodeSet, out: &mut Vec<Path>) {
        for next in self.out_neighbors(at) {
            if next == goal {
                path.push(next);
                out.push(path.clone());
                path.pop();
            } else if *on_path & (1 << next) == 0 {
                path.push(next);
                *on_path |= 1 << next;
                self.path_dfs(next, goal, path, on_path, out);
                *on_path &= !(1 << next);
                path.pop();
            }
        }
    }

    /// Union of the edges on all simple paths `u -> v` (empty if none).
    pub fn path_union(&self, u: usize, v: usize) -> Digraph {
        let mut g = Digraph::new(self.n);
        for p in self.simple_paths(u, v) {
            for (x, y) in path_edges(&p) {
                g.add_edge(x, y);
            }
        }
        g
    }

    /// All spanning in-directed trees of this graph with the given root:
    /// every non-root node has exactly one out-edge, the root has none, and
    /// the choice graph is acyclic (hence everything flows into the root).
    pub fn in_trees(&self, root: usize) -> Vec<Digraph> {
        let mut choices: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        for u in 0..self.n {
            if u == root {
                choices.push(vec![]);
                continue;
            }
            let outs: Vec<usize> = self.out_neighbors(u).into_iter().filter(|&v| v != u).collect();
            if outs.is_empty() {
                return vec![];
            }
            choices.push(outs);
        }
        let mut succ = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        self.tree_dfs(root, 0, &choices, &mut succ, &mut out);
        out
    }

    fn tree_dfs(&self, root: usize, u: usize, choices: &[Vec<usize>], succ: &mut Vec<usize>, out: &mut Vec<Digraph>) {
        if u == self.n {
            let mut tree = Digraph::new(self.n);
            let mut ok = true;
            for x in 0..self.n {
                if x == root {
                    continue;
                }
                // Walk towards the root; a revisit means a cycle.
                let mut seen: NodeSet = 1 << x;
                let mut at = x;
                while at != root {
                    at = succ[at];
                    if seen & (1 << at) != 0 {
                        ok = false;
                        break;
                    }
                    seen |= 1 << at;
                }
                if !ok {
                    break;
                }
                tree.add_edge(x, succ[x]);
            }
            if ok {
                out.push(tree);
            }
            return;
        }
        if u == root {
            self.tree_dfs(root, u + 1, choices, succ, out);
            return;
        }
        for &v in &choices[u] {
            succ[u] = v;
            self.tree_dfs(root, u + 1, choices, succ, out);
        }
        succ[u] = usize::MAX;
    }

    /// One spanning in-tree rooted at `root`, built deterministically by
    /// breadth-first search against the edge direction.
    pub fn spanning_in_tree(&self, root: usize) -> Option<Digraph> {
        let mut succ = vec![usize::MAX; self.n];
        let mut seen: NodeSet = 1 << root;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(y) = queue.pop_front() {
            for x in 0..self.n {
                if x != y && self.has_edge(x, y) && seen & (1 << x) == 0 {
                    seen |= 1 << x;
                    succ[x] = y;
                    queue.push_back(x);
                }
            }
        }
        if seen.count_ones() as usize != self.n {
            return None;
        }
        let mut tree = Digraph::new(self.n);
        for x in 0..self.n {
            if x != root {
                tree.add_edge(x, succ[x]);
            }
        }
        Some(tree)
    }

    pub fn is_in_tree(&self, root: usize) -> bool {
        if self.edge_count() != self.n - 1 {
            return false;
        }
        (0..self.n).all(|u| {
            if u == root {
                self.out_degree(u) == 0
            } else {
                self.out_degree(u) == 1 && self.reaches(u, root)
            }
        })
    }

    /// A circled tree is the union of a spanning in-directed tree and one of
    /// its graph's cycles, with exactly one simple cycle overall.
    pub fn is_circled_tree(&self) -> bool {
        let cycles = self.simple_cycles();
        if cycles.len() != 1 {
            return false;
        }
        let cycle = &cycles[0];
        let mut cycle_graph = Digraph::new(self.n);
        cycle_graph.add_cycle(cycle);
        let rest = Digraph {
            n: self.n,
            mask: self.mask & !cycle_graph.mask,
        };
        if rest.edge_count() > self.n - 1 {
            return false;
        }
        for root in 0..self.n {
            for tree in self.in_trees(root) {
                if rest.is_subgraph_of(&tree) && tree.union(&cycle_graph) == *self {
                    return true;
                }
            }
        }
        false
    }

    /// A connected relation is a non-empty graph expressible as a union of
    /// circled trees; equivalently every edge lies in some circled tree
    /// inside the graph. Exponential search, guarded.
    pub fn is_connected_relation(&self) -> Result<bool> {
        if self.n > 6 {
            return Err(Error::ResourceLimit {
                what: "connected-relation recognition",
                max: 6,
                got: self.n,
            });
        }
        Ok(self.is_connected_relation_unchecked())
    }

    fn is_connected_relation_unchecked(&self) -> bool {
        if self.is_edgeless() {
            return false;
        }
        let cycles = self.simple_cycles();
        if cycles.is_empty() {
            return false;
        }
        let trees: Vec<Digraph> = (0..self.n).flat_map(|r| self.in_trees(r)).collect();
        if trees.is_empty() {
            return false;
        }
        let mut covered = Digraph::new(self.n);
        for tree in &trees {
            for cycle in &cycles {
                let mut cg = Digraph::new(self.n);
                cg.add_cycle(cycle);
                let ct = tree.union(&cg);
                if ct.simple_cycles().len() == 1 {
                    covered = covered.union(&ct);
                    if covered == *self {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Canonical cycle: shortest, then lexicographically smallest rotation.
    pub fn canonical_cycle(&self) -> Option<Path> {
        self.simple_cycles()
            .into_iter()
            .min_by_key(|c| (c.len(), c.clone()))
    }

    /// Contract by a block partition. Cross-block edges always become arcs;
    /// within-block edges become loop arcs at their block when requested.
    pub fn contraction(&self, blocks: &[NodeSet], include_within_block: bool) -> Result<MultiGraph> {
        let mut cover: NodeSet = 0;
        for &b in blocks {
            if b == 0 || cover & b != 0 {
                return Err(Error::InvalidPartition);
            }
            cover |= b;
        }
        if cover != (1 << self.n) - 1 {
            return Err(Error::InvalidPartition);
        }
        let block_of = |u: usize| blocks.iter().position(|&b| b & (1 << u) != 0).unwrap();
        let mut arcs = Vec::new();
        for (u, v) in self.edges() {
            let (bu, bv) = (block_of(u), block_of(v));
            if bu != bv || include_within_block {
                arcs.push(MultiArc {
                    edge: (u, v),
                    src_block: bu,
                    tgt_block: bv,
                });
            }
        }
        Ok(MultiGraph {
            blocks: blocks.to_vec(),
            arcs,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// DOT rendering with 1-based node names.
    pub fn to_dot(&self, name: &str, highlight: Option<&Digraph>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {name} {{");
        for u in 0..self.n {
            let _ = writeln!(s, "  {};", u + 1);
        }
        for (u, v) in self.edges() {
            let attr = match highlight {
                Some(h) if h.has_edge(u, v) => " [color=red]",
                _ => "",
            };
            let _ = writeln!(s, "  {} -> {}{};", u + 1, v + 1, attr);
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let edges = self.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        DigraphJson { n: self.n, edges }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = DigraphJson::deserialize(de)?;
        if raw.n == 0 || raw.n > MAX_NODES {
            return Err(D::Error::custom(format!("n must be in 1..={MAX_NODES}")));
        }
        let mut g = Digraph::new(raw.n);
        for (u, v) in raw.edges {
            if u == 0 || u > raw.n || v == 0 || v > raw.n {
                return Err(D::Error::custom(format!("edge ({u},{v}) out of range")));
            }
            g.add_edge(u - 1, v - 1);
        }
        Ok(g)
    }
}

/// Multigraph arc carrying its originating edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiArc {
    pub edge: (usize, usize),
    pub src_block: usize,
    pub tgt_block: usize,
}

/// Contraction multigraph: disjoint node blocks plus arcs with multiplicity
/// (one arc per originating edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    pub blocks: Vec<NodeSet>,
    pub arcs: Vec<MultiArc>,
}

impl MultiGraph {
    /// Blocks whose arcs can reach `target` at block level (reflexively).
    pub fn blocks_reaching(&self, target: usize) -> Vec<usize> {
        let k = self.blocks.len();
        let mut into = vec![false; k];
        into[target] = true;
        loop {
            let mut changed = false;
            for arc in &self.arcs {
                if into[arc.tgt_block] && !into[arc.src_block] {
                    into[arc.src_block] = true;
                    changed = true;
                }
            }
            if !changed {
                return (0..k).filter(|&b| into[b]).collect();
            }
        }
    }

    /// Arcs lying on block-level walks that end at block `target`.
    pub fn rooted_arcs(&self, target: usize) -> Vec<MultiArc> {
        let k = self.blocks.len();
        let mut into = vec![false; k];
        for b in self.blocks_reaching(target) {
            into[b] = true;
        }
        self.arcs.iter().copied().filter(|a| into[a.tgt_block]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 1-based edge list helper mirroring the external numbering.
    pub fn g(n: usize, edges: &[(usize, usize)]) -> Digraph {
        let shifted: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Digraph::with_edges(n, &shifted).unwrap()
    }

    #[test]
    fn strong_components_examples() {
        let comps = g(3, &[(1, 2), (2, 1), (3, 1)]).strong_components();
        assert_eq!(comps, vec![node_set(&[0, 1]), node_set(&[2])]);
        assert_eq!(g(3, &[]).strong_components().len(), 3);
        assert_eq!(g(3, &[(1, 2), (2, 3), (3, 1)]).strong_components(), vec![node_set(&[0, 1, 2])]);
    }

    #[test]
    fn sink_components_examples() {
        assert_eq!(g(2, &[(2, 1), (1, 1)]).sink_components(), vec![node_set(&[0])]);
        assert_eq!(
            g(3, &[(1, 2), (2, 3), (3, 1)]).sink_components(),
            vec![node_set(&[0, 1, 2])]
        );
        assert_eq!(
            g(3, &[(1, 2), (2, 1), (3, 1)]).sink_components(),
            vec![node_set(&[0, 1])]
        );
        assert!(!g(3, &[]).sink_components().is_empty());
    }

    #[test]
    fn contraction_examples() {
        let gr = g(3, &[(1, 2), (2, 1), (3, 1), (3, 2)]);
        let mg = gr.contraction(&[node_set(&[0, 1]), node_set(&[2])], false).unwrap();
        assert_eq!(mg.arcs.len(), 2);
        assert!(mg.arcs.iter().all(|a| a.src_block == 1 && a.tgt_block == 0));

        let singletons: Vec<NodeSet> = (0..3).map(|u| node_set(&[u])).collect();
        let mg = gr.contraction(&singletons, true).unwrap();
        assert_eq!(mg.arcs.len(), gr.edge_count());

        let empty = g(3, &[]);
        assert!(empty.contraction(&[node_set(&[0, 1]), node_set(&[2])], true).unwrap().arcs.is_empty());
        assert!(matches!(
            gr.contraction(&[node_set(&[0])], false),
            Err(Error::InvalidPartition)
        ));
    }

    #[test]
    fn rooted_subgraph_examples() {
        let cyc = g(3, &[(2, 3), (3, 1), (1, 2)]);
        assert_eq!(cyc.rooted_subgraph(2), cyc);
        assert!(g(3, &[(1, 2), (3, 2)]).rooted_subgraph(0).is_edgeless());
        assert_eq!(
            g(3, &[(2, 1), (3, 2)]).rooted_subgraph(0),
            g(3, &[(2, 1), (3, 2)])
        );
        // A loop at the root flows into the root.
        assert_eq!(g(2, &[(1, 1)]).rooted_subgraph(0), g(2, &[(1, 1)]));
    }

    #[test]
    fn simple_cycles_examples() {
        let k2 = Digraph::complete(2, true);
        let mut cycles = k2.simple_cycles();
        cycles.sort();
        assert_eq!(cycles, vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(Digraph::complete(3, true).simple_cycles().len(), 8);
        assert!(g(3, &[]).simple_cycles().is_empty());
        assert_eq!(Digraph::complete(4, true).simple_cycles().len(), 24);
    }

    #[test]
    fn in_trees_examples() {
        assert_eq!(Digraph::complete(3, true).in_trees(0).len(), 3);
        let tree = g(3, &[(2, 1), (3, 2)]);
        assert_eq!(tree.in_trees(0), vec![tree]);
        assert!(g(3, &[(1, 2), (2, 1)]).in_trees(0).is_empty());
    }

    #[test]
    fn spanning_in_tree_matches_enumeration() {
        for root in 0..3 {
            let t = Digraph::complete(3, true).spanning_in_tree(root).unwrap();
            assert!(t.is_in_tree(root));
        }
        assert!(g(3, &[(1, 2), (3, 2)]).spanning_in_tree(0).is_none());
    }

    #[test]
    fn circled_tree_examples() {
        assert!(g(2, &[(2, 1), (1, 1)]).is_circled_tree());
        assert!(g(2, &[(2, 1), (1, 2)]).is_circled_tree());
        assert!(!g(2, &[(1, 1), (2, 2)]).is_circled_tree());
        // Tree into 3 plus the 2-cycle: one cycle, still a circled tree even
        // though it has n+1 edges.
        assert!(g(3, &[(1, 2), (2, 1), (1, 3), (2, 3)]).is_circled_tree());
        assert!(!g(3, &[(1, 2), (2, 1)]).is_circled_tree());
    }

    #[test]
    fn connected_relation_examples() {
        assert!(g(2, &[(2, 1), (1, 1)]).is_connected_relation().unwrap());
        assert!(!g(3, &[(1, 2)]).is_connected_relation().unwrap());
        assert!(g(3, &[(1, 2), (2, 1), (3, 1), (2, 3)]).is_connected_relation().unwrap());
        // Unique sink component for every connected relation.
        for edges in [vec![(1, 2), (2, 1), (3, 1)], vec![(1, 1), (2, 1), (3, 1)]] {
            let gr = g(3, &edges);
            assert!(gr.is_connected_relation().unwrap());
            assert_eq!(gr.sink_components().len(), 1);
        }
        assert!(!g(2, &[(1, 1), (2, 2)]).is_connected_relation().unwrap());
    }

    #[test]
    fn cycle_count_on_complete_digraph() {
        // sum over k of C(n,k) * (k-1)! simple cycles, loops included.
        let count = |n: usize| Digraph::complete(n, true).simple_cycles().len();
        assert_eq!(count(2), 3);
        assert_eq!(count(3), 8);
        assert_eq!(count(4), 24);
        assert_eq!(count(5), 89);
    }

    #[test]
    fn json_round_trip_and_dot() {
        let gr = g(3, &[(1, 2), (2, 1), (3, 1)]);
        let s = gr.to_json();
        assert_eq!(s, r#"{"n":3,"edges":[[1,2],[2,1],[3,1]]}"#);
        assert_eq!(Digraph::from_json(&s).unwrap(), gr);
        assert!(Digraph::from_json(r#"{"n":2,"edges":[[0,1]]}"#).is_err());
        assert!(Digraph::from_json(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
        let dot = gr.to_dot("g", None);
        assert!(dot.contains("1 -> 2;"));
    }
}
