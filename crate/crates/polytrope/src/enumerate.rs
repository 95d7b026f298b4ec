//! Exhaustive realization of the fan at small n.
//!
//! Open cones are indexed by complete connected functions: a critical cycle
//! C, the connected function collecting the in-trees rooted on C, and one
//! minimal circled tree per off-cycle root. Closing that set under the join
//! yields the full face lattice; codimensions come from the rank of each
//! cone's equality system.

use std::collections::BTreeMap;

use crate::digraph::{cycle_edges, Digraph};
use crate::error::{Error, Result};
use crate::relations::{join, leq, CompleteSet};

/// All complete connected functions on `n` nodes (the open-cone indices).
/// Exhaustive generation, guarded to `n <= 4`.
pub fn enumerate_ccf(n: usize) -> Result<Vec<CompleteSet>> {
    if n > 4 {
        return Err(Error::ResourceLimit {
            what: "open-cone enumeration",
            max: 4,
            got: n,
        });
    }
    let complete = Digraph::complete(n, true);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for cycle in complete.simple_cycles() {
        let mut cycle_graph = Digraph::new(n);
        cycle_graph.add_cycle(&cycle);
        let off_cycle: Vec<usize> = (0..n).filter(|u| !cycle.contains(u)).collect();

        // Connected functions with exactly this cycle: every off-cycle node
        // picks one out-edge and no new cycle may appear.
        let mut d_candidates = Vec::new();
        let mut assignment = vec![usize::MAX; off_cycle.len()];
        enumerate_functions(n, &cycle_graph, &cycle, &off_cycle, 0, &mut assignment, &mut d_candidates);

        // Minimal circled trees rooted at each off-cycle node: spanning
        // in-trees whose union with the cycle has exactly n edges.
        let tree_sets: Vec<Vec<Digraph>> = off_cycle
            .iter()
            .map(|&i| {
                Digraph::complete(n, false)
                    .in_trees(i)
                    .into_iter()
                    .map(|t| t.union(&cycle_graph))
                    .filter(|g| g.edge_count() == n)
                    .collect()
            })
            .collect();

        let mut choice = vec![0usize; off_cycle.len()];
        loop {
            for d in &d_candidates {
                let mut parts = vec![*d];
                for (k, _) in off_cycle.iter().enumerate() {
                    parts.push(tree_sets[k][choice[k]]);
                }
                if let Ok(cs) = CompleteSet::validate(n, parts) {
                    if seen.insert(cs.canonical_key()) {
                        out.push(cs);
                    }
                }
            }
            // Advance the mixed-radix counter over tree choices.
            let mut k = 0;
            loop {
                if k == off_cycle.len() {
                    break;
                }
                choice[k] += 1;
                if choice[k] < tree_sets[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == off_cycle.len() {
                break;
            }
        }
    }
    out.sort_by_key(|cs| cs.canonical_key());
    Ok(out)
}

fn enumerate_functions(
    n: usize,
    cycle_graph: &Digraph,
    cycle: &[usize],
    off_cycle: &[usize],
    k: usize,
    assignment: &mut [usize],
    out: &mut Vec<Digraph>,
) {
    if k == off_cycle.len() {
        let mut g = *cycle_graph;
        for (idx, &u) in off_cycle.iter().enumerate() {
            g.add_edge(u, assignment[idx]);
        }
        let cycles = g.simple_cycles();
        if cycles.len() == 1 && cycles[0] == cycle {
            out.push(g);
        }
        return;
    }
    let u = off_cycle[k];
    for v in 0..n {
        if v == u {
            continue;
        }
        assignment[k] = v;
        enumerate_functions(n, cycle_graph, cycle, off_cycle, k + 1, assignment, out);
    }
}

/// Face-lattice of the fan: join closure of the open-cone indices, with the
/// induced order. Guarded to `n <= 3`.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub n: usize,
    pub elements: Vec<CompleteSet>,
    /// `order[i][j]` iff `elements[i] <= elements[j]`.
    pub order: Vec<Vec<bool>>,
}

pub fn face_lattice(n: usize) -> Result<FaceLattice> {
    if n > 3 {
        return Err(Error::ResourceLimit {
            what: "face-lattice closure",
            max: 3,
            got: n,
        });
    }
    let irreducibles = enumerate_ccf(n)?;
    let mut keys: std::collections::BTreeSet<_> =
        irreducibles.iter().map(|e| e.canonical_key()).collect();
    let mut elements = irreducibles;
    let mut frontier: Vec<CompleteSet> = elements.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for a in &frontier {
            for b in &elements {
                let j = join(a, b);
                if keys.insert(j.canonical_key()) {
                    fresh.push(j);
                }
            }
        }
        elements.extend(frontier.drain(..).filter(|_| false));
        elements.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    elements.sort_by_key(|cs| cs.canonical_key());
    let order: Vec<Vec<bool>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| leq(a, b)).collect())
        .collect();
    Ok(FaceLattice { n, elements, order })
}

impl FaceLattice {
    /// Count elements above `g` (inclusive), bucketed by a grading.
    pub fn interval_above(&self, idx: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&j| self.order[idx][*&j]).collect()
    }

    pub fn index_of(&self, g: &CompleteSet) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }
}

/// Histogram over sink-size profiles, used by tests and the census table.
pub fn profile_histogram(elements: &[CompleteSet]) -> BTreeMap<Vec<usize>, usize> {
    let mut hist = BTreeMap::new();
    for e in elements {
        *hist.entry(e.sink_size_profile()).or_insert(0) += 1;
    }
    hist
}

/// Strip all self-loops from every part; used for the loop-insensitive
/// orbit census. The result is a raw edge-mask key, not a complete set.
pub fn strip_loops_key(cs: &CompleteSet) -> (usize, Vec<u128>) {
    let n = cs.n();
    let mut masks: Vec<u128> = cs
        .parts()
        .iter()
        .map(|p| {
            let mut g = *p.graph();
            for u in 0..n {
                g.remove_edge(u, u);
            }
            g.edge_mask()
        })
        .collect();
    masks.sort_unstable();
    (n, masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ccf_counts_small_n() {
        assert_eq!(enumerate_ccf(1).unwrap().len(), 1);
        assert_eq!(enumerate_ccf(2).unwrap().len(), 3);
        let ccf3 = enumerate_ccf(3).unwrap();
        assert_eq!(ccf3.len(), 68);
        // Split by critical-cycle length: loops, 2-cycles, 3-cycles.
        let hist = profile_histogram(&ccf3);
        assert_eq!(hist.get(&vec![1, 1, 1]), Some(&54));
        assert_eq!(hist.get(&vec![2, 1]), Some(&12));
        assert_eq!(hist.get(&vec![3]), Some(&2));
        for e in &ccf3 {
            assert!(e.is_complete_connected_function());
        }
    }

    #[test]
    fn resource_guard() {
        assert!(matches!(enumerate_ccf(5), Err(Error::ResourceLimit { .. })));
        assert!(matches!(face_lattice(4), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn lattice_n2_census() {
        let fl = face_lattice(2).unwrap();
        assert_eq!(fl.elements.len(), 7);
        let ccf_count = fl.elements.iter().filter(|e| e.is_complete_connected_function()).count();
        assert_eq!(ccf_count, 3);
    }

    #[test]
    fn lattice_n3_census() {
        let fl = face_lattice(3).unwrap();
        assert_eq!(fl.elements.len(), 815);
    }
}

// Placeholder for cycle_edges usage until orbit machinery lands.
#[allow(dead_code)]
fn _unused(cycle: &[usize]) -> usize {
    cycle_edges(cycle).count()
}
