//! Universal sets of proper 4-tuples built from a BFS tree.
//!
//! Every 2-join has a compatible tuple among: all proper tuples made of two
//! tree edges, plus, for each vertex `u` at level at least 2 and each vertex
//! `v` at level at least 1 with a neighbor among the descendants of `u`,
//! the tuples `(a1, v, p(u), p(p(u)))` and `(p(p(u)), p(u), v, a1)` where
//! `a1` is the smallest such neighbor.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::{BfsTree, Graph};
use crate::split::FourTuple;

/// Counters from one universal-set construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniversalStats {
    pub tree_pair_tuples: usize,
    pub descendant_tuples: usize,
    /// Number of descendant sets computed.
    pub descendant_sets: usize,
}

/// Step-two tuples, deduplicated up to the A/B twin. Tuples made of two
/// tree edges were all emitted by step one (as themselves or their twin).
#[derive(Default)]
struct Extra {
    seen: HashSet<FourTuple>,
}

impl Extra {
    fn admit(&mut self, g: &Graph, tree: &BfsTree, z: FourTuple) -> bool {
        let tree_edge = |x: usize, y: usize| tree.parent(x) == Some(y) || tree.parent(y) == Some(x);
        if !z.is_proper(g) || (tree_edge(z.a1, z.a2) && tree_edge(z.b1, z.b2)) {
            return false;
        }
        !self.seen.contains(&z.swap_roles()) && self.seen.insert(z)
    }
}

pub fn universal_set(g: &Graph) -> Result<Vec<FourTuple>> {
    Ok(universal_set_with_stats(g)?.0)
}

pub fn universal_set_with_stats(g: &Graph) -> Result<(Vec<FourTuple>, UniversalStats)> {
    let mut stats = UniversalStats::default();
    if g.n() == 0 {
        return Ok((Vec::new(), stats));
    }
    let tree = g.bfs_tree(0)?;
    let mut tuples = Vec::new();

    // Unordered edge pairs: the ordered pair (f, e) would only add twins.
    let tree_edges: Vec<(usize, usize)> = tree.edges().collect();
    for (i, &(p, q)) in tree_edges.iter().enumerate() {
        for &(r, s) in &tree_edges[i + 1..] {
            for (a1, a2) in [(p, q), (q, p)] {
                for (b1, b2) in [(r, s), (s, r)] {
                    let z = FourTuple::new(a1, a2, b1, b2);
                    if z.is_proper(g) {
                        tuples.push(z);
                    }
                }
            }
        }
    }
    stats.tree_pair_tuples = tuples.len();
    let mut extra = Extra::default();

    // For a fixed u, walking D_u in ascending id order and claiming every
    // unclaimed neighbor v gives each v its smallest neighbor in D_u.
    let mut best = vec![usize::MAX; g.n()];
    let mut touched = Vec::new();
    for u in g.vertices() {
        if tree.level(u) < 2 {
            continue;
        }
        let pu = tree.parent(u).expect("level >= 2");
        let ppu = tree.parent(pu).expect("level >= 2");
        let mut du = tree.descendants_preorder(u).to_vec();
        du.sort_unstable();
        stats.descendant_sets += 1;
        for &w in &du {
            for &v in g.neighbors(w) {
                if best[v] == usize::MAX {
                    best[v] = w;
                    touched.push(v);
                }
            }
        }
        touched.sort_unstable();
        for &v in &touched {
            if tree.level(v) >= 1 {
                let a1 = best[v];
                for z in [FourTuple::new(a1, v, pu, ppu), FourTuple::new(ppu, pu, v, a1)] {
                    if extra.admit(g, &tree, z) {
                        tuples.push(z);
                        stats.descendant_tuples += 1;
                    }
                }
            }
            best[v] = usize::MAX;
        }
        touched.clear();
    }

    Ok((tuples, stats))
}
