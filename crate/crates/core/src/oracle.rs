//! Brute-force ground truth for small graphs.

use crate::detect::{is_nonpath, StarCutset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{classify_mask, TwoJoinSplit};

/// Largest graph [`enumerate_2joins`] accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 16;
/// Largest graph [`oracle_star_cutset`] accepts.
pub const MAX_STAR_CUTSET_VERTICES: usize = 12;

/// Every 2-join of `g`, each listed once with vertex 0 in `X1`, sorted by
/// (minimal side size, minimal side, `A1`).
pub fn enumerate_2joins(g: &Graph, nonpath_only: bool) -> Result<Vec<TwoJoinSplit>> {
    let n = g.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::OracleCap { n, limit: MAX_ENUMERATION_VERTICES });
    }
    g.require_connected()?;
    let mut out = Vec::new();
    if n < 6 {
        return Ok(out);
    }
    let mut in_x1 = vec![false; n];
    // bit i of `rest` decides vertex i + 1; vertex 0 is always in X1
    for rest in 0u32..(1 << (n - 1)) {
        let size = 1 + rest.count_ones() as usize;
        if size < 3 || n - size < 3 {
            continue;
        }
        in_x1[0] = true;
        for (v, slot) in in_x1.iter_mut().enumerate().skip(1) {
            *slot = rest >> (v - 1) & 1 == 1;
        }
        if let Some(s) = classify_mask(g, &in_x1) {
            if !nonpath_only || is_nonpath(g, &s) {
                out.push(s);
            }
        }
    }
    out.sort_by(|x, y| {
        let key = |s: &TwoJoinSplit| {
            let m = s.side(s.minimal_side()).x.to_vec();
            (m.len(), m, s.a1.clone())
        };
        key(x).cmp(&key(y))
    });
    Ok(out)
}

/// Fewest vertices on one side over all (non-path) 2-joins.
pub fn oracle_min_side(g: &Graph, nonpath_only: bool) -> Result<Option<usize>> {
    Ok(enumerate_2joins(g, nonpath_only)?.iter().map(|s| s.min_side_size()).min())
}

/// Exhaustive star-cutset search: centers ascending, then subsets of the
/// closed neighborhood containing the center by size and lexicographically.
pub fn oracle_star_cutset(g: &Graph) -> Result<Option<StarCutset>> {
    let n = g.n();
    if n > MAX_STAR_CUTSET_VERTICES {
        return Err(Error::OracleCap { n, limit: MAX_STAR_CUTSET_VERTICES });
    }
    for x in 0..n {
        let nbrs = g.neighbors(x);
        let mut candidates: Vec<Vec<usize>> = (0u32..(1 << nbrs.len()))
            .map(|mask| {
                let mut s: Vec<usize> =
                    (0..nbrs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| nbrs[i]).collect();
                s.push(x);
                s.sort_unstable();
                s
            })
            .collect();
        candidates.sort_by(|p, q| (p.len(), p).cmp(&(q.len(), q)));
        for cutset in candidates {
            if disconnects(g, &cutset) {
                return Ok(Some(StarCutset { center: x, cutset }));
            }
        }
    }
    Ok(None)
}

/// Whether `G - removed` has at least two components, by union-find.
fn disconnects(g: &Graph, removed: &[usize]) -> bool {
    let n = g.n();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (u, v) in g.edges() {
        if !gone[u] && !gone[v] {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
    }
    let mut roots = (0..n).filter(|&v| !gone[v]).map(|v| find(&mut parent, v));
    match roots.next() {
        Some(first) => roots.any(|r| r != first),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn cycle_enumeration() {
        let c6 = gen::cycle(6).unwrap();
        let all = enumerate_2joins(&c6, false).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|s| s.x1.contains(&0)));
        assert!(enumerate_2joins(&c6, true).unwrap().is_empty());
        assert_eq!(oracle_min_side(&c6, false).unwrap(), Some(3));
        assert_eq!(oracle_min_side(&c6, true).unwrap(), None);
    }

    #[test]
    fn complete_graph_has_none() {
        assert!(enumerate_2joins(&gen::complete(6).unwrap(), false).unwrap().is_empty());
    }

    #[test]
    fn double_hexagon_min_side() {
        let (g, _) = gen::double_hexagon();
        assert_eq!(oracle_min_side(&g, true).unwrap(), Some(6));
    }

    #[test]
    fn caps() {
        let big = gen::cycle(17).unwrap();
        assert_eq!(enumerate_2joins(&big, false), Err(Error::OracleCap { n: 17, limit: 16 }));
        let big = gen::cycle(13).unwrap();
        assert!(matches!(oracle_star_cutset(&big), Err(Error::OracleCap { .. })));
    }

    #[test]
    fn star_cutset_oracle() {
        let s = oracle_star_cutset(&gen::star(3).unwrap()).unwrap().unwrap();
        assert_eq!((s.center, s.cutset), (0, vec![0]));
        assert_eq!(oracle_star_cutset(&gen::cycle(6).unwrap()).unwrap(), None);
        assert!(oracle_star_cutset(&gen::double_k4().0).unwrap().is_some());
    }
}
