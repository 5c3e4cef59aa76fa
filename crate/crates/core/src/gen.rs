//! Deterministic instance generators.
//!
//! [`random_connected`] draws from ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. Each attempt walks the pairs `u < v`
//! in lexicographic order, takes one `next_u64` per pair and keeps the edge
//! when `(x >> 11) * 2^-53 < p`. Attempts repeat on the same stream until
//! the sample is connected.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{classify_partition, TwoJoinSplit};

const MAX_ATTEMPTS: usize = 1_000_000;

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {k}")));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(k, &edges)
}

pub fn path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("complete graph needs at least 1 vertex".into()));
    }
    let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    Graph::new(k, &edges)
}

/// `K_{1,leaves}` with hub 0.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges)
}

/// Glues two graphs with a 2-join: `side2` is shifted by `side1.n()`, then
/// `a1 x a2` and `b1 x b2` are made complete.
pub fn planted(
    side1: &Graph,
    a1: &[usize],
    b1: &[usize],
    side2: &Graph,
    a2: &[usize],
    b2: &[usize],
) -> Result<(Graph, TwoJoinSplit)> {
    for (side, a, b) in [(side1, a1, b1), (side2, a2, b2)] {
        if side.n() < 3 {
            return Err(Error::InvalidParameter(format!("a side has {} vertices, at least 3 required", side.n())));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidParameter("A and B must be non-empty".into()));
        }
        if let Some(&v) = a.iter().chain(b).find(|&&v| v >= side.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: side.n() });
        }
        if a.iter().any(|v| b.contains(v)) {
            return Err(Error::InvalidParameter("A and B must be disjoint".into()));
        }
    }
    let shift = side1.n();
    let mut edges: Vec<_> = side1.edges().collect();
    edges.extend(side2.edges().map(|(u, v)| (u + shift, v + shift)));
    for (p, q) in [(a1, a2), (b1, b2)] {
        for &u in p {
            for &v in q {
                edges.push((u, v + shift));
            }
        }
    }
    let g = Graph::new(shift + side2.n(), &edges)?;
    let x1: Vec<usize> = (0..shift).collect();
    let split = classify_partition(&g, &x1)
        .ok_or_else(|| Error::InvalidParameter("planted partition is not a 2-join".into()))?;
    Ok((g, split))
}

fn hexagon_side() -> Graph {
    cycle(6).expect("hexagon")
}

/// Two hexagons joined with `A = {0, 1}` and `B = {3, 4}` on each side. Both
/// sides induce 6-cycles, so the planted 2-join is non-path.
pub fn double_hexagon() -> (Graph, TwoJoinSplit) {
    let h = hexagon_side();
    planted(&h, &[0, 1], &[3, 4], &h, &[0, 1], &[3, 4]).expect("double hexagon")
}

/// Two `K4`s joined with `A = {0, 1}` and `B = {2, 3}`. Has a star cutset.
pub fn double_k4() -> (Graph, TwoJoinSplit) {
    let k4 = complete(4).expect("K4");
    planted(&k4, &[0, 1], &[2, 3], &k4, &[0, 1], &[2, 3]).expect("double K4")
}

/// Two `k`-cycles joined through two adjacent vertices each for A and the
/// two opposite ones for B; `2k` vertices, `2k + 8` edges.
pub fn double_cycle(k: usize) -> Result<(Graph, TwoJoinSplit)> {
    if k < 6 {
        return Err(Error::InvalidParameter(format!("double cycle needs k >= 6, got {k}")));
    }
    let c = cycle(k)?;
    let h = k / 2;
    planted(&c, &[0, 1], &[h, h + 1], &c, &[0, 1], &[h, h + 1])
}

fn bernoulli(rng: &mut ChaCha8Rng, p: f64) -> bool {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    ((rng.next_u64() >> 11) as f64) * SCALE < p
}

/// A connected `G(n, p)` sample; see the module docs for the exact scheme.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("random graph needs at least 1 vertex".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for _ in 0..MAX_ATTEMPTS {
        edges.clear();
        for u in 0..n {
            for v in u + 1..n {
                if bernoulli(&mut rng, p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected sample for n = {n}, p = {p} after {MAX_ATTEMPTS} attempts"
    )))
}

/// Vertex names of [`figure1_graph`], indexed by id.
pub const FIGURE1_NAMES: [&str; 16] = [
    "a1", "a1'", "a2", "a2'", "b1", "b1'", "b2", "b2'", "w", "w1", "x", "x1", "y", "y1", "z", "z1",
];

/// Edges of [`figure1_graph`] by vertex name; the last eight are the cross
/// edges of its bold 2-join.
pub const FIGURE1_EDGES: [(&str, &str); 24] = [
    ("x", "x1"),
    ("x1", "w1"),
    ("w", "w1"),
    ("w", "b1'"),
    ("w1", "a1'"),
    ("x1", "b1"),
    ("a1'", "b1"),
    ("y", "a2"),
    ("y", "y1"),
    ("y1", "z1"),
    ("z", "z1"),
    ("z", "b2'"),
    ("b2", "y1"),
    ("a2'", "z1"),
    ("a2'", "b2"),
    ("x", "a1"),
    ("a1", "a2"),
    ("a1", "a2'"),
    ("a1'", "a2"),
    ("a1'", "a2'"),
    ("b1", "b2"),
    ("b1", "b2'"),
    ("b1'", "b2"),
    ("b1'", "b2'"),
];

pub fn figure1_id(name: &str) -> Option<usize> {
    FIGURE1_NAMES.iter().position(|&n| n == name)
}

/// A 16-vertex graph with 2-joins but no extreme 2-join.
pub fn figure1_graph() -> Graph {
    let edges: Vec<_> = FIGURE1_EDGES
        .iter()
        .map(|&(u, v)| (figure1_id(u).unwrap(), figure1_id(v).unwrap()))
        .collect();
    Graph::new(FIGURE1_NAMES.len(), &edges).expect("fixture edges are valid")
}

/// The eight bold cross edges of [`figure1_graph`] as sorted id pairs.
pub fn figure1_bold_edges() -> Vec<(usize, usize)> {
    let mut out: Vec<_> = FIGURE1_EDGES[16..]
        .iter()
        .map(|&(u, v)| {
            let (u, v) = (figure1_id(u).unwrap(), figure1_id(v).unwrap());
            (u.min(v), u.max(v))
        })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        assert_eq!(cycle(6).unwrap().m(), 6);
        assert_eq!(path(6).unwrap().m(), 5);
        assert_eq!(complete(6).unwrap().m(), 15);
        assert_eq!(path(1).unwrap().n(), 1);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn planted_fixtures() {
        let (g, s) = double_hexagon();
        assert_eq!(g.n(), 12);
        assert_eq!(s.a1, vec![0, 1]);
        assert_eq!(s.b2, vec![9, 10]);
        assert!(s.is_valid_for(&g));

        let (g, s) = double_k4();
        assert_eq!((g.n(), g.m()), (8, 20));
        assert!(s.is_valid_for(&g));

        let (g, _) = double_cycle(100).unwrap();
        assert_eq!((g.n(), g.m()), (200, 208));
    }

    #[test]
    fn planted_rejects_small_side() {
        let two = path(2).unwrap();
        let h = cycle(6).unwrap();
        assert!(planted(&h, &[0], &[3], &two, &[0], &[1]).is_err());
        assert!(planted(&h, &[0], &[0], &h, &[0], &[3]).is_err());
        assert!(planted(&h, &[], &[3], &h, &[0], &[3]).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_connected(6, 1.0, 7).unwrap(), complete(6).unwrap());
        assert_eq!(random_connected(1, 0.5, 7).unwrap().n(), 1);
        let a = random_connected(10, 0.3, 42).unwrap();
        let b = random_connected(10, 0.3, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert!(random_connected(0, 0.5, 1).is_err());
        assert!(random_connected(5, 0.0, 1).is_err());
    }

    #[test]
    fn figure1_tally() {
        let g = figure1_graph();
        assert_eq!((g.n(), g.m()), (16, 24));
        assert!(g.is_connected());
        assert_eq!(figure1_bold_edges().len(), 8);
    }
}
