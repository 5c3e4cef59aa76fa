//! 2-join detectors built on the universal set and the forcing procedure,
//! plus path-side tests, bad-path analysis, star cutsets and blocks of
//! decomposition.

use crate::error::{Error, Result};
use crate::forcing::{force_unchecked, SeedSide};
use crate::graph::Graph;
use crate::split::{classify_mask, classify_partition, FourTuple, Side, TwoJoinSplit};
use crate::universal::universal_set;

/// Execution options shared by the detectors. Results do not depend on them.
#[derive(Debug, Clone, Copy, Default)]
pub struct DetectOptions {
    /// Evaluate candidate tuples on the rayon pool, committing results in
    /// sequential order. Ignored without the `parallel` feature.
    pub parallel: bool,
}

/// Outcome of a universal-set sweep.
#[derive(Debug, Clone)]
pub struct Report {
    pub split: Option<TwoJoinSplit>,
    /// The universal set that was swept. On a negative answer it is the
    /// certificate: every tuple was checked and none admits a 2-join.
    pub universal: Vec<FourTuple>,
    /// Tuples examined up to and including the successful one.
    pub tried: usize,
}

impl Report {
    pub fn certificate(&self) -> Option<&[FourTuple]> {
        match self.split {
            Some(_) => None,
            None => Some(&self.universal),
        }
    }
}

#[cfg(feature = "parallel")]
fn first_hit<R: Send>(
    items: &[FourTuple],
    opts: DetectOptions,
    f: impl Fn(&FourTuple) -> Option<R> + Sync + Send,
) -> Option<(usize, R)> {
    use rayon::prelude::*;
    if opts.parallel {
        items.par_iter().enumerate().find_map_first(|(i, z)| f(z).map(|r| (i, r)))
    } else {
        items.iter().enumerate().find_map(|(i, z)| f(z).map(|r| (i, r)))
    }
}

#[cfg(not(feature = "parallel"))]
fn first_hit<R>(
    items: &[FourTuple],
    _opts: DetectOptions,
    f: impl Fn(&FourTuple) -> Option<R>,
) -> Option<(usize, R)> {
    items.iter().enumerate().find_map(|(i, z)| f(z).map(|r| (i, r)))
}

/// Smallest split under [`canonical_key`] over all per-tuple results.
#[cfg(feature = "parallel")]
fn best_over(
    items: &[FourTuple],
    opts: DetectOptions,
    f: impl Fn(&FourTuple) -> Option<TwoJoinSplit> + Sync + Send,
) -> Option<TwoJoinSplit> {
    use rayon::prelude::*;
    if opts.parallel {
        items
            .par_iter()
            .filter_map(&f)
            .reduce_with(|x, y| if canonical_key(&y) < canonical_key(&x) { y } else { x })
    } else {
        items.iter().filter_map(f).min_by(|x, y| canonical_key(x).cmp(&canonical_key(y)))
    }
}

#[cfg(not(feature = "parallel"))]
fn best_over(
    items: &[FourTuple],
    _opts: DetectOptions,
    f: impl Fn(&FourTuple) -> Option<TwoJoinSplit>,
) -> Option<TwoJoinSplit> {
    items.iter().filter_map(f).min_by(|x, y| canonical_key(x).cmp(&canonical_key(y)))
}

fn canonical_key(s: &TwoJoinSplit) -> (usize, &[usize]) {
    (s.x1.len(), &s.x1)
}

/// Same partition with the A/B roles chosen by [`classify_partition`].
fn normalized(g: &Graph, s: &TwoJoinSplit) -> TwoJoinSplit {
    classify_partition(g, &s.x1).expect("detector output is a 2-join")
}

/// Re-derives `s` with its minimal side first and normalized A/B roles.
fn minimal_side_first(g: &Graph, s: TwoJoinSplit) -> TwoJoinSplit {
    let s = match s.minimal_side() {
        Side::First => s,
        Side::Second => s.swap_sides(),
    };
    classify_partition(g, &s.x1).expect("forcing output is a 2-join")
}

/// A 2-join of `g`, or `None` when `g` has none.
pub fn detect_2join(g: &Graph) -> Result<Option<TwoJoinSplit>> {
    Ok(detect_2join_report(g, DetectOptions::default())?.split)
}

pub fn detect_2join_report(g: &Graph, opts: DetectOptions) -> Result<Report> {
    g.require_connected()?;
    let universal = universal_set(g)?;
    let hit = first_hit(&universal, opts, |z| crate::forcing::find_compatible_unchecked(g, z));
    Ok(match hit {
        Some((i, split)) => Report { split: Some(normalized(g, &split)), universal, tried: i + 1 },
        None => {
            let tried = universal.len();
            Report { split: None, universal, tried }
        }
    })
}

/// True when `G[X_side]` is a chordless path from its `A` vertex to its `B`
/// vertex with all interior vertices in `C`.
pub fn is_path_side(g: &Graph, s: &TwoJoinSplit, side: Side) -> bool {
    let view = s.side(side);
    let (&[a], &[b]) = (view.a, view.b) else {
        return false;
    };
    let in_x = |v: usize| view.x.binary_search(&v).is_ok();
    let inner_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| in_x(w)).count();
    if inner_degree(a) != 1 || inner_degree(b) != 1 {
        return false;
    }
    // walk from a; every step must have exactly one way forward
    let (mut prev, mut cur, mut visited) = (usize::MAX, a, 1);
    while cur != b {
        let mut next = g.neighbors(cur).iter().copied().filter(|&w| in_x(w) && w != prev);
        let Some(step) = next.next() else { return false };
        if next.next().is_some() {
            return false;
        }
        if step != b && inner_degree(step) != 2 {
            return false;
        }
        prev = cur;
        cur = step;
        visited += 1;
        if visited > view.x.len() {
            return false;
        }
    }
    visited == view.x.len()
}

pub fn is_nonpath(g: &Graph, s: &TwoJoinSplit) -> bool {
    !is_path_side(g, s, Side::First) && !is_path_side(g, s, Side::Second)
}

/// An induced path from `a_i` to `b_i` of length at least 2 whose interior
/// vertices have degree 2 and avoid the other side's anchors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadPath {
    /// The side whose anchors are the endpoints.
    pub side: Side,
    /// Vertex sequence from `a_i` to `b_i`.
    pub vertices: Vec<usize>,
}

impl BadPath {
    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadPathAnalysis {
    pub paths: Vec<BadPath>,
    /// Smallest vertex outside the tuple that is interior to no bad path.
    pub uncovered: Option<usize>,
}

impl BadPathAnalysis {
    pub fn k(&self) -> usize {
        self.paths.len()
    }
}

/// Enumerates the bad paths of `z` by walking maximal chains of degree-2
/// vertices outside the tuple.
pub fn bad_paths(g: &Graph, z: &FourTuple) -> BadPathAnalysis {
    let n = g.n();
    let mut covered = vec![false; n];
    let mut visited = vec![false; n];
    let mut paths = Vec::new();
    let chain_vertex = |v: usize| g.degree(v) == 2 && !z.contains(v);

    for start in 0..n {
        if visited[start] || !chain_vertex(start) {
            continue;
        }
        // extend in both directions from `start`
        let mut ends = [usize::MAX; 2];
        let mut halves: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        visited[start] = true;
        let mut closed = false;
        for dir in 0..2 {
            let (mut prev, mut cur) = (start, g.neighbors(start)[dir]);
            loop {
                if cur == start {
                    closed = true;
                    break;
                }
                if !chain_vertex(cur) {
                    ends[dir] = cur;
                    break;
                }
                visited[cur] = true;
                halves[dir].push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            if closed {
                break;
            }
        }
        if closed {
            continue;
        }
        let mut chain: Vec<usize> = halves[0].iter().rev().copied().collect();
        chain.push(start);
        chain.extend(&halves[1]);

        let (x, y) = (ends[0], ends[1]);
        let side = if (x, y) == (z.a1, z.b1) || (x, y) == (z.b1, z.a1) {
            Side::First
        } else if (x, y) == (z.a2, z.b2) || (x, y) == (z.b2, z.a2) {
            Side::Second
        } else {
            continue;
        };
        if g.has_edge(x, y) {
            continue;
        }
        let (a, b) = match side {
            Side::First => (z.a1, z.b1),
            Side::Second => (z.a2, z.b2),
        };
        if x != a {
            chain.reverse();
        }
        let mut vertices = Vec::with_capacity(chain.len() + 2);
        vertices.push(a);
        vertices.extend(chain);
        vertices.push(b);
        for &v in &vertices[1..vertices.len() - 1] {
            covered[v] = true;
        }
        paths.push(BadPath { side, vertices });
    }
    let uncovered = (0..n).find(|&v| !covered[v] && !z.contains(v));
    BadPathAnalysis { paths, uncovered }
}

/// Per-tuple step of the non-path detector.
fn nonpath_for_tuple(g: &Graph, z: &FourTuple) -> Option<TwoJoinSplit> {
    if g.n() < 6 {
        return None;
    }
    let analysis = bad_paths(g, z);
    if let Some(u) = analysis.uncovered {
        for (seed, side) in [([z.a1, z.b1, u], SeedSide::First), ([z.a2, z.b2, u], SeedSide::Second)] {
            if let Some(s) = force_unchecked(g, z, &seed, side).outcome.split() {
                if is_nonpath(g, &s) {
                    return Some(s);
                }
            }
        }
        return None;
    }

    // The graph is the union of the bad paths and the two tuple edges.
    let k = analysis.k();
    let on_path = |v: usize| analysis.paths.iter().any(|p| p.vertices.contains(&v));
    if k <= 2 || (k == 3 && z.vertices().into_iter().all(on_path)) {
        return None;
    }
    let mut in_x = vec![false; g.n()];
    for (i, p) in analysis.paths.iter().enumerate() {
        for q in analysis.paths[i + 1..].iter().filter(|q| q.side == p.side) {
            in_x.iter_mut().for_each(|b| *b = false);
            for &v in p.vertices.iter().chain(&q.vertices) {
                in_x[v] = true;
            }
            if let Some(s) = classify_mask(g, &in_x) {
                if is_nonpath(g, &s) {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// A non-path 2-join of `g`, or `None` when `g` has none.
pub fn detect_nonpath_2join(g: &Graph) -> Result<Option<TwoJoinSplit>> {
    Ok(detect_nonpath_2join_report(g, DetectOptions::default())?.split)
}

pub fn detect_nonpath_2join_report(g: &Graph, opts: DetectOptions) -> Result<Report> {
    g.require_connected()?;
    let universal = universal_set(g)?;
    let hit = first_hit(&universal, opts, |z| nonpath_for_tuple(g, z));
    Ok(match hit {
        Some((i, split)) => Report { split: Some(normalized(g, &split)), universal, tried: i + 1 },
        None => {
            let tried = universal.len();
            Report { split: None, universal, tried }
        }
    })
}

/// Which per-tuple check a certificate replays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    TwoJoin,
    NonPath,
}

/// Replays a negative answer: every tuple must be proper and yield nothing.
pub fn replay_certificate(g: &Graph, tuples: &[FourTuple], kind: CertificateKind) -> bool {
    tuples.iter().all(|z| {
        z.is_proper(g)
            && match kind {
                CertificateKind::TwoJoin => crate::forcing::find_compatible_unchecked(g, z).is_none(),
                CertificateKind::NonPath => nonpath_for_tuple(g, z).is_none(),
            }
    })
}

/// A star cutset: `center ∈ cutset`, every other member is adjacent to the
/// center, and removing the cutset disconnects the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCutset {
    pub center: usize,
    pub cutset: Vec<usize>,
}

impl StarCutset {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut removed = vec![false; n];
        for &v in &self.cutset {
            if v >= n {
                return false;
            }
            removed[v] = true;
        }
        if self.center >= n
            || !removed[self.center]
            || self.cutset.iter().any(|&v| v != self.center && !g.has_edge(v, self.center))
        {
            return false;
        }
        components_avoiding(g, &removed).len() >= 2
    }
}

/// Connected components of `G - removed`.
fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Finds a star cutset. For each center `x` in ascending order: several
/// components outside `N[x]` give `N[x]`; a single one plus a neighbor with
/// nothing outside `N[x]` gives `N[x]` minus that neighbor; `N[x] = V` plus
/// two non-adjacent neighbors gives everything but those two.
pub fn has_star_cutset(g: &Graph) -> Result<Option<StarCutset>> {
    g.require_connected()?;
    let n = g.n();
    let mut closed = vec![false; n];
    for x in 0..n {
        closed.iter_mut().for_each(|b| *b = false);
        closed[x] = true;
        for &w in g.neighbors(x) {
            closed[w] = true;
        }
        let mut nbhd: Vec<usize> = g.neighbors(x).to_vec();
        nbhd.push(x);
        nbhd.sort_unstable();

        match components_avoiding(g, &closed).len() {
            0 => {
                let nb = g.neighbors(x);
                for (i, &u) in nb.iter().enumerate() {
                    if let Some(&w) = nb[i + 1..].iter().find(|&&w| !g.has_edge(u, w)) {
                        let cutset = (0..n).filter(|&v| v != u && v != w).collect();
                        return Ok(Some(StarCutset { center: x, cutset }));
                    }
                }
            }
            1 => {
                if let Some(&v) =
                    g.neighbors(x).iter().find(|&&v| g.neighbors(v).iter().all(|&w| closed[w]))
                {
                    nbhd.retain(|&w| w != v);
                    return Ok(Some(StarCutset { center: x, cutset: nbhd }));
                }
            }
            _ => return Ok(Some(StarCutset { center: x, cutset: nbhd })),
        }
    }
    Ok(None)
}

/// Runs forcing from every tuple with every extra seed and returns the
/// non-path (or any, if `keep_paths`) split with the fewest vertices on one
/// side, minimal side first.
fn minimal_sweep(
    g: &Graph,
    opts: DetectOptions,
    keep_paths: bool,
    seeds: impl Fn(&FourTuple) -> Vec<Vec<usize>> + Sync + Send,
) -> Result<Option<TwoJoinSplit>> {
    let universal = universal_set(g)?;
    let per_tuple = |z: &FourTuple| -> Option<TwoJoinSplit> {
        let mut best: Option<TwoJoinSplit> = None;
        for extra in seeds(z) {
            for side in [SeedSide::First, SeedSide::Second] {
                let mut seed = match side {
                    SeedSide::First => vec![z.a1, z.b1],
                    SeedSide::Second => vec![z.a2, z.b2],
                };
                seed.extend(&extra);
                let Some(s) = force_unchecked(g, z, &seed, side).outcome.split() else {
                    continue;
                };
                if !keep_paths && !is_nonpath(g, &s) {
                    continue;
                }
                let s = minimal_side_first(g, s);
                if best.as_ref().is_none_or(|b| canonical_key(&s) < canonical_key(b)) {
                    best = Some(s);
                }
            }
        }
        best
    };
    Ok(best_over(&universal, opts, per_tuple))
}

fn single_seeds(g: &Graph, z: &FourTuple) -> Vec<Vec<usize>> {
    g.vertices().filter(|&u| !z.contains(u)).map(|u| vec![u]).collect()
}

/// A minimally-sided non-path 2-join of a graph without star cutsets, with
/// its minimal side as `X1`. A star cutset is reported as an error carrying
/// the witness.
pub fn minimally_sided_nonpath_2join(g: &Graph) -> Result<Option<TwoJoinSplit>> {
    minimally_sided_nonpath_2join_with(g, DetectOptions::default())
}

pub fn minimally_sided_nonpath_2join_with(g: &Graph, opts: DetectOptions) -> Result<Option<TwoJoinSplit>> {
    if let Some(star) = has_star_cutset(g)? {
        return Err(Error::StarCutset(star));
    }
    minimal_sweep(g, opts, false, |z| single_seeds(g, z))
}

/// A minimally-sided 2-join (path 2-joins allowed), minimal side as `X1`.
pub fn minimally_sided_2join(g: &Graph) -> Result<Option<TwoJoinSplit>> {
    minimally_sided_2join_with(g, DetectOptions::default())
}

pub fn minimally_sided_2join_with(g: &Graph, opts: DetectOptions) -> Result<Option<TwoJoinSplit>> {
    g.require_connected()?;
    minimal_sweep(g, opts, true, |z| single_seeds(g, z))
}

/// Minimally-sided non-path 2-join for arbitrary connected graphs, seeding
/// with vertex pairs.
pub fn minimally_sided_nonpath_general(g: &Graph) -> Result<Option<TwoJoinSplit>> {
    minimally_sided_nonpath_general_with(g, DetectOptions::default())
}

pub fn minimally_sided_nonpath_general_with(g: &Graph, opts: DetectOptions) -> Result<Option<TwoJoinSplit>> {
    g.require_connected()?;
    minimal_sweep(g, opts, false, |z| {
        let free: Vec<usize> = g.vertices().filter(|&u| !z.contains(u)).collect();
        let mut out = Vec::new();
        for (i, &u) in free.iter().enumerate() {
            out.push(vec![u]);
            for &v in &free[i + 1..] {
                out.push(vec![u, v]);
            }
        }
        out
    })
}

/// One block of decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// Original id of each kept vertex; kept vertices are `0..original.len()`.
    pub original: Vec<usize>,
    /// Marker path ids, from the vertex complete to `A` to the one complete
    /// to `B`.
    pub marker: Vec<usize>,
}

/// Default marker-path length used by the CLI.
pub const DEFAULT_MARKER_LENGTH: usize = 3;

fn build_block(g: &Graph, keep: &[usize], a: &[usize], b: &[usize], length: usize) -> Block {
    let k = keep.len();
    let base = g.induced(keep);
    let local = |v: usize| keep.binary_search(&v).expect("A and B lie in the kept side");
    let marker: Vec<usize> = (k..=k + length).collect();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend(a.iter().map(|&v| (local(v), marker[0])));
    edges.extend(b.iter().map(|&v| (local(v), marker[length])));
    edges.extend(marker.windows(2).map(|w| (w[0], w[1])));
    let graph = Graph::new(k + length + 1, &edges).expect("block is simple");
    Block { graph, original: keep.to_vec(), marker }
}

/// Blocks `(G1, G2)`: `G1` keeps `X1` and replaces `X2` by a chordless
/// marker path with `length` edges, `G2` symmetrically.
pub fn decompose_blocks(g: &Graph, s: &TwoJoinSplit, length: usize) -> Result<(Block, Block)> {
    if length < 1 {
        return Err(Error::InvalidParameter("marker path length must be at least 1".into()));
    }
    if !s.is_valid_for(g) {
        return Err(Error::InvalidParameter("split is not a 2-join of the graph".into()));
    }
    Ok((
        build_block(g, &s.x1, &s.a1, &s.b1, length),
        build_block(g, &s.x2, &s.a2, &s.b2, length),
    ))
}
