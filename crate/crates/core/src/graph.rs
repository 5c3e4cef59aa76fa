//! Simple undirected graphs on dense vertex ids, plus BFS trees.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph::new`]. The adjacency bit table
/// is `n * n` bits.
pub const MAX_VERTICES: usize = 20_000;

/// An immutable simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are sorted ascending and adjacency queries go through a
/// symmetric bit table, so [`Graph::has_edge`] is O(1).
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    bits: FixedBitSet,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut bits = FixedBitSet::with_capacity(n * n);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if bits.contains(u * n + v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            bits.insert(u * n + v);
            bits.insert(v * n + u);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, m: edges.len(), adj, bits })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits.contains(u * self.n + v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// The empty graph and the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given
    /// order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// BFS tree rooted at `root`.
    pub fn bfs_tree(&self, root: usize) -> Result<BfsTree> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange { vertex: root, n: self.n });
        }
        let mut level = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        level[root] = 0;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if order.len() != self.n {
            return Err(Error::Disconnected);
        }

        // smallest-id neighbor one level up; neighbor lists are sorted
        let mut parent = vec![None; self.n];
        let mut children = vec![Vec::new(); self.n];
        for v in 0..self.n {
            if v == root {
                continue;
            }
            let p = self.adj[v]
                .iter()
                .copied()
                .find(|&w| level[w] + 1 == level[v])
                .expect("non-root vertex has a neighbor one level up");
            parent[v] = Some(p);
            children[p].push(v);
        }

        // preorder with subtree intervals for descendant queries
        let mut preorder = Vec::with_capacity(self.n);
        let mut entry = vec![0; self.n];
        let mut exit = vec![0; self.n];
        let mut stack = vec![(root, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                exit[v] = preorder.len();
                continue;
            }
            entry[v] = preorder.len();
            preorder.push(v);
            stack.push((v, true));
            for &c in children[v].iter().rev() {
                stack.push((c, false));
            }
        }

        Ok(BfsTree { root, parent, level, children, preorder, entry, exit })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// A rooted BFS spanning tree: tree distance from the root equals graph
/// distance for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    children: Vec<Vec<usize>>,
    preorder: Vec<usize>,
    entry: Vec<usize>,
    exit: Vec<usize>,
}

impl BfsTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Tree edges as `(parent, child)`, ordered by child id.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (p, v)))
    }

    /// Descendants of `u` (including `u`) in DFS preorder.
    pub fn descendants_preorder(&self, u: usize) -> &[usize] {
        &self.preorder[self.entry[u]..self.exit[u]]
    }

    /// Descendants of `u`, including `u`, sorted ascending.
    pub fn descendants(&self, u: usize) -> Vec<usize> {
        let mut out = self.descendants_preorder(u).to_vec();
        out.sort_unstable();
        out
    }

    pub fn is_descendant(&self, v: usize, u: usize) -> bool {
        self.entry[u] <= self.entry[v] && self.entry[v] < self.exit[u]
    }

    /// The tree path from `v` up to the root, starting at `v`.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle6() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap()
    }

    #[test]
    fn build_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(4, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(1, 0)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(MAX_VERTICES + 1, &[]), Err(Error::TooLarge(MAX_VERTICES + 1)));
    }

    #[test]
    fn components() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2]]);
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        let g = Graph::edgeless(3).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn bfs_levels() {
        let t = cycle6().bfs_tree(0).unwrap();
        assert_eq!(t.levels(), &[0, 1, 2, 3, 2, 1]);
        assert_eq!(t.parent(3), Some(2));

        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.bfs_tree(1).unwrap().levels(), &[1, 0, 1]);

        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = k4.bfs_tree(2).unwrap();
        assert_eq!(t.levels(), &[1, 1, 0, 1]);
        for v in [0, 1, 3] {
            assert_eq!(t.parent(v), Some(2));
        }
        assert_eq!(t.parent(2), None);
        assert_eq!(t.children(2), &[0, 1, 3]);
    }

    #[test]
    fn bfs_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.bfs_tree(0), Err(Error::Disconnected));
    }

    #[test]
    fn descendants_on_cycle() {
        let t = cycle6().bfs_tree(0).unwrap();
        assert_eq!(t.descendants(0), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(t.descendants(1), vec![1, 2, 3]);
        assert_eq!(t.descendants(3), vec![3]);
        assert_eq!(t.ancestors(3), vec![3, 2, 1, 0]);
    }

    #[test]
    fn induced_relabels() {
        let h = cycle6().induced(&[4, 0, 5]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }
}
