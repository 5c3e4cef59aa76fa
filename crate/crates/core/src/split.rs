//! Proper 4-tuples, 2-join splits and the partition validator.

use std::fmt;

use crate::graph::Graph;

/// An ordered candidate anchor `(a1, a2, b1, b2)` for a 2-join: `a1, b1`
/// are meant for the first side, `a2, b2` for the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourTuple {
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
}

impl FourTuple {
    pub const fn new(a1: usize, a2: usize, b1: usize, b2: usize) -> Self {
        FourTuple { a1, a2, b1, b2 }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.a1, self.a2, self.b1, self.b2]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }

    /// The same anchor with the A and B roles exchanged.
    pub fn swap_roles(&self) -> Self {
        FourTuple::new(self.b1, self.b2, self.a1, self.a2)
    }

    /// The same anchor read from the other side.
    pub fn swap_sides(&self) -> Self {
        FourTuple::new(self.a2, self.a1, self.b2, self.b1)
    }

    /// Pairwise distinct, `a1a2` and `b1b2` edges, `a1b2` and `b1a2`
    /// non-edges. Ids outside the graph make the tuple improper.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| vs[i] != vs[j]));
        distinct
            && g.has_edge(self.a1, self.a2)
            && g.has_edge(self.b1, self.b2)
            && !g.has_edge(self.a1, self.b2)
            && !g.has_edge(self.b1, self.a2)
    }
}

impl fmt::Display for FourTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a1, self.a2, self.b1, self.b2)
    }
}

pub fn is_proper(g: &Graph, z: &FourTuple) -> bool {
    z.is_proper(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }

    pub fn from_index(i: usize) -> Option<Side> {
        match i {
            1 => Some(Side::First),
            2 => Some(Side::Second),
            _ => None,
        }
    }
}

/// A split `(X1, X2, A1, B1, A2, B2)` of a 2-join. All sets are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoJoinSplit {
    pub x1: Vec<usize>,
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
    pub x2: Vec<usize>,
    pub a2: Vec<usize>,
    pub b2: Vec<usize>,
}

/// Borrowed view of one side of a split.
#[derive(Debug, Clone, Copy)]
pub struct SideView<'a> {
    pub x: &'a [usize],
    pub a: &'a [usize],
    pub b: &'a [usize],
}

impl SideView<'_> {
    /// `X \ (A ∪ B)`.
    pub fn c(&self) -> Vec<usize> {
        self.x
            .iter()
            .copied()
            .filter(|v| self.a.binary_search(v).is_err() && self.b.binary_search(v).is_err())
            .collect()
    }
}

impl TwoJoinSplit {
    pub fn side(&self, side: Side) -> SideView<'_> {
        match side {
            Side::First => SideView { x: &self.x1, a: &self.a1, b: &self.b1 },
            Side::Second => SideView { x: &self.x2, a: &self.a2, b: &self.b2 },
        }
    }

    pub fn c1(&self) -> Vec<usize> {
        self.side(Side::First).c()
    }

    pub fn c2(&self) -> Vec<usize> {
        self.side(Side::Second).c()
    }

    pub fn swap_sides(self) -> Self {
        TwoJoinSplit { x1: self.x2, a1: self.a2, b1: self.b2, x2: self.x1, a2: self.a1, b2: self.b1 }
    }

    pub fn swap_roles(self) -> Self {
        TwoJoinSplit { a1: self.b1, b1: self.a1, a2: self.b2, b2: self.a2, ..self }
    }

    pub fn min_side_size(&self) -> usize {
        self.x1.len().min(self.x2.len())
    }

    /// The smaller side; ties go to the lexicographically smaller set.
    pub fn minimal_side(&self) -> Side {
        match self.x1.len().cmp(&self.x2.len()) {
            std::cmp::Ordering::Less => Side::First,
            std::cmp::Ordering::Greater => Side::Second,
            std::cmp::Ordering::Equal if self.x1 <= self.x2 => Side::First,
            std::cmp::Ordering::Equal => Side::Second,
        }
    }

    /// Ordering key used to pick a canonical minimally-sided answer.
    pub fn min_side_key(&self) -> (usize, &[usize]) {
        let side = self.side(self.minimal_side());
        (side.x.len(), side.x)
    }

    /// `a1, b1` in one side and `a2, b2` in the other, in either side order.
    pub fn is_compatible(&self, z: &FourTuple) -> bool {
        let in1 = |v: usize| self.x1.binary_search(&v).is_ok();
        let in2 = |v: usize| self.x2.binary_search(&v).is_ok();
        (in1(z.a1) && in1(z.b1) && in2(z.a2) && in2(z.b2))
            || (in2(z.a1) && in2(z.b1) && in1(z.a2) && in1(z.b2))
    }

    /// Cross edges `A1 x A2` then `B1 x B2`, each as `(side 1, side 2)`.
    pub fn cross_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.a1.len() * self.a2.len() + self.b1.len() * self.b2.len());
        for (p, q) in [(&self.a1, &self.a2), (&self.b1, &self.b2)] {
            for &u in p {
                for &v in q {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when this is a split of a 2-join of `g`, up to the A/B swap.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        match classify_partition(g, &self.x1) {
            Some(s) => s == *self || s.swap_roles() == *self,
            None => false,
        }
    }
}

/// Decides whether `(x1, V \ x1)` is a 2-join of `g` and returns its split.
///
/// The split is unique up to exchanging the roles of A and B; the returned
/// one has the smallest cross-incident vertex of `x1` in `A1`. Ids out of
/// range, repeated ids and sides with fewer than three vertices give `None`.
pub fn classify_partition(g: &Graph, x1: &[usize]) -> Option<TwoJoinSplit> {
    let n = g.n();
    let mut in_x1 = vec![false; n];
    for &v in x1 {
        if v >= n || in_x1[v] {
            return None;
        }
        in_x1[v] = true;
    }
    classify_mask(g, &in_x1)
}

pub(crate) fn classify_mask(g: &Graph, in_x1: &[bool]) -> Option<TwoJoinSplit> {
    let n = g.n();
    let size1 = in_x1.iter().filter(|&&b| b).count();
    if size1 < 3 || n - size1 < 3 {
        return None;
    }

    // Every X1 vertex sees A2, B2 or nothing across; the two non-empty
    // cross neighborhoods must be disjoint.
    let mut first: Option<Vec<usize>> = None;
    let mut second: Option<Vec<usize>> = None;
    let mut a1 = Vec::new();
    let mut b1 = Vec::new();
    let mut x1 = Vec::with_capacity(size1);
    let mut x2 = Vec::with_capacity(n - size1);
    let mut cross = Vec::new();
    for v in 0..n {
        if !in_x1[v] {
            x2.push(v);
            continue;
        }
        x1.push(v);
        cross.clear();
        cross.extend(g.neighbors(v).iter().copied().filter(|&w| !in_x1[w]));
        if cross.is_empty() {
            continue;
        }
        match (&first, &second) {
            (None, _) => {
                first = Some(cross.clone());
                a1.push(v);
            }
            (Some(p), _) if *p == cross => a1.push(v),
            (Some(_), None) => {
                second = Some(cross.clone());
                b1.push(v);
            }
            (Some(_), Some(q)) if *q == cross => b1.push(v),
            _ => return None,
        }
    }
    let (a2, b2) = (first?, second?);
    if a2.iter().any(|v| b2.binary_search(v).is_ok()) {
        return None;
    }
    Some(TwoJoinSplit { x1, a1, b1, x2, a2, b2 })
}

/// Parses the six-line split format (`X1: 0 1 2` ...). Set order is free
/// but every key must appear once.
pub fn parse_split(text: &str) -> Result<TwoJoinSplit, String> {
    let mut fields: [Option<Vec<usize>>; 6] = Default::default();
    const KEYS: [&str; 6] = ["X1", "A1", "B1", "X2", "A2", "B2"];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: expected '<key>: <ids>'", idx + 1))?;
        let Some(slot) = KEYS.iter().position(|k| *k == key.trim()) else {
            // other keys (found, certificate_tuples, ...) are ignored
            continue;
        };
        if fields[slot].is_some() {
            return Err(format!("line {}: repeated key {}", idx + 1, KEYS[slot]));
        }
        let mut ids = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| format!("line {}: invalid id '{t}'", idx + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        ids.sort_unstable();
        fields[slot] = Some(ids);
    }
    let mut it = fields.into_iter().zip(KEYS);
    let mut take = || {
        let (f, k) = it.next().expect("six keys");
        f.ok_or_else(|| format!("missing key {k}"))
    };
    Ok(TwoJoinSplit { x1: take()?, a1: take()?, b1: take()?, x2: take()?, a2: take()?, b2: take()? })
}

fn join_ids(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// The six-line `key: ids` form read by [`parse_split`].
pub fn format_split(s: &TwoJoinSplit) -> String {
    format!(
        "X1: {}\nA1: {}\nB1: {}\nX2: {}\nA2: {}\nB2: {}\n",
        join_ids(&s.x1),
        join_ids(&s.a1),
        join_ids(&s.b1),
        join_ids(&s.x2),
        join_ids(&s.a2),
        join_ids(&s.b2)
    )
}
