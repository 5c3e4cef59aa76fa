//! Linear-time forcing: given a proper 4-tuple and a seed set, grow the
//! smallest first side of a compatible 2-join, or prove none exists.
//!
//! The working state is a partition `(S, T)` with `S` the forced part of
//! the first side, plus the candidate cross neighborhoods `A` (of `a1`)
//! and `B` (of `b1`) inside `T`. Every vertex outside the tuple carries a
//! mark recording whether it sees `a2`, `b2`, both, or neither. Marked
//! vertices of `S` are explored in ascending id order; exploring forces
//! into `S` every vertex of `T` that would break the required cross
//! neighborhood of the explored vertex.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{FourTuple, TwoJoinSplit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Unmarked,
    /// Adjacent to neither `a2` nor `b2`.
    Epsilon,
    /// Adjacent to `a2` only.
    Alpha,
    /// Adjacent to `b2` only.
    Beta,
    /// Adjacent to both `a2` and `b2`: may never enter the first side.
    AlphaBeta,
}

/// Why a forcing run found nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// A vertex adjacent to both `a2` and `b2` was forced into `S`.
    Conflict { vertex: usize },
    /// Fewer than three vertices remained for the second side.
    SecondSideTooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcingOutcome {
    Found(TwoJoinSplit),
    Absent(Failure),
}

impl ForcingOutcome {
    pub fn split(self) -> Option<TwoJoinSplit> {
        match self {
            ForcingOutcome::Found(s) => Some(s),
            ForcingOutcome::Absent(_) => None,
        }
    }
}

/// Result of one forcing run with its work counters.
#[derive(Debug, Clone)]
pub struct ForcingRun {
    pub outcome: ForcingOutcome,
    /// Adjacency-list entries read during the run.
    pub adjacency_scans: usize,
    pub explored: usize,
}

/// Snapshot-able working state of a forcing run, oriented so that the seed
/// contains `a1` and `b1`.
pub struct ForcingState<'g> {
    g: &'g Graph,
    z: FourTuple,
    seed: Vec<usize>,
    in_s: Vec<bool>,
    in_a: Vec<bool>,
    in_b: Vec<bool>,
    a_list: Vec<usize>,
    b_list: Vec<usize>,
    mark: Vec<Mark>,
    s_len: usize,
    queue: BinaryHeap<Reverse<usize>>,
    scans: usize,
}

impl<'g> ForcingState<'g> {
    fn new(g: &'g Graph, z: FourTuple, seed: &[usize]) -> Self {
        let n = g.n();
        let mut state = ForcingState {
            g,
            z,
            seed: seed.to_vec(),
            in_s: vec![false; n],
            in_a: vec![false; n],
            in_b: vec![false; n],
            a_list: Vec::new(),
            b_list: Vec::new(),
            mark: vec![Mark::Epsilon; n],
            s_len: 0,
            queue: BinaryHeap::new(),
            scans: 0,
        };
        for &v in seed {
            state.in_s[v] = true;
        }
        state.s_len = seed.len();

        for &w in g.neighbors(z.a1) {
            if !state.in_s[w] {
                state.in_a[w] = true;
                state.a_list.push(w);
            }
        }
        for &w in g.neighbors(z.b1) {
            if !state.in_s[w] {
                state.in_b[w] = true;
                state.b_list.push(w);
            }
        }
        state.scans += g.degree(z.a1) + g.degree(z.b1);

        for v in z.vertices() {
            state.mark[v] = Mark::Unmarked;
        }
        for &w in g.neighbors(z.a2) {
            if state.mark[w] != Mark::Unmarked {
                state.mark[w] = Mark::Alpha;
            }
        }
        for &w in g.neighbors(z.b2) {
            state.mark[w] = match state.mark[w] {
                Mark::Alpha => Mark::AlphaBeta,
                Mark::Unmarked => Mark::Unmarked,
                _ => Mark::Beta,
            };
        }
        state.scans += g.degree(z.a2) + g.degree(z.b2);

        for &v in seed {
            if state.mark[v] != Mark::Unmarked {
                state.queue.push(Reverse(v));
            }
        }

        let both: Vec<usize> = state.a_list.iter().copied().filter(|&w| state.in_b[w]).collect();
        state.move_to_s(&both);
        state
    }

    fn move_to_s(&mut self, ys: &[usize]) {
        for &y in ys {
            debug_assert!(!self.in_s[y]);
            self.in_s[y] = true;
            self.in_a[y] = false;
            self.in_b[y] = false;
            self.s_len += 1;
            if self.mark[y] != Mark::Unmarked {
                self.queue.push(Reverse(y));
            }
        }
    }

    /// Drops the entries of `list` that have left the set.
    fn live(list: &mut Vec<usize>, member: &[bool]) {
        list.retain(|&w| member[w]);
    }

    /// `set Δ (N(x) ∩ T)` for `set` one of A or B.
    fn symmetric_difference(&mut self, x: usize, use_a: bool) -> Vec<usize> {
        let g = self.g;
        let (list, member) = if use_a {
            (&mut self.a_list, &self.in_a)
        } else {
            (&mut self.b_list, &self.in_b)
        };
        Self::live(list, member);
        let mut out: Vec<usize> = list.iter().copied().filter(|&w| !g.has_edge(x, w)).collect();
        out.extend(g.neighbors(x).iter().copied().filter(|&w| !self.in_s[w] && !member[w]));
        self.scans += g.degree(x);
        out
    }

    fn explore(&mut self, x: usize) -> Option<Failure> {
        let ys = match self.mark[x] {
            Mark::Unmarked => return None,
            Mark::AlphaBeta => return Some(Failure::Conflict { vertex: x }),
            Mark::Alpha => self.symmetric_difference(x, true),
            Mark::Beta => self.symmetric_difference(x, false),
            Mark::Epsilon => {
                self.scans += self.g.degree(x);
                self.g.neighbors(x).iter().copied().filter(|&w| !self.in_s[w]).collect()
            }
        };
        self.move_to_s(&ys);
        self.mark[x] = Mark::Unmarked;
        None
    }

    fn finish(&self) -> ForcingOutcome {
        let n = self.g.n();
        if n - self.s_len < 3 {
            return ForcingOutcome::Absent(Failure::SecondSideTooSmall);
        }
        let z = self.z;
        let g = self.g;
        let pick = |in_side: bool, anchor: usize| -> Vec<usize> {
            g.neighbors(anchor).iter().copied().filter(|&w| self.in_s[w] == in_side).collect()
        };
        ForcingOutcome::Found(TwoJoinSplit {
            x1: self.s(),
            a1: pick(true, z.a2),
            b1: pick(true, z.b2),
            x2: self.t(),
            a2: pick(false, z.a1),
            b2: pick(false, z.b1),
        })
    }

    pub fn tuple(&self) -> FourTuple {
        self.z
    }

    pub fn s(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_s[v]).collect()
    }

    pub fn t(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| !self.in_s[v]).collect()
    }

    pub fn a(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_a[v]).collect()
    }

    pub fn b(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_b[v]).collect()
    }

    pub fn mark(&self, v: usize) -> Mark {
        self.mark[v]
    }

    /// Re-checks the state invariants from scratch: the seed lies in `S`,
    /// `a2, b2` lie in `T`, `A` and `B` are inside `T`, and each unmarked
    /// vertex of `S` has `T`-neighborhood `A`, `B` or nothing according to
    /// its adjacency to `a2` and `b2`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let g = self.g;
        let z = self.z;
        if let Some(v) = self.seed.iter().find(|&&v| !self.in_s[v]) {
            return Err(format!("seed vertex {v} left S"));
        }
        if self.in_s[z.a2] || self.in_s[z.b2] {
            return Err("a2 or b2 entered S".into());
        }
        if let Some(v) = (0..g.n()).find(|&v| (self.in_a[v] || self.in_b[v]) && self.in_s[v]) {
            return Err(format!("vertex {v} of A or B is in S"));
        }
        let a = self.a();
        let b = self.b();
        for v in (0..g.n()).filter(|&v| self.in_s[v] && self.mark[v] == Mark::Unmarked) {
            let t_nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !self.in_s[w]).collect();
            let expected: &[usize] = match (g.has_edge(v, z.a2), g.has_edge(v, z.b2)) {
                (true, false) => &a,
                (false, true) => &b,
                (false, false) => &[],
                (true, true) => return Err(format!("unmarked vertex {v} of S sees both a2 and b2")),
            };
            if t_nbrs != expected {
                return Err(format!("unmarked vertex {v} of S has T-neighborhood {t_nbrs:?}, expected {expected:?}"));
            }
        }
        Ok(())
    }
}

fn run_oriented(
    g: &Graph,
    z: FourTuple,
    seed: &[usize],
    observer: &mut dyn FnMut(&ForcingState<'_>),
) -> ForcingRun {
    let mut state = ForcingState::new(g, z, seed);
    let mut explored = 0;
    while let Some(Reverse(x)) = state.queue.pop() {
        explored += 1;
        if let Some(failure) = state.explore(x) {
            return ForcingRun {
                outcome: ForcingOutcome::Absent(failure),
                adjacency_scans: state.scans,
                explored,
            };
        }
        observer(&state);
    }
    ForcingRun { outcome: state.finish(), adjacency_scans: state.scans, explored }
}

/// Which anchors a seed set contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SeedSide {
    First,
    Second,
}

fn check_seed(g: &Graph, z: &FourTuple, s0: &[usize]) -> Result<SeedSide> {
    if !z.is_proper(g) {
        return Err(Error::NotProper(z.a1, z.a2, z.b1, z.b2));
    }
    let mut seen = vec![false; g.n()];
    for &v in s0 {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidSeed(format!("vertex {v} repeated")));
        }
    }
    if s0.len() < 3 {
        return Err(Error::InvalidSeed(format!("seed has {} vertices, at least 3 required", s0.len())));
    }
    match (seen[z.a1], seen[z.b1], seen[z.a2], seen[z.b2]) {
        (true, true, false, false) => Ok(SeedSide::First),
        (false, false, true, true) => Ok(SeedSide::Second),
        _ => Err(Error::InvalidSeed(
            "seed must contain exactly {a1, b1} or exactly {a2, b2} among the tuple".into(),
        )),
    }
}

/// Unchecked core used by the detectors: `z` is proper and `s0` is a valid
/// seed for `side`.
pub(crate) fn force_unchecked(g: &Graph, z: &FourTuple, s0: &[usize], side: SeedSide) -> ForcingRun {
    force_observed_unchecked(g, z, s0, side, &mut |_| {})
}

fn force_observed_unchecked(
    g: &Graph,
    z: &FourTuple,
    s0: &[usize],
    side: SeedSide,
    observer: &mut dyn FnMut(&ForcingState<'_>),
) -> ForcingRun {
    match side {
        SeedSide::First => run_oriented(g, *z, s0, observer),
        SeedSide::Second => {
            let mut run = run_oriented(g, z.swap_sides(), s0, observer);
            if let ForcingOutcome::Found(s) = run.outcome {
                run.outcome = ForcingOutcome::Found(s.swap_sides());
            }
            run
        }
    }
}

/// Finds the 2-join compatible with `z` with `a1 ∈ A1`, `b1 ∈ B1`,
/// `a2 ∈ A2`, `b2 ∈ B2` and `s0` inside one side, whose side containing
/// `s0` is inclusion-minimal. `s0` must contain exactly `{a1, b1}` or
/// exactly `{a2, b2}` among the tuple's vertices. In the returned split
/// `X1` always holds `a1` and `b1`.
pub fn force_side(g: &Graph, z: &FourTuple, s0: &[usize]) -> Result<Option<TwoJoinSplit>> {
    Ok(force_side_observed(g, z, s0, &mut |_| {})?.outcome.split())
}

/// [`force_side`] with a hook invoked after every exploration step, and the
/// run's work counters.
pub fn force_side_observed(
    g: &Graph,
    z: &FourTuple,
    s0: &[usize],
    observer: &mut dyn FnMut(&ForcingState<'_>),
) -> Result<ForcingRun> {
    g.require_connected()?;
    let side = check_seed(g, z, s0)?;
    Ok(force_observed_unchecked(g, z, s0, side, observer))
}

/// Smallest vertex outside the tuple.
pub(crate) fn free_vertex(g: &Graph, z: &FourTuple) -> Option<usize> {
    g.vertices().find(|&v| !z.contains(v))
}

pub(crate) fn find_compatible_unchecked(g: &Graph, z: &FourTuple) -> Option<TwoJoinSplit> {
    if g.n() < 6 {
        return None;
    }
    let u = free_vertex(g, z)?;
    force_unchecked(g, z, &[z.a1, z.b1, u], SeedSide::First)
        .outcome
        .split()
        .or_else(|| force_unchecked(g, z, &[z.a2, z.b2, u], SeedSide::Second).outcome.split())
}

/// A 2-join compatible with `z` (with `a1, b1` in `X1`), if one exists.
pub fn find_compatible(g: &Graph, z: &FourTuple) -> Result<Option<TwoJoinSplit>> {
    g.require_connected()?;
    if !z.is_proper(g) {
        return Err(Error::NotProper(z.a1, z.a2, z.b1, z.b2));
    }
    Ok(find_compatible_unchecked(g, z))
}
