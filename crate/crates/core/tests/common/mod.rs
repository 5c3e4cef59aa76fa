#![allow(dead_code)]

use twojoin_core::{gen, FourTuple, Graph, TwoJoinSplit};

pub const PROBABILITIES: [f64; 4] = [0.15, 0.3, 0.5, 0.8];

/// A named corpus instance.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// `count` seeded random connected graphs with `n` cycling through 6..=12
/// and `p` through [`PROBABILITIES`].
pub fn random_instances(count: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = 6 + i % 7;
            let p = PROBABILITIES[(i / 7) % 4];
            let seed = i as u64;
            Instance {
                name: format!("random(n={n}, p={p}, seed={seed})"),
                graph: gen::random_connected(n, p, seed).unwrap(),
            }
        })
        .collect()
}

/// Cycles, paths and complete graphs up to 12 vertices plus the planted
/// fixtures.
pub fn fixture_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for k in 1..=12 {
        if k >= 3 {
            out.push(Instance { name: format!("cycle({k})"), graph: gen::cycle(k).unwrap() });
        }
        out.push(Instance { name: format!("path({k})"), graph: gen::path(k).unwrap() });
        out.push(Instance { name: format!("complete({k})"), graph: gen::complete(k).unwrap() });
    }
    out.push(Instance { name: "double-hexagon".into(), graph: gen::double_hexagon().0 });
    out.push(Instance { name: "double-k4".into(), graph: gen::double_k4().0 });
    out.push(Instance { name: "figure1".into(), graph: gen::figure1_graph() });
    out
}

pub fn corpus(random: usize) -> Vec<Instance> {
    let mut out = fixture_instances();
    out.extend(random_instances(random));
    out
}

/// Seeded planted 2-joins on small random connected sides. Side sizes are
/// 3..=6 (3..=4 when `small`), A and B are random disjoint non-empty subsets.
pub fn planted_instances(count: usize, small: bool) -> Vec<Instance> {
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x2_0015);
    let span = if small { 2 } else { 4 };
    let mut out = Vec::new();
    while out.len() < count {
        let side = |rng: &mut rand_chacha::ChaCha8Rng| {
            let size = 3 + (rng.next_u32() % span) as usize;
            let p = PROBABILITIES[(rng.next_u32() % 4) as usize];
            let g = gen::random_connected(size, p, rng.next_u64()).unwrap();
            // label each vertex A, B or neither
            let labels: Vec<u32> = (0..size).map(|_| rng.next_u32() % 3).collect();
            let a: Vec<usize> = (0..size).filter(|&v| labels[v] == 0).collect();
            let b: Vec<usize> = (0..size).filter(|&v| labels[v] == 1).collect();
            (g, a, b)
        };
        let (g1, a1, b1) = side(&mut rng);
        let (g2, a2, b2) = side(&mut rng);
        if let Ok((graph, _)) = gen::planted(&g1, &a1, &b1, &g2, &a2, &b2) {
            out.push(Instance { name: format!("planted#{}", out.len()), graph });
        }
    }
    out
}

fn contains(sorted: &[usize], v: usize) -> bool {
    sorted.binary_search(&v).is_ok()
}

/// Each enumerated 2-join in all four side/role orientations.
pub fn orientations(all: &[TwoJoinSplit]) -> Vec<TwoJoinSplit> {
    all.iter()
        .flat_map(|s| {
            let t = s.clone().swap_sides();
            [s.clone(), s.clone().swap_roles(), t.clone().swap_roles(), t]
        })
        .collect()
}

/// The oriented splits with `a1 ∈ A1`, `b1 ∈ B1`, `a2 ∈ A2`, `b2 ∈ B2`.
pub fn anchored<'a>(oriented: &'a [TwoJoinSplit], z: &FourTuple) -> Vec<&'a TwoJoinSplit> {
    oriented
        .iter()
        .filter(|s| contains(&s.a1, z.a1) && contains(&s.b1, z.b1) && contains(&s.a2, z.a2) && contains(&s.b2, z.b2))
        .collect()
}

/// Sides that a forcing run on `z` with `seed` may return: the seed's side
/// of every [`anchored`] split that holds the whole seed.
pub fn admissible_sides(anchored: &[&TwoJoinSplit], z: &FourTuple, seed: &[usize]) -> Vec<Vec<usize>> {
    let first = seed.contains(&z.a1);
    anchored
        .iter()
        .map(|s| if first { &s.x1 } else { &s.x2 })
        .filter(|side| seed.iter().all(|&v| contains(side, v)))
        .cloned()
        .collect()
}

/// Checks a forcing result against [`admissible_sides`]: absent exactly
/// when nothing is admissible, otherwise admissible and contained in every
/// admissible side.
pub fn forcing_agrees(found: Option<&TwoJoinSplit>, z: &FourTuple, seed: &[usize], admissible: &[Vec<usize>]) -> Result<(), String> {
    match found {
        None if admissible.is_empty() => Ok(()),
        None => Err(format!("{z} seed {seed:?}: forcing found nothing, oracle has {admissible:?}")),
        Some(s) => {
            let side = if seed.contains(&z.a1) { &s.x1 } else { &s.x2 };
            if !admissible.contains(side) {
                return Err(format!("{z} seed {seed:?}: returned side {side:?} is not admissible"));
            }
            if let Some(other) = admissible.iter().find(|o| side.iter().any(|&v| !contains(o, v))) {
                return Err(format!("{z} seed {seed:?}: side {side:?} not inside admissible {other:?}"));
            }
            Ok(())
        }
    }
}

/// Every proper 4-tuple of `g`, in lexicographic order of `(a1, a2, b1, b2)`.
pub fn proper_tuples(g: &Graph) -> Vec<FourTuple> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for (a1, a2) in [(u, v), (v, u)] {
            for (x, y) in g.edges() {
                for (b1, b2) in [(x, y), (y, x)] {
                    let z = FourTuple::new(a1, a2, b1, b2);
                    if z.is_proper(g) {
                        out.push(z);
                    }
                }
            }
        }
    }
    out.sort_by_key(|z| (z.a1, z.a2, z.b1, z.b2));
    out
}

/// The valid size-3 seeds of `z`: `{a1, b1, u}` and `{a2, b2, u}` for each
/// vertex `u` outside the tuple.
pub fn size3_seeds(g: &Graph, z: &FourTuple) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| !z.contains(u)) {
        out.push(vec![z.a1, z.b1, u]);
        out.push(vec![z.a2, z.b2, u]);
    }
    out
}

fn graph_from_mask(k: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::new(k, &edges).unwrap()
}

/// Two-element A and B for a 4-vertex side, as (A, B).
const SPLITS_OF_FOUR: [([usize; 2], [usize; 2]); 6] =
    [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2]), ([2, 3], [0, 1]), ([1, 3], [0, 2]), ([1, 2], [0, 3])];

/// Star-cutset-free planted graphs on 8 and 9 vertices that have a non-path
/// 2-join: every pair of 4-vertex sides with `|A| = |B| = 2`, plus a seeded
/// sample with one 5-vertex side.
pub fn star_free_planted() -> Vec<Instance> {
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use twojoin_core::oracle::{oracle_min_side, oracle_star_cutset};

    let keep = |g: &Graph| {
        g.is_connected() && oracle_star_cutset(g).unwrap().is_none() && oracle_min_side(g, true).unwrap().is_some()
    };
    let fours: Vec<Graph> = (0..64).map(|m| graph_from_mask(4, m)).collect();
    let mut out = Vec::new();
    for (i, g1) in fours.iter().enumerate() {
        for (a1, b1) in &SPLITS_OF_FOUR[..3] {
            for (j, g2) in fours.iter().enumerate().skip(i) {
                for (k, (a2, b2)) in SPLITS_OF_FOUR.iter().enumerate() {
                    let (g, _) = gen::planted(g1, a1, b1, g2, a2, b2).unwrap();
                    if keep(&g) {
                        out.push(Instance { name: format!("star-free(4:{i}, 4:{j}, {k})"), graph: g });
                    }
                }
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5_7A12);
    for _ in 0..5000 {
        let g1 = &fours[(rng.next_u32() % 64) as usize];
        let (a1, b1) = &SPLITS_OF_FOUR[(rng.next_u32() % 6) as usize];
        let mask = rng.next_u32() % 1024;
        let g2 = graph_from_mask(5, mask);
        let mut perm = [0usize, 1, 2, 3, 4];
        for i in (1..5).rev() {
            perm.swap(i, (rng.next_u32() as usize) % (i + 1));
        }
        let (a2, b2) = (&perm[..2], &perm[2..4]);
        let (g, _) = gen::planted(g1, a1, b1, &g2, a2, b2).unwrap();
        if keep(&g) {
            out.push(Instance { name: format!("star-free(4, 5:{mask}, {perm:?})"), graph: g });
        }
    }
    out
}
