mod common;

use proptest::prelude::*;
use twojoin_core::forcing::force_side_observed;
use twojoin_core::oracle::enumerate_2joins;
use twojoin_core::{bad_paths, force_side, gen, BadPath, FourTuple, Graph, Side};

use common::{admissible_sides, anchored, forcing_agrees, orientations, proper_tuples, size3_seeds};

fn small_graph() -> impl Strategy<Value = Graph> {
    (6usize..=10, 0.15f64..=0.8, any::<u64>()).prop_map(|(n, p, seed)| gen::random_connected(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn forcing_returns_the_minimal_side(g in small_graph(), pick in any::<prop::sample::Index>()) {
        let tuples = proper_tuples(&g);
        prop_assume!(!tuples.is_empty());
        let z = tuples[pick.index(tuples.len())];
        let oriented = orientations(&enumerate_2joins(&g, false).unwrap());
        let candidates = anchored(&oriented, &z);
        for seed in size3_seeds(&g, &z) {
            let found = force_side(&g, &z, &seed).unwrap();
            if let Some(s) = &found {
                prop_assert!(s.is_valid_for(&g));
            }
            let admissible = admissible_sides(&candidates, &z, &seed);
            if let Err(e) = forcing_agrees(found.as_ref(), &z, &seed, &admissible) {
                return Err(TestCaseError::fail(e));
            }
        }
    }

    #[test]
    fn forcing_keeps_invariants_in_linear_work(g in small_graph(), pick in any::<prop::sample::Index>()) {
        let tuples = proper_tuples(&g);
        prop_assume!(!tuples.is_empty());
        let z = tuples[pick.index(tuples.len())];
        for seed in size3_seeds(&g, &z) {
            let mut broken = None;
            let run = force_side_observed(&g, &z, &seed, &mut |state| {
                if broken.is_none() {
                    broken = state.check_invariants().err();
                }
            })
            .unwrap();
            prop_assert!(broken.is_none(), "{:?}", broken);
            prop_assert!(run.adjacency_scans <= 2 * g.m() + g.n());
            prop_assert!(run.explored <= g.n());
        }
    }

    #[test]
    fn bad_paths_match_brute_force(g in small_graph(), pick in any::<prop::sample::Index>()) {
        let tuples = proper_tuples(&g);
        prop_assume!(!tuples.is_empty());
        let z = tuples[pick.index(tuples.len())];
        let mut got = bad_paths(&g, &z).paths;
        got.sort_by(|p, q| p.vertices.cmp(&q.vertices));
        prop_assert_eq!(got, brute_bad_paths(&g, &z));
    }
}

/// Every simple path from `a_i` to `b_i` with at least one interior vertex,
/// interior of degree 2 and outside the tuple, and no chords.
fn brute_bad_paths(g: &Graph, z: &FourTuple) -> Vec<BadPath> {
    fn extend(g: &Graph, z: &FourTuple, target: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == target && path.len() >= 2 {
                path.push(w);
                out.push(path.clone());
                path.pop();
            } else if !z.contains(w) && g.degree(w) == 2 && !path.contains(&w) {
                path.push(w);
                extend(g, z, target, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for (side, a, b) in [(Side::First, z.a1, z.b1), (Side::Second, z.a2, z.b2)] {
        let mut found = Vec::new();
        extend(g, z, b, &mut vec![a], &mut found);
        for vertices in found {
            let chordless = vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| vertices.iter().skip(i + 2).all(|&v| !g.has_edge(u, v)));
            if chordless {
                out.push(BadPath { side, vertices });
            }
        }
    }
    out.sort_by(|p, q| p.vertices.cmp(&q.vertices));
    out
}

#[test]
fn double_hexagon_every_tuple() {
    let (g, _) = gen::double_hexagon();
    let oriented = orientations(&enumerate_2joins(&g, false).unwrap());
    for z in proper_tuples(&g) {
        let candidates = anchored(&oriented, &z);
        for seed in size3_seeds(&g, &z) {
            let found = force_side(&g, &z, &seed).unwrap();
            forcing_agrees(found.as_ref(), &z, &seed, &admissible_sides(&candidates, &z, &seed)).unwrap();
        }
    }
}
