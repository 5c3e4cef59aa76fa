mod common;

use proptest::prelude::*;
use twojoin_core::detect::{detect_2join_report, detect_nonpath_2join_report, replay_certificate, CertificateKind};
use twojoin_core::oracle::enumerate_2joins;
use twojoin_core::{
    classify_partition, detect_2join, detect_nonpath_2join, gen, is_nonpath, is_path_side, DetectOptions, Graph, Side,
    TwoJoinSplit,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (6usize..=11, 0.15f64..=0.8, any::<u64>()).prop_map(|(n, p, seed)| gen::random_connected(n, p, seed).unwrap())
}

/// Path side by definition: `G[Xi]` has `|Xi| - 1` edges, maximum degree 2,
/// is connected, and its two ends are the single vertices of `Ai` and `Bi`.
fn path_side_by_definition(g: &Graph, s: &TwoJoinSplit, side: Side) -> bool {
    let view = s.side(side);
    if view.a.len() != 1 || view.b.len() != 1 {
        return false;
    }
    let h = g.induced(view.x);
    let ends: Vec<usize> = h.vertices().filter(|&v| h.degree(v) == 1).map(|v| view.x[v]).collect();
    h.m() + 1 == h.n()
        && h.is_connected()
        && h.vertices().all(|v| h.degree(v) <= 2)
        && ends.len() == 2
        && ends.contains(&view.a[0])
        && ends.contains(&view.b[0])
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn path_sides_match_definition(g in small_graph()) {
        for s in enumerate_2joins(&g, false).unwrap() {
            for side in [Side::First, Side::Second] {
                prop_assert_eq!(is_path_side(&g, &s, side), path_side_by_definition(&g, &s, side));
            }
            let nonpath = !path_side_by_definition(&g, &s, Side::First) && !path_side_by_definition(&g, &s, Side::Second);
            prop_assert_eq!(is_nonpath(&g, &s), nonpath);
        }
    }

    #[test]
    fn oracle_counts_survive_relabeling(g in small_graph(), shuffle in any::<u64>()) {
        let mut perm: Vec<usize> = g.vertices().collect();
        // deterministic Fisher-Yates driven by a splitmix-style stream
        let mut state = shuffle;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let h = relabel(&g, &perm);
        for nonpath in [false, true] {
            let mapped: Vec<Vec<usize>> = enumerate_2joins(&g, nonpath)
                .unwrap()
                .iter()
                .map(|s| {
                    let mut x: Vec<usize> = s.x1.iter().map(|&v| perm[v]).collect();
                    x.sort_unstable();
                    if !x.contains(&0) {
                        x = h.vertices().filter(|v| !x.contains(v)).collect();
                    }
                    x
                })
                .collect();
            let mut mapped = mapped;
            mapped.sort();
            let mut direct: Vec<Vec<usize>> = enumerate_2joins(&h, nonpath).unwrap().into_iter().map(|s| s.x1).collect();
            direct.sort();
            prop_assert_eq!(mapped, direct);
        }
    }

    #[test]
    fn detectors_agree_with_oracle(g in small_graph()) {
        let any = detect_2join(&g).unwrap();
        prop_assert_eq!(any.is_some(), !enumerate_2joins(&g, false).unwrap().is_empty());
        if let Some(s) = &any {
            prop_assert_eq!(classify_partition(&g, &s.x1), Some(s.clone()));
        }
        let np = detect_nonpath_2join(&g).unwrap();
        prop_assert_eq!(np.is_some(), !enumerate_2joins(&g, true).unwrap().is_empty());
        if let Some(s) = &np {
            prop_assert!(s.is_valid_for(&g) && is_nonpath(&g, s));
        }
    }

    #[test]
    fn parallel_matches_sequential(g in small_graph()) {
        let seq = DetectOptions { parallel: false };
        let par = DetectOptions { parallel: true };
        prop_assert_eq!(detect_2join_report(&g, seq).unwrap().split, detect_2join_report(&g, par).unwrap().split);
        prop_assert_eq!(
            detect_nonpath_2join_report(&g, seq).unwrap().split,
            detect_nonpath_2join_report(&g, par).unwrap().split
        );
    }

    #[test]
    fn absence_certificates_replay(g in small_graph()) {
        let opts = DetectOptions::default();
        let r = detect_2join_report(&g, opts).unwrap();
        if let Some(tuples) = r.certificate() {
            prop_assert!(replay_certificate(&g, tuples, CertificateKind::TwoJoin));
        }
        let r = detect_nonpath_2join_report(&g, opts).unwrap();
        if let Some(tuples) = r.certificate() {
            prop_assert!(replay_certificate(&g, tuples, CertificateKind::NonPath));
        }
    }
}
