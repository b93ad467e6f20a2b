//! Frozen values from the brute-force oracles.

mod common;

use common::{all_graphs, canonical, is_connected, oracle, to_graph, OracleVerdict};
use neumaier::format::{from_graph6, to_graph6};
use neumaier_core::catalog::lookup;
use proptest::prelude::*;

#[test]
fn small_graph_counts_match_oeis() {
    let levels = all_graphs(7);
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(level.len(), common::OEIS_GRAPHS[n], "n={n}");
        assert_eq!(level.iter().filter(|a| is_connected(a)).count(), common::OEIS_CONNECTED[n], "n={n}");
    }
}

#[test]
fn neumaier_graphs_up_to_seven_vertices() {
    let mut found = Vec::new();
    for level in all_graphs(7) {
        for adj in level.iter().filter(|a| is_connected(a)) {
            let g = to_graph(adj);
            if g.is_complete() {
                continue;
            }
            let o = oracle(&g);
            if matches!(o.verdict, OracleVerdict::Strictly | OracleVerdict::StronglyRegular) {
                found.push(to_graph6(&g));
            }
        }
    }
    found.sort();
    // C4, K3,3 and K2,2,2, by construction order.
    assert_eq!(found.len(), 3);
    for name in ["multipartite-2x2", "multipartite-2x3", "multipartite-3x2"] {
        let g = lookup(name).unwrap().build().unwrap();
        let adj: Vec<u8> = (0..g.n()).map(|v| g.neighbours(v).bits() as u8).collect();
        let present = found.iter().any(|s| {
            let h = from_graph6(s).unwrap();
            let b: Vec<u8> = (0..h.n()).map(|v| h.neighbours(v).bits() as u8).collect();
            canonical(&b) == canonical(&adj)
        });
        assert!(present, "{name}");
    }
}

#[test]
fn oracle_on_petersen() {
    let g = from_graph6("IheA@GUAo").unwrap();
    let o = oracle(&g);
    assert_eq!(o.edge_regular, Some((10, 3, 0)));
    assert_eq!(o.mu, Some(1));
    assert_eq!(o.verdict, OracleVerdict::EdgeRegularNoRegularClique);
}

proptest! {
    #[test]
    fn graph6_roundtrip(n in 0usize..80, seed in any::<u64>()) {
        let mut state = seed | 1;
        let g = neumaier_core::Graph::from_fn(n, |_, _| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state & 1 == 1
        }).unwrap();
        let s = to_graph6(&g);
        let h = from_graph6(&s).unwrap();
        prop_assert_eq!(h.rows(), g.rows());
    }

    #[test]
    fn canonical_form_is_label_invariant(
        adj in proptest::collection::vec(any::<u8>(), 6),
        perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let mut a = vec![0u8; 6];
        for u in 0..6 {
            for v in 0..6 {
                if u != v && ((adj[u.min(v)] >> v.max(u)) & 1 == 1) {
                    a[u] |= 1 << v;
                }
            }
        }
        let mut b = vec![0u8; 6];
        for u in 0..6 {
            for v in 0..6 {
                if a[u] >> v & 1 == 1 {
                    b[perm[u]] |= 1 << perm[v];
                }
            }
        }
        prop_assert_eq!(canonical(&a), canonical(&b));
    }
}
