use nalgebra::DMatrix;
use neumaier_core::automorphism::{automorphism_group, orbits};
use neumaier_core::cayley::{cayley_graph, right_translations, validate_connection_set, ConnectionSet};
use neumaier_core::clique::{is_clique, maximal_cliques, nexus_of, Nexus};
use neumaier_core::group::FiniteGroup;
use neumaier_core::neumaier::{classify, two_part_quotient};
use neumaier_core::params::{enumerate_feasible, feasibility, NeumaierParams};
use neumaier_core::spectrum::{char_poly, integer_spectrum};
use neumaier_core::{are_isomorphic, Graph, Isomorphism, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn adjacency_f64(g: &Graph) -> DMatrix<f64> {
    DMatrix::from_fn(g.n(), g.n(), |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_sum_is_twice_edges(g in graph_strategy(20)) {
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn complement_is_involution(g in graph_strategy(20)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        let cc = c.complement();
        prop_assert_eq!(cc.rows(), g.rows());
    }

    #[test]
    fn trace_identities(g in graph_strategy(16)) {
        let p = char_poly(&g).unwrap();
        prop_assert_eq!(p.trace(), 0.into());
        prop_assert_eq!(p.trace_of_square(), (2 * g.edge_count()).into());
        let s = integer_spectrum(&p);
        prop_assert_eq!(&s.reconstruct(), p.polynomial());
    }

    #[test]
    fn integer_roots_agree_with_floats(g in graph_strategy(12)) {
        let s = integer_spectrum(&char_poly(&g).unwrap());
        let mut eig: Vec<f64> = adjacency_f64(&g).symmetric_eigenvalues().iter().copied().collect();
        eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (&r, &m) in &s.integer_roots {
            let close = eig.iter().filter(|&&x| (x - r as f64).abs() < 1e-6).count();
            prop_assert!(close >= m, "root {} multiplicity {} but {} float matches", r, m, close);
        }
    }

    #[test]
    fn spectrum_is_isomorphism_invariant((g, perm) in with_permutation(14)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(char_poly(&g).unwrap(), char_poly(&h).unwrap());
    }

    #[test]
    fn isomorphism_found_for_relabelling((g, perm) in with_permutation(12)) {
        let h = g.permuted(&perm);
        match are_isomorphic(&g, &h).unwrap() {
            Isomorphism::Isomorphic(map) => prop_assert!(g.is_isomorphism_to(&h, &map)),
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn automorphism_report_is_consistent(g in graph_strategy(12)) {
        let a = automorphism_group(&g).unwrap();
        prop_assert!(a.verify(&g));
        prop_assert_eq!(orbits(g.n(), &a.generators), a.orbits.clone());
        for orbit in &a.orbits {
            let v = orbit[0];
            for &u in orbit {
                prop_assert_eq!(g.degree(v), g.degree(u));
            }
        }
    }

    #[test]
    fn maximal_cliques_are_maximal(g in graph_strategy(14)) {
        let cliques = maximal_cliques(&g);
        for &c in &cliques {
            prop_assert!(is_clique(&g, c));
            for v in g.vertices().difference(c).iter() {
                prop_assert!(!c.is_subset(g.neighbours(v)));
            }
        }
        let mut covered = VertexSet::EMPTY;
        for &c in &cliques {
            covered = covered.union(c);
        }
        prop_assert_eq!(covered, g.vertices());
    }

    #[test]
    fn classification_agrees_with_regular_cliques(g in graph_strategy(10)) {
        prop_assume!(g.is_connected() && !g.is_complete());
        let cls = classify(&g).unwrap();
        prop_assert!(cls.identities_hold());
        for rc in &cls.cliques.cliques {
            prop_assert_eq!(nexus_of(&g, rc.clique).unwrap(), Nexus::Regular(rc.nexus));
        }
        if let Some(p) = cls.params {
            prop_assert!(feasibility(&p).feasible());
            prop_assert!(two_part_quotient(&p).has_expected_eigenvalues(&p));
        }
    }
}

fn group_case() -> impl Strategy<Value = (String, Vec<usize>)> {
    prop_oneof![Just("Z12".to_string()), Just("Z4xZ4".to_string()), Just("D16".to_string()), Just("S4".to_string())]
        .prop_flat_map(|name| {
            let order = FiniteGroup::parse(&name).unwrap().order();
            (Just(name), proptest::collection::vec(1..order, 1..5))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_graphs_are_regular_and_right_translations_act((name, picks) in group_case()) {
        let g = FiniteGroup::parse(&name).unwrap();
        let mut set = neumaier_core::group::ElementSet::EMPTY;
        for &x in &picks {
            set.insert(x);
            set.insert(g.inv(x));
        }
        let s = ConnectionSet(set);
        let v = validate_connection_set(&g, &s);
        prop_assert!(v.identity_free && v.inverse_closed);
        prop_assume!(v.generates);
        let graph = cayley_graph(&g, &s).unwrap();
        for x in 0..g.order() {
            prop_assert_eq!(graph.degree(x), s.len());
        }
        for t in right_translations(&g) {
            prop_assert!(graph.is_automorphism(&t));
        }
    }
}

#[test]
fn feasible_enumeration_is_sorted_and_feasible() {
    let a = enumerate_feasible(8);
    let b = enumerate_feasible(8);
    assert_eq!(a, b);
    assert!(a.iter().all(|p| feasibility(p).feasible()));
    assert!(a.contains(&NeumaierParams::new(4, 2, 0, 1, 2)));
}
