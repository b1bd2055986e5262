//! Property-based tests: codec round trips, token-graph structural laws,
//! product edge-count identities, witness validity, and canonical-form
//! invariance under relabeling.

use proptest::prelude::*;
use tokgraph::budget::Budget;
use tokgraph::canon::canonical_form;
use tokgraph::codec::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode};
use tokgraph::graph::Graph;
use tokgraph::invariants::{
    chromatic_number, clique_number, domination_number, independence_number,
    independent_domination_number,
};
use tokgraph::token::{build_token_graph, config_adjacent};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut i = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

/// Uniformly labeled graphs with up to `max_n` vertices.
fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A graph together with a random relabeling permutation of its vertices.
fn graphs_with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits));
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (bits, perm)
    })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in graphs(12)) {
        let encoded = graph6_encode(&g);
        let decoded = graph6_decode(&encoded).expect("own encoding decodes");
        prop_assert_eq!(g, decoded);
    }

    #[test]
    fn edge_list_round_trips(g in graphs(12)) {
        let encoded = edge_list_encode(&g);
        let decoded = edge_list_decode(&encoded).expect("own encoding decodes");
        prop_assert_eq!(g, decoded);
    }

    #[test]
    fn config_adjacency_is_symmetric(g in graphs(6), m in 1usize..=2) {
        prop_assume!(g.vertex_count() >= 2);
        let t = build_token_graph(&g, 2, m).expect("k=2 fits");
        let v = t.graph().vertex_count();
        for i in 0..v {
            for j in 0..v {
                let (a, b) = (t.config(i), t.config(j));
                let forward = config_adjacent(&g, &a, &b, m).expect("valid configs");
                let backward = config_adjacent(&g, &b, &a, m).expect("valid configs");
                prop_assert_eq!(forward, backward);
            }
        }
    }

    #[test]
    fn token_graphs_satisfy_the_handshake_identity(g in graphs(7), k in 1usize..=3, m in 1usize..=3) {
        prop_assume!(k <= g.vertex_count() && m <= k);
        let t = build_token_graph(&g, k, m).expect("parameters fit");
        let degree_sum: usize = (0..t.graph().vertex_count()).map(|v| t.graph().degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * t.graph().edge_count());
    }

    #[test]
    fn token_edges_move_at_most_m_tokens(g in graphs(7), k in 1usize..=3, m in 1usize..=3) {
        prop_assume!(k <= g.vertex_count() && m <= k);
        let t = build_token_graph(&g, k, m).expect("parameters fit");
        for (i, j) in t.graph().edges() {
            let a = t.config(i);
            let b = t.config(j);
            let displaced = a.members().iter().filter(|x| !b.contains(**x)).count();
            prop_assert!(displaced <= m, "edge {}-{} displaces {displaced} > m = {m}", a.label(), b.label());
        }
    }

    #[test]
    fn cartesian_products_have_the_expected_edge_count(g in graphs(6), h in graphs(6)) {
        let p = g.cartesian_product(&h);
        prop_assert_eq!(p.vertex_count(), g.vertex_count() * h.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count()
        );
    }

    #[test]
    fn tensor_products_have_the_expected_edge_count(g in graphs(6), h in graphs(6)) {
        let p = g.tensor_product(&h);
        prop_assert_eq!(p.vertex_count(), g.vertex_count() * h.vertex_count());
        prop_assert_eq!(p.edge_count(), 2 * g.edge_count() * h.edge_count());
    }

    #[test]
    fn invariant_witnesses_validate_against_their_graph(g in graphs(7)) {
        let mut budget = Budget::unlimited();
        for iw in [
            independence_number(&g, &mut budget).unwrap(),
            clique_number(&g, &mut budget).unwrap(),
            chromatic_number(&g, &mut budget).unwrap(),
            domination_number(&g, &mut budget).unwrap(),
            independent_domination_number(&g, &mut budget).unwrap(),
        ] {
            prop_assert!(iw.validate(&g).is_ok(), "witness failed: {:?}", iw);
        }
    }

    #[test]
    fn canonical_bytes_ignore_relabeling((g, perm) in graphs_with_permutation(8)) {
        let mut budget = Budget::unlimited();
        let relabeled = g.relabel(&perm);
        let original = canonical_form(&g, &mut budget).unwrap();
        let shuffled = canonical_form(&relabeled, &mut budget).unwrap();
        prop_assert_eq!(original.bytes(), shuffled.bytes());
        // The ordering certifies the bytes: relabeling by it reproduces the
        // canonical graph exactly.
        let canonical = g.relabel(original.ordering().image());
        prop_assert_eq!(graph6_encode(&canonical), original.bytes());
    }
}
