//! Solver-versus-oracle equivalence: every exact solver and construction
//! is replayed against a naive enumeration oracle on seeded random graphs,
//! and the two complement-condition checkers are compared exhaustively.

mod common;

use common::{
    brute_automorphism_count, brute_move_adjacent, naive_alpha, naive_chi, naive_gamma,
    naive_idom, naive_omega, one_move_adjacent,
};
use num_bigint::BigUint;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokgraph::budget::Budget;
use tokgraph::canon::automorphism_group;
use tokgraph::codec::graph6_encode;
use tokgraph::graph::Graph;
use tokgraph::harness::sampler::er_graph;
use tokgraph::invariants::{
    chromatic_number, clique_number, domination_number, independence_number,
    independent_domination_number,
};
use tokgraph::token::{
    arcs_union_complete_condition, arcs_union_complete_condition_literal, build_move_union,
    build_token_graph, predicted_degree_f22, TokenConfig,
};

/// Every labeled graph on five vertices, one per 10-bit edge mask.
fn five_vertex_graph(mask: u16) -> Graph {
    let mut g = Graph::empty(5);
    let mut bit = 0;
    for u in 0..5 {
        for v in (u + 1)..5 {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

#[test]
fn exact_solvers_match_naive_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ac1e5);
    let mut budget = Budget::unlimited();
    for round in 0..300 {
        let n = 1 + (rng.next_u64() % 7) as usize;
        let g = er_graph(&mut rng, n);
        let context = || format!("round {round}, graph {}", graph6_encode(&g));

        let alpha = independence_number(&g, &mut budget).unwrap();
        assert_eq!(alpha.value, naive_alpha(&g), "alpha, {}", context());
        alpha.validate(&g).unwrap();

        let omega = clique_number(&g, &mut budget).unwrap();
        assert_eq!(omega.value, naive_omega(&g), "omega, {}", context());
        omega.validate(&g).unwrap();

        let chi = chromatic_number(&g, &mut budget).unwrap();
        assert_eq!(chi.value, naive_chi(&g), "chi, {}", context());
        chi.validate(&g).unwrap();

        let gamma = domination_number(&g, &mut budget).unwrap();
        assert_eq!(gamma.value, naive_gamma(&g), "gamma, {}", context());
        gamma.validate(&g).unwrap();

        let idom = independent_domination_number(&g, &mut budget).unwrap();
        assert_eq!(idom.value, naive_idom(&g), "idom, {}", context());
        idom.validate(&g).unwrap();
    }
}

#[test]
fn token_adjacency_matches_the_all_bijections_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x70ab1);
    for round in 0..60 {
        let n = 4 + (rng.next_u64() % 4) as usize; // 4..=7
        let g = er_graph(&mut rng, n);
        for k in [2usize, 3] {
            for m in 1..=k {
                let t = build_token_graph(&g, k, m).unwrap();
                let v = t.graph().vertex_count();
                for i in 0..v {
                    for j in 0..v {
                        let a = t.config(i);
                        let b = t.config(j);
                        let brute = brute_move_adjacent(&g, a.members(), b.members(), m);
                        assert_eq!(
                            t.graph().has_edge(i.min(j), i.max(j)) && i != j,
                            brute,
                            "round {round}, graph {}, k={k}, m={m}, {} vs {}",
                            graph6_encode(&g),
                            a.label(),
                            b.label(),
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn one_move_graphs_match_the_ordinary_token_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10c0);
    for _ in 0..40 {
        let n = 2 + (rng.next_u64() % 7) as usize; // 2..=8
        let g = er_graph(&mut rng, n);
        for k in 1..=3.min(n) {
            let t = build_token_graph(&g, k, 1).unwrap();
            let v = t.graph().vertex_count();
            for i in 0..v {
                for j in (i + 1)..v {
                    let expected =
                        one_move_adjacent(&g, t.config(i).members(), t.config(j).members());
                    assert_eq!(
                        t.graph().has_edge(i, j),
                        expected,
                        "graph {}, k={k}, {} vs {}",
                        graph6_encode(&g),
                        t.config(i).label(),
                        t.config(j).label(),
                    );
                }
            }
        }
    }
}

#[test]
fn degree_formula_matches_brute_force_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde6);
    for round in 0..200 {
        let n = 2 + (rng.next_u64() % 8) as usize; // 2..=9
        let g = er_graph(&mut rng, n);
        let t = build_token_graph(&g, 2, 2).unwrap();
        for v in 0..n {
            for w in (v + 1)..n {
                let idx = t.index_of(&TokenConfig::new(vec![v, w]).unwrap());
                let actual = t.graph().degree(idx);
                let predicted = predicted_degree_f22(&g, v, w).unwrap();
                assert_eq!(
                    predicted,
                    actual,
                    "round {round}, graph {}, pair {{{v},{w}}}",
                    graph6_encode(&g),
                );
            }
        }
    }
}

#[test]
fn automorphism_orders_match_the_full_permutation_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa07);
    let mut budget = Budget::unlimited();
    for _ in 0..60 {
        let n = 1 + (rng.next_u64() % 6) as usize; // 1..=6
        let g = er_graph(&mut rng, n);
        let group = automorphism_group(&g, &mut budget).unwrap();
        assert_eq!(
            group.order,
            BigUint::from(brute_automorphism_count(&g)),
            "graph {}",
            graph6_encode(&g),
        );
    }
}

#[test]
fn condition_checkers_and_built_unions_agree_exhaustively() {
    for k in [2usize, 3] {
        for mask in 0..1024u16 {
            let g = five_vertex_graph(mask);
            let fast = arcs_union_complete_condition(&g, k);
            let literal = arcs_union_complete_condition_literal(&g, k);
            let union = build_move_union(&g, k).unwrap();
            let v = union.graph().vertex_count();
            let complete = union.graph().edge_count() == v * (v - 1) / 2;
            assert_eq!(fast, literal, "mask {mask}, k={k}: checkers disagree");
            assert_eq!(fast, complete, "mask {mask}, k={k}: condition vs built union");
        }
    }
}
