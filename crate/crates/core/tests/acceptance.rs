//! Acceptance gate: every documented criterion runs at its stated tolerance
//! and prints one pass/fail line; the test fails (listing the criteria that
//! failed) if any line is a FAIL.
//!
//! Two documented-discrepancy statuses are part of the expected outcome:
//! checks that compare against statements known to be wrong as written
//! (see the individual check payloads) must report `discrepancy-expected`,
//! not `pass` — a plain pass there would mean the comparison was not made.

// Only the invariant oracles are needed here; the rest of the shared
// module is exercised by the oracle-equivalence binary.
#[allow(dead_code)]
mod common;

use common::{naive_alpha, naive_chi, naive_gamma, naive_omega};
use num_bigint::BigUint;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use tokgraph::budget::Budget;
use tokgraph::canon::{automorphism_group, is_isomorphic};
use tokgraph::family;
use tokgraph::harness::{run_suite, CheckStatus, Report, RunOptions};
use tokgraph::harness::sampler::er_graph;
use tokgraph::invariants::{
    chromatic_number, clique_number, domination_number, independence_number,
};
use tokgraph::token::{build_token_graph, predicted_degree_f22, TokenConfig};

#[derive(Default)]
struct Gate {
    lines: Vec<String>,
    failures: Vec<usize>,
}

impl Gate {
    fn record(&mut self, number: usize, ok: bool, what: &str) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        let line = format!("criterion {number:>2} {verdict}  {what}");
        println!("{line}");
        self.lines.push(line);
        if !ok {
            self.failures.push(number);
        }
    }
}

fn status_of(report: &Report, name: &str) -> CheckStatus {
    report
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check {name} missing from the report"))
        .status
}

/// Criterion 9, first half: exact solvers versus naive enumeration.
fn solvers_match_oracles() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut budget = Budget::unlimited();
    (0..300).all(|_| {
        let n = 1 + (rng.next_u64() % 7) as usize;
        let g = er_graph(&mut rng, n);
        independence_number(&g, &mut budget).unwrap().value == naive_alpha(&g)
            && clique_number(&g, &mut budget).unwrap().value == naive_omega(&g)
            && chromatic_number(&g, &mut budget).unwrap().value == naive_chi(&g)
            && domination_number(&g, &mut budget).unwrap().value == naive_gamma(&g)
    })
}

/// Criterion 9, second half: the degree formula versus brute-force degrees
/// of every pair configuration.
fn degree_formula_matches() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    (0..200).all(|_| {
        let n = 2 + (rng.next_u64() % 8) as usize;
        let g = er_graph(&mut rng, n);
        let t = build_token_graph(&g, 2, 2).expect("k = 2 fits");
        (0..n).all(|v| {
            (v + 1..n).all(|w| {
                let idx = t.index_of(&TokenConfig::new(vec![v, w]).expect("increasing"));
                predicted_degree_f22(&g, v, w).expect("distinct pair") == t.graph().degree(idx)
            })
        })
    })
}

/// The report with every runtime zeroed, for whole-value comparison.
fn timing_stripped(report: &Report) -> Value {
    let mut v = serde_json::to_value(report).expect("report serializes");
    for check in v["checks"].as_array_mut().expect("checks is an array") {
        check["runtime_ms"] = Value::from(0);
    }
    v
}

#[test]
fn acceptance_gate() {
    let mut gate = Gate::default();
    let opts = RunOptions {
        seed: 42,
        include_slow: true,
        ..RunOptions::default()
    };
    let report = run_suite("all", &opts).expect("the full registry resolves");
    let status = |name: &str| status_of(&report, name);
    let all_pass = |names: &[&str]| names.iter().all(|n| status(n) == CheckStatus::Pass);

    {
        let mut budget = Budget::unlimited();
        let t = build_token_graph(&family::cycle(4), 2, 2).expect("k = 2 fits C_4");
        let model = family::complete(4).disjoint_union(&family::complete(2));
        let direct = is_isomorphic(t.graph(), &model, &mut budget)
            .expect("unlimited budget")
            .is_some();
        gate.record(
            1,
            direct && status("c4_example") == CheckStatus::Pass,
            "F_2^2(C_4) is isomorphic to K_4 plus K_2, exactly",
        );
    }
    gate.record(
        2,
        all_pass(&["star_structure"]),
        "stars n in 2..=7: K_n plus C(n,2) isolated vertices; gamma = alpha = C(n,2)+1",
    );
    gate.record(
        3,
        status("kmn_structure") == CheckStatus::DiscrepancyExpected,
        "K_{m,n}, 2 <= m <= n <= 4: structure, chi = omega = mn, alpha; gamma flagged discrepancy-expected at min(m,n) = 2",
    );
    gate.record(
        4,
        all_pass(&["fkk_kmn_structure"]),
        "all-tokens-move decomposition of K_{m,n} for k in {2,3}, m,n <= 4, including the even-split case",
    );
    gate.record(
        5,
        all_pass(&["odd_cycle_product"]),
        "F_2^2(C_n) isomorphic to the cylinder C_n box P_{(n-1)/2} for n in {5,7,9,11}",
    );
    gate.record(
        6,
        all_pass(&["cycle_chromatic_clique", "alpha_cycles", "gamma_cycles"]),
        "cycle invariants: chi and omega for n in 3..=12, alpha formulas, gamma values including gamma = 14 at n = 11",
    );
    gate.record(
        7,
        all_pass(&["alpha_paths"]),
        "alpha of path double-move graphs equals floor(n/2) * ceil(n/2) for n in 2..=9",
    );
    gate.record(
        8,
        status("bipartite_characterization") == CheckStatus::DiscrepancyExpected
            && status("arcs_union_complete") == CheckStatus::Pass
            && status("complement_corollary") == CheckStatus::DiscrepancyExpected,
        "exhaustive 5-vertex sweep: bipartite iff union of paths; arcs-union condition both directions for k in {2,3}; complement corollary (clique-number iff and corollary discrepancies documented)",
    );
    gate.record(
        9,
        solvers_match_oracles() && degree_formula_matches(),
        "solvers match naive oracles on 300 seeded graphs (n <= 7); degree formula matches brute force on 200 seeded graphs (n <= 9), all pairs",
    );
    {
        let mut budget = Budget::unlimited();
        let k23 = build_token_graph(&family::complete_bipartite(2, 3), 2, 2).expect("k = 2 fits");
        let order_4320 = automorphism_group(k23.graph(), &mut budget)
            .expect("unlimited budget")
            .order
            == BigUint::from(4320u32);
        gate.record(
            10,
            order_4320
                && all_pass(&["aut_odd_cycle", "diamond_example", "aut_embedding"])
                && status("aut_kmn") == CheckStatus::DiscrepancyExpected,
            "automorphisms: 4n for odd cycles, 4320 for K_{2,3}, 24 for the diamond, 48-vs-24 discrepancy at K_{2,2}, embedding on 100 seeded graphs",
        );
    }
    gate.record(
        11,
        all_pass(&["connectivity_leaves", "disjoint_union_lemma"]),
        "connectivity with the summed-over-stars isolated count on 200 seeded graphs plus decorated cycles; disjoint-union decomposition on 50 pairs",
    );
    {
        let fast_opts = RunOptions {
            seed: 42,
            ..RunOptions::default()
        };
        let first = run_suite("fast", &fast_opts).expect("fast suite resolves");
        let second = run_suite("fast", &fast_opts).expect("fast suite resolves");
        gate.record(
            12,
            timing_stripped(&first) == timing_stripped(&second),
            "two fast-suite runs with seed 42 produce identical reports modulo runtime fields",
        );
    }

    assert!(
        gate.failures.is_empty(),
        "failing criteria: {:?}\n{}",
        gate.failures,
        gate.lines.join("\n"),
    );
}
