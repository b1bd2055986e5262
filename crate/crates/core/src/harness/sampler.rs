//! Seeded random graph samplers for the verification checks.
//!
//! The drawing algorithm is fixed so that seeds are portable across
//! implementations: one `next_u64` selects the edge probability from
//! `{0.3, 0.5, 0.7}` (modulo 3), then one `next_u64` per vertex pair in
//! lexicographic order decides that pair's edge (the top 53 bits scaled
//! into `[0, 1)` and compared against the probability). Class constraints
//! (connected, non-bipartite) are met by whole-graph rejection.
//!
//! Bipartite samples are the one deviation from plain rejection: almost
//! every moderately dense random graph contains an odd cycle, so rejecting
//! general draws down to the bipartite class stalls already at eight
//! vertices. Instead a random two-sided split is fixed first (redrawn
//! until both sides are inhabited, one `next_u64` per vertex, low bit)
//! and edges are drawn for cross-side pairs only, in lexicographic order;
//! connectivity is still enforced by rejection.

use rand::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

const EDGE_PROBS: [f64; 3] = [0.3, 0.5, 0.7];

/// Hard cap on rejection rounds; reaching it means a sampler was asked
/// for an improbable class (a bug in the calling check, not bad luck).
const MAX_REJECTIONS: usize = 100_000;

fn uniform01(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn edge_probability(rng: &mut ChaCha8Rng) -> f64 {
    EDGE_PROBS[(rng.next_u64() % 3) as usize]
}

/// One Erdős–Rényi draw on `n` vertices.
pub fn er_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = edge_probability(rng);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if uniform01(rng) < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random connected graph on `n >= 2` vertices.
pub fn connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    debug_assert!(n >= 2);
    for _ in 0..MAX_REJECTIONS {
        let g = er_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
    unreachable!("connected sampler exhausted its rejection budget");
}

/// Random connected graph on `n >= 3` vertices containing an odd cycle.
pub fn nonbipartite_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    debug_assert!(n >= 3);
    for _ in 0..MAX_REJECTIONS {
        let g = er_graph(rng, n);
        if g.is_connected() && !g.is_bipartite() {
            return g;
        }
    }
    unreachable!("non-bipartite sampler exhausted its rejection budget");
}

/// Random connected bipartite graph on `n >= 2` vertices.
pub fn bipartite_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    debug_assert!(n >= 2);
    for _ in 0..MAX_REJECTIONS {
        let sides: Vec<bool> = loop {
            let sides: Vec<bool> = (0..n).map(|_| rng.next_u64() & 1 == 1).collect();
            if sides.iter().any(|&s| s) && sides.iter().any(|&s| !s) {
                break sides;
            }
        };
        let p = edge_probability(rng);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if sides[u] != sides[v] && uniform01(rng) < p {
                    g.add_edge(u, v);
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
    unreachable!("bipartite sampler exhausted its rejection budget");
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn identical_seeds_reproduce_identical_graphs() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let ga = er_graph(&mut a, 8);
            let gb = er_graph(&mut b, 8);
            assert_eq!(ga.edges().collect::<Vec<_>>(), gb.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn class_samplers_meet_their_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [4, 6, 8] {
            let c = connected_graph(&mut rng, n);
            assert!(c.is_connected());
            let nb = nonbipartite_connected_graph(&mut rng, n);
            assert!(nb.is_connected() && !nb.is_bipartite());
            let bp = bipartite_connected_graph(&mut rng, n);
            assert!(bp.is_connected() && bp.is_bipartite());
        }
    }
}
