//! Naive reference oracles shared by the integration-test binaries.
//!
//! Each oracle recomputes a quantity by direct enumeration with no pruning
//! beyond feasibility, so a solver bug cannot hide inside cleverness the
//! two sides share.  Everything here is exponential and meant for the
//! small sizes the tests sample.

use itertools::Itertools;
use tokgraph::graph::Graph;

fn is_independent(g: &Graph, mask: u32) -> bool {
    g.edges()
        .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
}

fn is_dominating(g: &Graph, mask: u32) -> bool {
    (0..g.vertex_count()).all(|v| {
        mask >> v & 1 == 1 || g.neighbors(v).iter().any(|u| mask >> u & 1 == 1)
    })
}

/// Maximum independent set size by full subset enumeration.
pub fn naive_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| is_independent(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum clique size: an independent set of the complement.
pub fn naive_omega(g: &Graph) -> usize {
    naive_alpha(&g.complement())
}

/// Minimum dominating set size by full subset enumeration.
pub fn naive_gamma(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| is_dominating(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("the full vertex set dominates")
}

/// Minimum independent dominating set size by full subset enumeration.
pub fn naive_idom(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&m| is_independent(g, m) && is_dominating(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .expect("a maximal independent set dominates")
}

/// Chromatic number by first-fit backtracking over at most `k` colors,
/// trying k = 1, 2, ... in order.
pub fn naive_chi(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| colorable(g, k, &mut vec![usize::MAX; n], 0))
        .expect("n colors always suffice")
}

fn colorable(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for c in 0..k {
        let clash = g.neighbors(v).iter().any(|u| u < v && colors[u] == c);
        if !clash {
            colors[v] = c;
            if colorable(g, k, colors, v + 1) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// All-bijections adjacency oracle for the exact-move token graph: are the
/// sorted configs `a` and `b` joined by a bijection moving exactly `m`
/// tokens, each along an edge of `g`?
pub fn brute_move_adjacent(g: &Graph, a: &[usize], b: &[usize], m: usize) -> bool {
    if a == b {
        return false; // simple graphs: no self-loops
    }
    b.iter()
        .copied()
        .permutations(b.len())
        .any(|img| bijection_moves(g, a, &img) == Some(m))
}

/// Move count of the bijection `a[i] -> img[i]` when every moved pair is an
/// edge of `g`, else `None`.
fn bijection_moves(g: &Graph, a: &[usize], img: &[usize]) -> Option<usize> {
    let mut moves = 0;
    for (&x, &y) in a.iter().zip(img) {
        if x != y {
            if !g.has_edge(x, y) {
                return None;
            }
            moves += 1;
        }
    }
    Some(moves)
}

/// One-move oracle for the ordinary token graph: one token slides along an
/// edge onto an unoccupied vertex, everything else stays put.
pub fn one_move_adjacent(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    let a_only: Vec<usize> = a.iter().copied().filter(|x| !b.contains(x)).collect();
    let b_only: Vec<usize> = b.iter().copied().filter(|x| !a.contains(x)).collect();
    matches!((a_only.as_slice(), b_only.as_slice()), (&[x], &[y]) if g.has_edge(x, y))
}

/// Number of automorphisms by sweeping all n! vertex permutations.  Mapping
/// every edge onto an edge suffices: the induced map on the finite edge set
/// is injective, hence onto.
pub fn brute_automorphism_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0..n)
        .permutations(n)
        .filter(|p| g.edges().all(|(u, v)| g.has_edge(p[u], p[v])))
        .count()
}
