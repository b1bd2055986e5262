//! Token graphs: vertices are k-subsets of a base graph's vertices
//! ("configurations" of k indistinguishable tokens), and edges capture
//! simultaneous token moves.
//!
//! The main construction `build_token_graph(G, k, m)` joins two configs
//! when some bijection between them moves exactly `m` tokens, each along an
//! edge of `G`, and fixes the other `k - m`.  Tokens may land on vertices
//! vacated in the same move, so `m` tokens can shift around a cycle.
//! Variants cover the symmetric-difference definitions (a perfect matching,
//! or all edges, between `A \ B` and `B \ A`) and the union over all move
//! counts `1..=k`.

use crate::combin::{binomial, subset_rank, subset_unrank};
use crate::family::ParamError;
use crate::graph::Graph;
use crate::matching::has_perfect_matching;
use itertools::Itertools;

/// A set of `k` tokens, stored as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TokenConfig(Vec<usize>);

impl TokenConfig {
    /// Validate that `members` is strictly increasing.
    pub fn new(members: Vec<usize>) -> Result<Self, ParamError> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ParamError {
                field: "members".into(),
                message: format!("config must be strictly increasing, got {members:?}"),
            });
        }
        Ok(TokenConfig(members))
    }

    /// Sort and deduplicate arbitrary input; errors only if duplicates made
    /// the set smaller than intended.
    pub fn from_unsorted(mut members: Vec<usize>) -> Result<Self, ParamError> {
        let len = members.len();
        members.sort_unstable();
        members.dedup();
        if members.len() != len {
            return Err(ParamError {
                field: "members".into(),
                message: "config vertices must be distinct".into(),
            });
        }
        Ok(TokenConfig(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Display form used for vertex labels, e.g. `{0,2,5}`.
    pub fn label(&self) -> String {
        format!("{{{}}}", self.0.iter().join(","))
    }
}

/// Which token-graph flavor a [`TokenGraph`] was built as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenVariant {
    /// Exactly `m` tokens move, each along an edge (fixed points allowed to
    /// be landed on — cyclic shifts count).
    ExactMoves { m: usize },
    /// `|A Δ B| = 2r` and a perfect matching of `G`-edges joins `A \ B`
    /// to `B \ A`.
    SymmetricDifferenceMatching { r: usize },
    /// `|A Δ B| = 2r` and every pair across `A \ B` and `B \ A` is an edge.
    SymmetricDifferenceAllEdges { r: usize },
    /// Union of the exact-move graphs for every move count `1..=k`.
    MoveUnion,
}

/// A token graph together with its base graph and construction parameters.
///
/// Vertex `i` is the `i`-th k-subset of the base vertex set in
/// lexicographic order; [`TokenGraph::config`] and [`TokenGraph::index_of`]
/// translate both ways.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    graph: Graph,
    base: Graph,
    k: usize,
    variant: TokenVariant,
}

impl TokenGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> TokenVariant {
        self.variant
    }

    /// The config at vertex index `i`.
    pub fn config(&self, i: usize) -> TokenConfig {
        TokenConfig(subset_unrank(self.base.vertex_count(), self.k, i as u64))
    }

    /// The vertex index of `config`.
    pub fn index_of(&self, config: &TokenConfig) -> usize {
        subset_rank(self.base.vertex_count(), config.members()) as usize
    }

    /// Labels for every vertex, in vertex order.
    pub fn labels(&self) -> Vec<String> {
        (0..self.graph.vertex_count())
            .map(|i| self.config(i).label())
            .collect()
    }
}

fn check_k_m(n: usize, k: usize, m: usize, m_name: &str) -> Result<(), ParamError> {
    if k == 0 || k > n {
        return Err(ParamError {
            field: "k".into(),
            message: format!("need 1 <= k <= {n}, got {k}"),
        });
    }
    if m == 0 || m > k {
        return Err(ParamError {
            field: m_name.into(),
            message: format!("need 1 <= {m_name} <= k = {k}, got {m}"),
        });
    }
    Ok(())
}

fn check_config(g: &Graph, name: &str, c: &TokenConfig) -> Result<(), ParamError> {
    match c.members().last() {
        Some(&max) if max >= g.vertex_count() => Err(ParamError {
            field: name.into(),
            message: format!("vertex {max} out of range for a {}-vertex graph", g.vertex_count()),
        }),
        _ => Ok(()),
    }
}

/// Sorted-list set difference `a \ b`.
fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

/// Sorted-list set intersection.
fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Can `movers_a` be matched one-to-one onto `movers_b` using only edges
/// of `g`?  (Loops do not exist, so a shared vertex never maps to itself.)
fn edge_matching_exists(g: &Graph, movers_a: &[usize], movers_b: &[usize]) -> bool {
    let adj: Vec<Vec<usize>> = movers_a
        .iter()
        .map(|&x| {
            movers_b
                .iter()
                .positions(|&y| g.has_edge(x, y))
                .collect()
        })
        .collect();
    has_perfect_matching(&adj, movers_b.len())
}

/// Decide adjacency in the exact-move token graph: is there a bijection
/// `A -> B` with exactly `m` token moves along edges of `g` and `|A| - m`
/// fixed points?  `A = B` is never adjacent (token graphs are simple).
pub fn config_adjacent(
    g: &Graph,
    a: &TokenConfig,
    b: &TokenConfig,
    m: usize,
) -> Result<bool, ParamError> {
    if a.len() != b.len() {
        return Err(ParamError {
            field: "configs".into(),
            message: format!("config sizes differ: {} vs {}", a.len(), b.len()),
        });
    }
    check_k_m(g.vertex_count(), a.len().max(1), m, "m")?;
    check_config(g, "a", a)?;
    check_config(g, "b", b)?;
    Ok(config_adjacent_unchecked(g, a.members(), b.members(), m))
}

fn config_adjacent_unchecked(g: &Graph, a: &[usize], b: &[usize], m: usize) -> bool {
    if a == b {
        return false;
    }
    let k = a.len();
    let a_only = difference(a, b);
    if a_only.len() > m {
        return false; // every vertex of A \ B must be one of the m movers
    }
    let common = intersection(a, b);
    let fixed = k - m;
    if common.len() < fixed {
        return false;
    }
    // Choose which shared vertices stay put; the rest must move along edges.
    common.iter().combinations(fixed).any(|f| {
        let f: Vec<usize> = f.into_iter().copied().collect();
        let movers_a = difference(a, &f);
        let movers_b = difference(b, &f);
        edge_matching_exists(g, &movers_a, &movers_b)
    })
}

fn build_with(
    g: &Graph,
    k: usize,
    variant: TokenVariant,
    mut adjacent: impl FnMut(&Graph, &[usize], &[usize]) -> bool,
) -> TokenGraph {
    let n = g.vertex_count();
    let configs: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    debug_assert_eq!(configs.len() as u64, binomial(n, k));
    let mut t = Graph::empty(configs.len());
    for (i, a) in configs.iter().enumerate() {
        for (j, b) in configs.iter().enumerate().skip(i + 1) {
            if adjacent(g, a, b) {
                t.add_edge(i, j);
            }
        }
    }
    TokenGraph {
        graph: t,
        base: g.clone(),
        k,
        variant,
    }
}

/// Build the token graph on k-subsets of `g` where edges are exactly-`m`
/// simultaneous moves.  `m = 1` is the ordinary token graph.
pub fn build_token_graph(g: &Graph, k: usize, m: usize) -> Result<TokenGraph, ParamError> {
    check_k_m(g.vertex_count(), k, m, "m")?;
    Ok(build_with(g, k, TokenVariant::ExactMoves { m }, |g, a, b| {
        config_adjacent_unchecked(g, a, b, m)
    }))
}

/// Which symmetric-difference adjacency rule [`build_variant`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantKind {
    /// Perfect matching of edges between `A \ B` and `B \ A`.
    Matching,
    /// All pairs across `A \ B` and `B \ A` must be edges.
    AllEdges,
}

/// Build the symmetric-difference token graph: configs are adjacent when
/// `|A Δ B| = 2r` and the `kind` condition holds between `A \ B` and
/// `B \ A`.  Unlike the exact-move graph, shared tokens never move.
pub fn build_variant(g: &Graph, k: usize, r: usize, kind: VariantKind) -> Result<TokenGraph, ParamError> {
    check_k_m(g.vertex_count(), k, r, "r")?;
    let variant = match kind {
        VariantKind::Matching => TokenVariant::SymmetricDifferenceMatching { r },
        VariantKind::AllEdges => TokenVariant::SymmetricDifferenceAllEdges { r },
    };
    Ok(build_with(g, k, variant, move |g, a, b| {
        let a_only = difference(a, b);
        if a_only.len() != r {
            return false;
        }
        let b_only = difference(b, a);
        match kind {
            VariantKind::Matching => edge_matching_exists(g, &a_only, &b_only),
            VariantKind::AllEdges => a_only
                .iter()
                .all(|&x| b_only.iter().all(|&y| g.has_edge(x, y))),
        }
    }))
}

/// Build the union over move counts: configs are adjacent when some
/// bijection maps `A` to `B` with every token fixed or moved along an edge,
/// and at least one moved.
pub fn build_move_union(g: &Graph, k: usize) -> Result<TokenGraph, ParamError> {
    check_k_m(g.vertex_count(), k, k, "k")?;
    Ok(build_with(g, k, TokenVariant::MoveUnion, move |g, a, b| {
        (1..=k).any(|m| config_adjacent_unchecked(g, a, b, m))
    }))
}

/// Closed-form degree of the config `{v, w}` in the two-token exact-two-move
/// graph: with `c = |N(v) ∩ N(w)|`, the degree is
/// `d(v)·d(w) − c(c+1)/2`, minus one more when `v ~ w`.
pub fn predicted_degree_f22(g: &Graph, v: usize, w: usize) -> Result<usize, ParamError> {
    if v == w {
        return Err(ParamError {
            field: "v,w".into(),
            message: "the two config vertices must be distinct".into(),
        });
    }
    let n = g.vertex_count();
    if v >= n || w >= n {
        return Err(ParamError {
            field: "v,w".into(),
            message: format!("vertex out of range for a {n}-vertex graph"),
        });
    }
    let c = g.neighbors(v).intersect_count(g.neighbors(w));
    let mut d = g.degree(v) * g.degree(w) - c * (c + 1) / 2;
    if g.has_edge(v, w) {
        d -= 1;
    }
    Ok(d)
}

/// Decide whether the move-union token graph on k-subsets is complete,
/// without building it: true iff every `(k+1)`-subset of `g` induces a
/// connected subgraph.
///
/// This is the contrapositive of the witness form: a disconnected or
/// edgeless induced `(k+1)`-subset is exactly a complete or complete
/// bipartite subgraph of the complement spanning more than `k` vertices.
/// [`arcs_union_complete_condition_literal`] checks that witness form
/// directly; the two are asserted equivalent in tests.
pub fn arcs_union_complete_condition(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if k >= n {
        return true; // no (k+1)-subsets exist
    }
    (0..n)
        .combinations(k + 1)
        .all(|s| g.induced(&s).is_connected())
}

/// Literal witness search for the same condition: false iff the complement
/// of `g` contains a complete graph or a complete bipartite graph on more
/// than `k` vertices in total.
pub fn arcs_union_complete_condition_literal(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if k >= n {
        return true;
    }
    for s in (0..n).combinations(k + 1) {
        // K_{k+1} in the complement: s independent in g.
        if s.iter()
            .tuple_combinations()
            .all(|(&x, &y)| !g.has_edge(x, y))
        {
            return false;
        }
        // K_{a,b} in the complement with a + b = k + 1: a side split of s
        // with no g-edges across.
        let splits = 1u32 << (s.len() - 1); // fix s[0]'s side to halve the work
        for mask in 0..splits {
            let (mut x, mut y) = (vec![s[0]], Vec::new());
            for (i, &v) in s.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    x.push(v);
                } else {
                    y.push(v);
                }
            }
            if y.is_empty() {
                continue;
            }
            if x.iter().all(|&u| y.iter().all(|&v| !g.has_edge(u, v))) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn cfg(members: &[usize]) -> TokenConfig {
        TokenConfig::new(members.to_vec()).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(TokenConfig::new(vec![0, 2, 5]).is_ok());
        assert!(TokenConfig::new(vec![2, 0]).is_err());
        assert!(TokenConfig::new(vec![1, 1]).is_err());
        assert_eq!(TokenConfig::from_unsorted(vec![5, 0, 2]).unwrap(), cfg(&[0, 2, 5]));
        assert!(TokenConfig::from_unsorted(vec![1, 1]).is_err());
        assert_eq!(cfg(&[0, 2]).label(), "{0,2}");
    }

    #[test]
    fn four_cycle_double_moves() {
        let c4 = family::cycle(4);
        // Opposite pairs swap along disjoint edges.
        assert!(config_adjacent(&c4, &cfg(&[0, 2]), &cfg(&[1, 3]), 2).unwrap());
        // Overlapping configs: 0 -> 3 and 1 -> 0 are both cycle edges, and
        // token 1 lands on the vertex token 0 just left.
        assert!(config_adjacent(&c4, &cfg(&[0, 1]), &cfg(&[0, 3]), 2).unwrap());
        // A chain shift 0 -> 1 -> 2 moves both tokens along edges.
        assert!(config_adjacent(&c4, &cfg(&[0, 1]), &cfg(&[1, 2]), 2).unwrap());
        assert!(!config_adjacent(&c4, &cfg(&[0, 2]), &cfg(&[0, 2]), 2).unwrap());
    }

    #[test]
    fn exact_move_count_is_not_at_most() {
        // P_3 = 0-1-2: {0,2} -> {1,2} needs exactly one move (0 -> 1); with
        // m = 2 both tokens must move, which P_3 cannot support here.
        let p3 = family::path(3);
        assert!(config_adjacent(&p3, &cfg(&[0, 2]), &cfg(&[1, 2]), 1).unwrap());
        assert!(!config_adjacent(&p3, &cfg(&[0, 2]), &cfg(&[1, 2]), 2).unwrap());
    }

    #[test]
    fn four_cycle_splits_into_k4_and_k2() {
        let t = build_token_graph(&family::cycle(4), 2, 2).unwrap();
        assert_eq!(t.graph().vertex_count(), 6);
        let mut sizes: Vec<usize> = t.graph().components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        // The 4-component is complete and the 2-component is an edge.
        for comp in t.graph().components() {
            let h = t.graph().induced(&comp);
            assert_eq!(h.edge_count(), h.vertex_count() * (h.vertex_count() - 1) / 2);
        }
    }

    #[test]
    fn star_gives_clique_plus_isolated_leaf_pairs() {
        // K_{1,3}: pairs containing the center form K_3; leaf pairs freeze.
        let t = build_token_graph(&family::star(3), 2, 2).unwrap();
        assert_eq!(t.graph().vertex_count(), 6);
        assert_eq!(t.graph().isolated_count(), 3);
        assert_eq!(t.graph().edge_count(), 3);
    }

    #[test]
    fn single_move_graph_of_path() {
        // F_2(P_3) is again a path on the three configs.
        let t = build_token_graph(&family::path(3), 2, 1).unwrap();
        assert_eq!(t.graph().degree_sequence(), vec![1, 1, 2]);
    }

    #[test]
    fn config_index_roundtrip_and_labels() {
        let t = build_token_graph(&family::path(4), 2, 1).unwrap();
        for i in 0..t.graph().vertex_count() {
            assert_eq!(t.index_of(&t.config(i)), i);
        }
        assert_eq!(t.labels()[0], "{0,1}");
        assert_eq!(t.labels()[5], "{2,3}");
    }

    #[test]
    fn variant_matching_restricts_overlap_moves() {
        // On C_4 with k = r = 2 the symmetric-difference graph drops the
        // overlapping edges the exact-2-move graph has.
        let c4 = family::cycle(4);
        let exact = build_token_graph(&c4, 2, 2).unwrap();
        let sym = build_variant(&c4, 2, 2, VariantKind::Matching).unwrap();
        let i01 = sym.index_of(&cfg(&[0, 1]));
        let i03 = sym.index_of(&cfg(&[0, 3]));
        assert!(exact.graph().has_edge(i01, i03));
        assert!(!sym.graph().has_edge(i01, i03));
        // r = 1 matching variant is the ordinary one-move token graph.
        let one = build_variant(&c4, 2, 1, VariantKind::Matching).unwrap();
        let ordinary = build_token_graph(&c4, 2, 1).unwrap();
        assert_eq!(one.graph(), ordinary.graph());
    }

    #[test]
    fn all_edges_variant_on_empty_base_is_edgeless() {
        let g = crate::graph::Graph::empty(5);
        let t = build_variant(&g, 2, 2, VariantKind::AllEdges).unwrap();
        assert_eq!(t.graph().edge_count(), 0);
    }

    #[test]
    fn move_union_on_triangle_is_complete() {
        let t = build_move_union(&family::complete(3), 2).unwrap();
        assert_eq!(t.graph().edge_count(), 3); // K_3 on three configs
    }

    #[test]
    fn move_union_on_path_is_complete_too() {
        // {0,2} reaches {1,2} with one move and {0,1} by sliding a token;
        // every (2+1)-subset of P_3 (the whole path) is connected, so the
        // union is complete — and the condition checkers agree.
        let p3 = family::path(3);
        let t = build_move_union(&p3, 2).unwrap();
        assert_eq!(t.graph().edge_count(), 3);
        assert!(arcs_union_complete_condition(&p3, 2));
        assert!(arcs_union_complete_condition_literal(&p3, 2));
    }

    #[test]
    fn move_union_detects_incompleteness() {
        // P_4 has a disconnected induced 3-subset ({0, 2, 3} misses 1-2...
        // {0,2,3} induces edge 2-3 plus isolated 0), so the union on pairs
        // is not complete.
        let p4 = family::path(4);
        assert!(!arcs_union_complete_condition(&p4, 2));
        assert!(!arcs_union_complete_condition_literal(&p4, 2));
        let t = build_move_union(&p4, 2).unwrap();
        let n = t.graph().vertex_count();
        assert!(t.graph().edge_count() < n * (n - 1) / 2);
    }

    #[test]
    fn literal_condition_sees_splits_isolating_the_smallest_vertex() {
        // Complement = a star centred on vertex 0, so the only complete
        // bipartite witnesses put 0 alone on one side; the split
        // enumeration must not skip that case.
        let mut g = crate::graph::Graph::empty(3);
        g.add_edge(1, 2);
        assert!(!arcs_union_complete_condition(&g, 2));
        assert!(!arcs_union_complete_condition_literal(&g, 2));
    }

    #[test]
    fn degree_formula_spot_checks() {
        let c4 = family::cycle(4);
        assert_eq!(predicted_degree_f22(&c4, 0, 2).unwrap(), 1);
        assert_eq!(predicted_degree_f22(&c4, 0, 1).unwrap(), 3);
        let k3 = family::complete(3);
        assert_eq!(predicted_degree_f22(&k3, 0, 1).unwrap(), 2);
        assert!(predicted_degree_f22(&c4, 1, 1).is_err());
    }

    #[test]
    fn parameter_errors() {
        let g = family::path(3);
        assert!(build_token_graph(&g, 4, 1).is_err());
        assert!(build_token_graph(&g, 2, 0).is_err());
        assert!(build_token_graph(&g, 2, 3).is_err());
        assert!(config_adjacent(&g, &cfg(&[0, 1]), &cfg(&[0]), 1).is_err());
        assert!(config_adjacent(&g, &cfg(&[0, 5]), &cfg(&[0, 1]), 1).is_err());
    }
}
