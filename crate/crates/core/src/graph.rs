//! Simple undirected graphs on `{0, ..., n-1}` with bit-set adjacency rows.

use crate::bits::VertexSet;

/// An edge list referred to a vertex outside the graph, or a self-loop.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge {index} is a self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} mentions vertex {vertex}, but the graph has only {n} vertices")]
    OutOfRange { index: usize, vertex: usize, n: usize },
}

/// Simple undirected graph; no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            m: 0,
        }
    }

    /// Build from an edge list, rejecting loops and out-of-range endpoints.
    /// Duplicate edges are accepted and collapse to one.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (index, (u, v)) in edges.into_iter().enumerate() {
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        index,
                        vertex: w,
                        n,
                    });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Insert an edge; panics (debug) on loops or out-of-range vertices.
    /// Re-inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Neighbourhood of `v` as a bit set (borrow; do not mutate through it).
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Cartesian product: `(u, a) ~ (u, b)` when `a ~ b`, and
    /// `(u, a) ~ (v, a)` when `u ~ v`.  Vertex `(u, a)` gets index
    /// `u * other.n + a`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n * other.n);
        let idx = |u: usize, a: usize| u * other.n + a;
        for u in 0..self.n {
            for (a, b) in other.edges() {
                g.add_edge(idx(u, a), idx(u, b));
            }
        }
        for (u, v) in self.edges() {
            for a in 0..other.n {
                g.add_edge(idx(u, a), idx(v, a));
            }
        }
        g
    }

    /// Tensor (categorical) product: `(u, a) ~ (v, b)` when `u ~ v` and
    /// `a ~ b`.  Same index scheme as [`Graph::cartesian_product`].
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n * other.n);
        let idx = |u: usize, a: usize| u * other.n + a;
        for (u, v) in self.edges() {
            for (a, b) in other.edges() {
                g.add_edge(idx(u, a), idx(v, b));
                g.add_edge(idx(u, b), idx(v, a));
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-color the graph if possible: `Some(side)` with `side[v] ∈ {0, 1}`,
    /// or `None` when an odd cycle exists.  Each component is colored from
    /// its smallest vertex, which gets side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by `keep` (sorted, deduplicated internally); vertex
    /// `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut vs: Vec<usize> = keep.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Apply a permutation: vertex `v` of `self` becomes `perm[v]` in the
    /// result, so `result.has_edge(perm[u], perm[v]) == self.has_edge(u, v)`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Leaves grouped by their support vertex: one `(support, leaves)` entry
    /// per vertex that has at least one degree-1 neighbour, ordered by
    /// support index, leaves sorted.
    pub fn leaf_stars(&self) -> Vec<(usize, Vec<usize>)> {
        let mut by_support: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            if self.degree(v) == 1 {
                let support = self.adj[v].first().expect("degree-1 vertex has a neighbour");
                by_support[support].push(v);
            }
        }
        by_support
            .into_iter()
            .enumerate()
            .filter(|(_, leaves)| !leaves.is_empty())
            .collect()
    }

    /// Count vertices of degree 0.
    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn from_edge_list_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (2, 2)]),
            Err(GraphError::SelfLoop { index: 1, vertex: 2 })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::OutOfRange { index: 0, vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn complement_of_four_cycle_is_perfect_matching() {
        let c4 = cycle(4);
        let comp = c4.complement();
        assert_eq!(comp.edge_count(), 2);
        assert!(comp.has_edge(0, 2) && comp.has_edge(1, 3));
        assert_eq!(comp.degree_sequence(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn cartesian_product_prism() {
        // C_5 x K_2 (pentagonal prism): 10 vertices, 15 edges, 3-regular.
        let g = cycle(5).cartesian_product(&path(2));
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degree_sequence().iter().all(|&d| d == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn tensor_product_of_two_edges_is_two_disjoint_edges() {
        let k2 = path(2);
        let g = k2.tensor_product(&k2);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn components_and_bipartition() {
        let g = cycle(4).disjoint_union(&cycle(3));
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert!(!g.is_connected());
        assert!(!g.is_bipartite());
        assert!(cycle(4).is_bipartite());
        let side = cycle(6).bipartition().unwrap();
        assert_eq!(side, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn induced_subgraph_relabels_compactly() {
        let g = cycle(5);
        let h = g.induced(&[0, 1, 3]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 1); // only 0-1 survives
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn relabel_moves_edges() {
        let g = path(3); // 0-1-2
        let h = g.relabel(&[2, 0, 1]); // 0->2, 1->0, 2->1
        assert!(h.has_edge(2, 0) && h.has_edge(0, 1));
        assert!(!h.has_edge(1, 2));
    }

    #[test]
    fn leaf_stars_on_path_and_spider() {
        assert_eq!(path(4).leaf_stars(), vec![(1, vec![0]), (2, vec![3])]);
        // Star K_{1,3}: all leaves share support 0.
        let star = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.leaf_stars(), vec![(0, vec![1, 2, 3])]);
        assert_eq!(cycle(4).leaf_stars(), vec![]);
    }

    #[test]
    fn isolated_count_counts_degree_zero() {
        let g = Graph::from_edge_list(4, [(0, 1)]).unwrap();
        assert_eq!(g.isolated_count(), 2);
    }
}
