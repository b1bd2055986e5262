//! Exact graph invariants with validating witnesses.
//!
//! Everything here is exact — no heuristics-only mode.  Each solver returns
//! an [`InvariantWitness`] that can be re-validated against the graph, and
//! charges its search nodes to a [`Budget`] so oversized instances fail
//! loudly instead of answering wrong or hanging.  Branching is
//! deterministic (lowest index breaks every tie), so repeated runs produce
//! identical witnesses.

use crate::bits::VertexSet;
use crate::budget::{Budget, ResourceError};
use crate::family::{cycle, ParamError};
use crate::graph::Graph;
use crate::token::{build_token_graph, TokenConfig};
use serde::Serialize;

/// Either a proper 2-coloring or an explicit odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartitenessCertificate {
    /// `side[v]` is 0 or 1; every edge crosses sides.
    TwoColoring { side: Vec<u8> },
    /// A closed cycle of odd length; consecutive entries (cyclically) are
    /// adjacent and all entries are distinct.
    OddCycle { cycle: Vec<usize> },
}

impl BipartitenessCertificate {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartitenessCertificate::TwoColoring { .. })
    }

    /// Check the certificate against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match self {
            BipartitenessCertificate::TwoColoring { side } => {
                if side.len() != g.vertex_count() {
                    return Err("coloring length differs from vertex count".into());
                }
                if let Some(&v) = side.iter().find(|&&s| s > 1) {
                    return Err(format!("side {v} is not 0 or 1"));
                }
                for (u, v) in g.edges() {
                    if side[u] == side[v] {
                        return Err(format!("edge ({u},{v}) does not cross sides"));
                    }
                }
                Ok(())
            }
            BipartitenessCertificate::OddCycle { cycle } => {
                if cycle.len() < 3 || cycle.len() % 2 == 0 {
                    return Err(format!("cycle length {} is not odd and >= 3", cycle.len()));
                }
                let mut seen = std::collections::HashSet::new();
                if !cycle.iter().all(|&v| seen.insert(v)) {
                    return Err("cycle repeats a vertex".into());
                }
                for i in 0..cycle.len() {
                    let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    if !g.has_edge(u, v) {
                        return Err(format!("cycle step ({u},{v}) is not an edge"));
                    }
                }
                Ok(())
            }
        }
    }
}

/// BFS 2-coloring; on failure, the violating edge plus the two tree paths
/// to their lowest common ancestor form an explicit odd cycle.
pub fn bipartiteness(g: &Graph) -> BipartitenessCertificate {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return BipartitenessCertificate::OddCycle {
                        cycle: odd_cycle_through(u, v, &parent, &depth),
                    };
                }
            }
        }
    }
    BipartitenessCertificate::TwoColoring { side }
}

/// Join BFS-tree paths from `u` and `v` at their lowest common ancestor;
/// with the edge (v, u) this closes an odd cycle because `u` and `v` sit at
/// depths of equal parity.
fn odd_cycle_through(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut path_a = vec![a];
    let mut path_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        path_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        path_b.push(b);
    }
    while a != b {
        a = parent[a];
        path_a.push(a);
        b = parent[b];
        path_b.push(b);
    }
    // path_a ends at the common ancestor; path_b's copy of it is dropped.
    path_b.pop();
    path_b.reverse();
    path_a.extend(path_b);
    path_a
}

/// The kind-specific payload of an exact invariant's certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    IndependentSet { vertices: Vec<usize> },
    Clique { vertices: Vec<usize> },
    Coloring { colors: Vec<usize> },
    DominatingSet { vertices: Vec<usize> },
    IndependentDominatingSet { vertices: Vec<usize> },
}

/// An exact invariant value together with a certificate for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantWitness {
    pub value: usize,
    pub witness: Witness,
}

impl InvariantWitness {
    /// Re-check the witness against `g`: the certificate must satisfy its
    /// defining property and its size (or color count) must equal `value`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let check_set = |vs: &[usize]| -> Result<(), String> {
            if vs.windows(2).any(|w| w[0] >= w[1]) {
                return Err("witness vertices must be strictly increasing".into());
            }
            match vs.iter().find(|&&v| v >= g.vertex_count()) {
                Some(&v) => Err(format!("witness vertex {v} out of range")),
                None => Ok(()),
            }
        };
        let independent = |vs: &[usize]| -> Result<(), String> {
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    if g.has_edge(u, v) {
                        return Err(format!("vertices {u} and {v} are adjacent"));
                    }
                }
            }
            Ok(())
        };
        let dominating = |vs: &[usize]| -> Result<(), String> {
            let mut dominated = VertexSet::new(g.vertex_count());
            for &v in vs {
                dominated.insert(v);
                dominated.union_with(g.neighbors(v));
            }
            if dominated.count() == g.vertex_count() {
                Ok(())
            } else {
                Err("set does not dominate every vertex".into())
            }
        };
        match &self.witness {
            Witness::IndependentSet { vertices } => {
                check_set(vertices)?;
                independent(vertices)?;
                (vertices.len() == self.value)
                    .then_some(())
                    .ok_or_else(|| "value differs from witness size".into())
            }
            Witness::Clique { vertices } => {
                check_set(vertices)?;
                for (i, &u) in vertices.iter().enumerate() {
                    for &v in &vertices[i + 1..] {
                        if !g.has_edge(u, v) {
                            return Err(format!("vertices {u} and {v} are not adjacent"));
                        }
                    }
                }
                (vertices.len() == self.value)
                    .then_some(())
                    .ok_or_else(|| "value differs from witness size".into())
            }
            Witness::Coloring { colors } => {
                if colors.len() != g.vertex_count() {
                    return Err("coloring length differs from vertex count".into());
                }
                for (u, v) in g.edges() {
                    if colors[u] == colors[v] {
                        return Err(format!("edge ({u},{v}) is monochromatic"));
                    }
                }
                let distinct = colors.iter().collect::<std::collections::HashSet<_>>().len();
                (distinct == self.value)
                    .then_some(())
                    .ok_or_else(|| "value differs from color count".into())
            }
            Witness::DominatingSet { vertices } => {
                check_set(vertices)?;
                dominating(vertices)?;
                (vertices.len() == self.value)
                    .then_some(())
                    .ok_or_else(|| "value differs from witness size".into())
            }
            Witness::IndependentDominatingSet { vertices } => {
                check_set(vertices)?;
                independent(vertices)?;
                dominating(vertices)?;
                (vertices.len() == self.value)
                    .then_some(())
                    .ok_or_else(|| "value differs from witness size".into())
            }
        }
    }
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    g.components()
}

/// Greedy clique cover of `cand`: an upper bound on how many independent
/// vertices `cand` can still contribute.
fn clique_cover_bound(g: &Graph, cand: &VertexSet) -> usize {
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match cliques
            .iter_mut()
            .find(|q| q.is_subset(g.neighbors(v)))
        {
            Some(q) => q.insert(v),
            None => {
                let mut q = VertexSet::new(g.vertex_count());
                q.insert(v);
                cliques.push(q);
            }
        }
    }
    cliques.len()
}

fn mis_search(
    g: &Graph,
    cand: VertexSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<(), ResourceError> {
    budget.tick()?;
    if current.len() + clique_cover_bound(g, &cand) <= best.len() {
        return Ok(());
    }
    let Some(v) = cand.first() else {
        // cand is empty and the bound says we are strictly better
        *best = current.clone();
        return Ok(());
    };
    // Take v.
    let mut with_v = cand.clone();
    with_v.remove(v);
    with_v.subtract(g.neighbors(v));
    current.push(v);
    mis_search(g, with_v, current, best, budget)?;
    current.pop();
    // Skip v — pointless when v has no candidate neighbors, since taking
    // it then costs nothing.
    if g.neighbors(v).intersect_count(&cand) > 0 {
        let mut without_v = cand;
        without_v.remove(v);
        mis_search(g, without_v, current, best, budget)?;
    }
    Ok(())
}

/// Maximum independent set of `g` as sorted vertices (no decomposition;
/// the public entry points decompose by component first).
fn max_independent_set(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, ResourceError> {
    // Greedy seed: take every vertex not adjacent to an earlier pick.
    let mut best = Vec::new();
    let mut blocked = VertexSet::new(g.vertex_count());
    for v in 0..g.vertex_count() {
        if !blocked.contains(v) {
            best.push(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    let mut current = Vec::new();
    mis_search(g, VertexSet::full(g.vertex_count()), &mut current, &mut best, budget)?;
    best.sort_unstable();
    Ok(best)
}

/// Run `solve` on each connected component and merge the translated results.
fn per_component<T>(
    g: &Graph,
    budget: &mut Budget,
    mut solve: impl FnMut(&Graph, &mut Budget) -> Result<T, ResourceError>,
) -> Result<Vec<(Vec<usize>, T)>, ResourceError> {
    g.components()
        .into_iter()
        .map(|comp| {
            let h = g.induced(&comp);
            let sol = solve(&h, budget)?;
            Ok((comp, sol))
        })
        .collect()
}

/// Exact independence number α with a maximum independent set witness.
/// Branch and bound per component with a greedy clique-cover bound.
pub fn independence_number(g: &Graph, budget: &mut Budget) -> Result<InvariantWitness, ResourceError> {
    let mut vertices = Vec::new();
    for (comp, sol) in per_component(g, budget, max_independent_set)? {
        vertices.extend(sol.into_iter().map(|i| comp[i]));
    }
    vertices.sort_unstable();
    Ok(InvariantWitness {
        value: vertices.len(),
        witness: Witness::IndependentSet { vertices },
    })
}

/// Exact clique number ω, computed as independence on the complement of
/// each component.
pub fn clique_number(g: &Graph, budget: &mut Budget) -> Result<InvariantWitness, ResourceError> {
    let mut vertices: Vec<usize> = Vec::new();
    for (comp, sol) in per_component(g, budget, |h, b| max_independent_set(&h.complement(), b))? {
        if sol.len() > vertices.len() {
            vertices = sol.into_iter().map(|i| comp[i]).collect();
        }
    }
    vertices.sort_unstable();
    Ok(InvariantWitness {
        value: vertices.len(),
        witness: Witness::Clique { vertices },
    })
}

/// Saturation-ordered backtracking coloring with exactly `k` colors
/// available and `clique` pre-colored; returns a full assignment if one
/// exists.
fn try_color(
    g: &Graph,
    k: usize,
    clique: &[usize],
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, ResourceError> {
    let n = g.vertex_count();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = Some(c);
    }
    fn rec(
        g: &Graph,
        k: usize,
        colors: &mut Vec<Option<usize>>,
        assigned: usize,
        max_used: usize,
        budget: &mut Budget,
    ) -> Result<bool, ResourceError> {
        budget.tick()?;
        let n = g.vertex_count();
        if assigned == n {
            return Ok(true);
        }
        // Most saturated uncolored vertex; ties to higher degree, then
        // lower index.
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut seen = 0u64;
            for u in g.neighbors(v).iter() {
                if let Some(c) = colors[u] {
                    seen |= 1 << c.min(63);
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let cap = k.min(max_used + 2); // allow at most one brand-new color
        'colors: for c in 0..cap {
            for u in g.neighbors(pick).iter() {
                if colors[u] == Some(c) {
                    continue 'colors;
                }
            }
            colors[pick] = Some(c);
            if rec(g, k, colors, assigned + 1, max_used.max(c), budget)? {
                return Ok(true);
            }
            colors[pick] = None;
        }
        Ok(false)
    }
    let ok = rec(g, k, &mut colors, clique.len(), clique.len().saturating_sub(1), budget)?;
    Ok(ok.then(|| colors.into_iter().map(|c| c.expect("all vertices colored")).collect()))
}

/// Greedy saturation-order coloring: a fast upper bound and fallback witness.
fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut seen = 0u64;
            for u in g.neighbors(v).iter() {
                if let Some(c) = colors[u] {
                    seen |= 1 << c.min(63);
                }
            }
            let key = (seen.count_ones() as usize, g.degree(v));
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let c = (0..).find(|&c| {
            g.neighbors(pick).iter().all(|u| colors[u] != Some(c))
        });
        colors[pick] = c;
    }
    colors.into_iter().map(|c| c.expect("greedy colors everything")).collect()
}

fn chromatic_connected(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, ResourceError> {
    if g.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    let clique = max_independent_set(&g.complement(), budget)?;
    let greedy = greedy_coloring(g);
    let ub = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in clique.len()..ub {
        if let Some(colors) = try_color(g, k, &clique, budget)? {
            return Ok(colors);
        }
    }
    Ok(greedy)
}

/// Exact chromatic number χ with a proper coloring witness.  Per
/// component: lower bound from a maximum clique (pre-colored to break
/// symmetry), upper bound from greedy saturation coloring, then
/// saturation-ordered backtracking for each k in between.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<InvariantWitness, ResourceError> {
    let mut colors = vec![0usize; g.vertex_count()];
    let mut value = 0;
    for (comp, sol) in per_component(g, budget, chromatic_connected)? {
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = sol[i];
        }
        value = value.max(sol.iter().max().map_or(0, |&c| c + 1));
    }
    Ok(InvariantWitness {
        value,
        witness: Witness::Coloring { colors },
    })
}

/// Shared branch-and-bound for minimum (independent) dominating sets.
struct DomSearch<'a> {
    g: &'a Graph,
    /// Closed neighborhoods N[v].
    closed: Vec<VertexSet>,
    independent: bool,
    best: Vec<usize>,
}

impl DomSearch<'_> {
    /// Lower bound on dominators still needed for `undom`: a greedy packing
    /// of vertices with pairwise disjoint candidate-dominator sets, against
    /// the coarser ⌈|undom| / max-cover⌉ bound — whichever is larger.
    fn lower_bound(&self, undom: &VertexSet, allowed: &VertexSet) -> usize {
        let mut max_cover = 0;
        for w in allowed.iter() {
            max_cover = max_cover.max(self.closed[w].intersect_count(undom));
        }
        if max_cover == 0 {
            return usize::MAX; // undominatable vertices remain
        }
        let ceil_bound = undom.count().div_ceil(max_cover);
        let mut packing = 0;
        let mut used = VertexSet::new(self.g.vertex_count());
        for u in undom.iter() {
            let mut row = self.closed[u].clone();
            row.intersect_with(allowed);
            if row.is_disjoint(&used) {
                packing += 1;
                used.union_with(&row);
            }
        }
        ceil_bound.max(packing)
    }

    /// Remove columns that cannot help: vertices covering nothing, and —
    /// only for plain domination — vertices whose coverage another
    /// (lower-index-preferred) vertex subsumes.
    fn prune_columns(&self, undom: &VertexSet, allowed: &mut VertexSet) {
        let cols: Vec<usize> = allowed.iter().collect();
        let covers: Vec<VertexSet> = cols
            .iter()
            .map(|&w| {
                let mut c = self.closed[w].clone();
                c.intersect_with(undom);
                c
            })
            .collect();
        for (i, &w) in cols.iter().enumerate() {
            if covers[i].is_empty() {
                allowed.remove(w);
                continue;
            }
            if !self.independent {
                let dominated = cols.iter().enumerate().any(|(j, &x)| {
                    i != j
                        && allowed.contains(x)
                        && covers[i].is_subset(&covers[j])
                        && (covers[i] != covers[j] || x < w)
                });
                if dominated {
                    allowed.remove(w);
                }
            }
        }
    }

    fn recurse(
        &mut self,
        chosen: &mut Vec<usize>,
        mut undom: VertexSet,
        mut allowed: VertexSet,
        budget: &mut Budget,
    ) -> Result<(), ResourceError> {
        budget.tick()?;
        let mut forced = 0usize;
        // Unit propagation: any vertex with a single candidate dominator
        // forces that dominator.
        let branch_vertex = loop {
            if undom.is_empty() {
                if chosen.len() < self.best.len() {
                    self.best = chosen.clone();
                }
                break None;
            }
            self.prune_columns(&undom, &mut allowed);
            // Saturating: an infeasible branch reports usize::MAX below.
            if chosen.len().saturating_add(self.lower_bound(&undom, &allowed)) >= self.best.len() {
                break None;
            }
            let mut pick = usize::MAX;
            let mut pick_row = usize::MAX;
            for u in undom.iter() {
                let row = self.closed[u].intersect_count(&allowed);
                if row == 0 {
                    pick = usize::MAX;
                    pick_row = 0;
                    break;
                }
                if row < pick_row {
                    pick = u;
                    pick_row = row;
                }
            }
            if pick == usize::MAX {
                break None; // some vertex lost all its dominators
            }
            if pick_row > 1 {
                break Some(pick);
            }
            // Forced move.
            let mut row = self.closed[pick].clone();
            row.intersect_with(&allowed);
            let w = row.first().expect("row has exactly one member");
            chosen.push(w);
            forced += 1;
            undom.subtract(&self.closed[w]);
            if self.independent {
                allowed.subtract(&self.closed[w]);
            } else {
                allowed.remove(w);
            }
        };
        if let Some(u) = branch_vertex {
            let mut row = self.closed[u].clone();
            row.intersect_with(&allowed);
            for w in row.iter() {
                chosen.push(w);
                let mut next_undom = undom.clone();
                next_undom.subtract(&self.closed[w]);
                let mut next_allowed = allowed.clone();
                if self.independent {
                    next_allowed.subtract(&self.closed[w]);
                } else {
                    next_allowed.remove(w);
                }
                self.recurse(chosen, next_undom, next_allowed, budget)?;
                chosen.pop();
                // Later branches look for solutions avoiding w entirely.
                allowed.remove(w);
            }
        }
        chosen.truncate(chosen.len() - forced);
        Ok(())
    }
}

/// Greedy (independent) dominating set: always a valid solution, used to
/// seed the search with an upper bound.
fn greedy_dominating(g: &Graph, closed: &[VertexSet], independent: bool) -> Vec<usize> {
    let n = g.vertex_count();
    let mut undom = VertexSet::full(n);
    let mut allowed = VertexSet::full(n);
    let mut out = Vec::new();
    while !undom.is_empty() {
        let w = allowed
            .iter()
            .max_by_key(|&w| (closed[w].intersect_count(&undom), std::cmp::Reverse(w)))
            .expect("every undominated vertex can dominate itself");
        out.push(w);
        undom.subtract(&closed[w]);
        if independent {
            allowed.subtract(&closed[w]);
        } else {
            allowed.remove(w);
        }
    }
    out.sort_unstable();
    out
}

fn min_dominating(g: &Graph, independent: bool, budget: &mut Budget) -> Result<Vec<usize>, ResourceError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).clone();
            s.insert(v);
            s
        })
        .collect();
    let best = greedy_dominating(g, &closed, independent);
    let mut search = DomSearch { g, closed, independent, best };
    let mut chosen = Vec::new();
    search.recurse(&mut chosen, VertexSet::full(n), VertexSet::full(n), budget)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Exact domination number γ with a minimum dominating set witness.
/// Branch and bound per component: branch over the candidate dominators of
/// the hardest-to-dominate vertex, with packing lower bounds, column
/// subsumption, and unit propagation.
pub fn domination_number(g: &Graph, budget: &mut Budget) -> Result<InvariantWitness, ResourceError> {
    let mut vertices = Vec::new();
    for (comp, sol) in per_component(g, budget, |h, b| min_dominating(h, false, b))? {
        vertices.extend(sol.into_iter().map(|i| comp[i]));
    }
    vertices.sort_unstable();
    Ok(InvariantWitness {
        value: vertices.len(),
        witness: Witness::DominatingSet { vertices },
    })
}

/// Exact independent domination number i: the smallest dominating set that
/// is also independent (equivalently, a minimum maximal independent set).
pub fn independent_domination_number(
    g: &Graph,
    budget: &mut Budget,
) -> Result<InvariantWitness, ResourceError> {
    let mut vertices = Vec::new();
    for (comp, sol) in per_component(g, budget, |h, b| min_dominating(h, true, b))? {
        vertices.extend(sol.into_iter().map(|i| comp[i]));
    }
    vertices.sort_unstable();
    Ok(InvariantWitness {
        value: vertices.len(),
        witness: Witness::IndependentDominatingSet { vertices },
    })
}

/// Which of the two explicit three-colorings of the non-bipartite component
/// of the two-token double-move graph of an even cycle to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleColoringVariant {
    /// Color = representative mod 3; stated for n not ≡ 1 (mod 3).
    C,
    /// Representatives 1 and 2 swap colors; stated for n ≡ 1 (mod 3).
    CPrime,
}

/// The explicit coloring plus its validation outcome.
#[derive(Debug, Clone)]
pub struct CycleColoringReport {
    pub n: usize,
    pub variant: CycleColoringVariant,
    /// Color per config of the non-bipartite component (0-based configs).
    pub assignment: Vec<(TokenConfig, u8)>,
    /// Monochromatic edges of the component, as config pairs.
    pub violations: Vec<(TokenConfig, TokenConfig)>,
}

impl CycleColoringReport {
    pub fn is_proper(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The short-arc representative of a 1-based cycle pair `{a, b}` on C_n:
/// the endpoint the short arc starts from when read in cycle order, so the
/// wrap-around pair {1, n} is represented by n ("n is smaller than 1").
/// Antipodal pairs take the larger element.
fn arc_representative(a: usize, b: usize, n: usize) -> usize {
    debug_assert!(a < b);
    match (2 * (b - a)).cmp(&n) {
        std::cmp::Ordering::Less => a,
        _ => b,
    }
}

/// Build the explicit 3-coloring of the non-bipartite component of the
/// two-token double-move graph of C_n (n even, n ≥ 6) and validate it edge
/// by edge.  Properness is checked, never assumed: the report carries any
/// monochromatic edges as data.
pub fn cycle_coloring(n: usize, variant: CycleColoringVariant) -> Result<CycleColoringReport, ParamError> {
    if n % 2 != 0 || n < 6 {
        return Err(ParamError {
            field: "n".into(),
            message: format!("need an even n >= 6, got {n}"),
        });
    }
    match variant {
        CycleColoringVariant::C if n % 3 == 1 => {
            return Err(ParamError {
                field: "variant".into(),
                message: format!("variant c is stated for n not congruent to 1 mod 3; n = {n}"),
            })
        }
        CycleColoringVariant::CPrime if n % 3 != 1 => {
            return Err(ParamError {
                field: "variant".into(),
                message: format!("variant c_prime is stated for n congruent to 1 mod 3; n = {n}"),
            })
        }
        _ => {}
    }
    let t = build_token_graph(&cycle(n), 2, 2).expect("2 <= n vertices");
    let comps = t.graph().components();
    let nonbip = comps
        .iter()
        .find(|comp| t.graph().induced(comp).bipartition().is_none())
        .expect("even cycles of length >= 6 have a non-bipartite component");

    let color_of = |vertex: usize| -> u8 {
        let config = t.config(vertex);
        let (a, b) = (config.members()[0] + 1, config.members()[1] + 1); // 1-based
        let rep = arc_representative(a, b, n);
        let col = match variant {
            CycleColoringVariant::C => rep % 3,
            CycleColoringVariant::CPrime => match rep {
                1 => 2,
                2 => 1,
                r => r % 3,
            },
        };
        col as u8
    };

    let assignment: Vec<(TokenConfig, u8)> =
        nonbip.iter().map(|&v| (t.config(v), color_of(v))).collect();
    let mut violations = Vec::new();
    for (i, &u) in nonbip.iter().enumerate() {
        for &v in &nonbip[i + 1..] {
            if t.graph().has_edge(u, v) && color_of(u) == color_of(v) {
                violations.push((t.config(u), t.config(v)));
            }
        }
    }
    Ok(CycleColoringReport {
        n,
        variant,
        assignment,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn bipartiteness_certificates_validate() {
        let even = bipartiteness(&family::cycle(6));
        assert!(even.is_bipartite());
        even.validate(&family::cycle(6)).unwrap();

        let odd = bipartiteness(&family::cycle(5));
        assert!(!odd.is_bipartite());
        odd.validate(&family::cycle(5)).unwrap();

        // An odd cycle reached through a pendant path: the certificate must
        // trim the even approach path off the closed walk.
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (1, 2)];
        edges.extend([(2, 3), (3, 4), (4, 2)]);
        let g = Graph::from_edge_list(5, edges).unwrap();
        let cert = bipartiteness(&g);
        assert!(!cert.is_bipartite());
        cert.validate(&g).unwrap();

        bipartiteness(&Graph::empty(4)).validate(&Graph::empty(4)).unwrap();
    }

    #[test]
    fn small_graph_invariants() {
        let mut b = unlimited();
        let c5 = family::cycle(5);
        let alpha = independence_number(&c5, &mut b).unwrap();
        assert_eq!(alpha.value, 2);
        alpha.validate(&c5).unwrap();

        let k5 = family::complete(5);
        let omega = clique_number(&k5, &mut b).unwrap();
        assert_eq!(omega.value, 5);
        omega.validate(&k5).unwrap();

        let chi = chromatic_number(&c5, &mut b).unwrap();
        assert_eq!(chi.value, 3);
        chi.validate(&c5).unwrap();

        let gamma = domination_number(&c5, &mut b).unwrap();
        assert_eq!(gamma.value, 2);
        gamma.validate(&c5).unwrap();

        assert_eq!(domination_number(&k5, &mut b).unwrap().value, 1);
        assert_eq!(chromatic_number(&Graph::empty(4), &mut b).unwrap().value, 1);
        assert_eq!(chromatic_number(&Graph::empty(0), &mut b).unwrap().value, 0);
    }

    #[test]
    fn petersen_invariants() {
        let mut b = unlimited();
        let g = family::kneser(5, 2);
        assert_eq!(independence_number(&g, &mut b).unwrap().value, 4);
        assert_eq!(clique_number(&g, &mut b).unwrap().value, 2);
        assert_eq!(chromatic_number(&g, &mut b).unwrap().value, 3);
        assert_eq!(domination_number(&g, &mut b).unwrap().value, 3);
        assert_eq!(independent_domination_number(&g, &mut b).unwrap().value, 3);
    }

    #[test]
    fn domination_is_component_additive() {
        let mut b = unlimited();
        let g = family::cycle(4).disjoint_union(&family::cycle(5));
        assert_eq!(domination_number(&g, &mut b).unwrap().value, 2 + 2);
        let idom = independent_domination_number(&g, &mut b).unwrap();
        assert_eq!(idom.value, 4);
        idom.validate(&g).unwrap();
    }

    #[test]
    fn star_domination_needs_center_or_leaves() {
        let mut b = unlimited();
        let g = family::star(6);
        assert_eq!(domination_number(&g, &mut b).unwrap().value, 1);
        assert_eq!(independent_domination_number(&g, &mut b).unwrap().value, 1);
        // α of a star is all leaves.
        assert_eq!(independence_number(&g, &mut b).unwrap().value, 6);
    }

    #[test]
    fn token_graph_invariant_spot_checks() {
        let mut b = unlimited();
        let f = build_token_graph(&family::cycle(5), 2, 2).unwrap();
        let chi = chromatic_number(f.graph(), &mut b).unwrap();
        assert_eq!(chi.value, 3);
        chi.validate(f.graph()).unwrap();
        assert_eq!(domination_number(f.graph(), &mut b).unwrap().value, 3);

        let f4 = build_token_graph(&family::cycle(4), 2, 2).unwrap();
        assert_eq!(clique_number(f4.graph(), &mut b).unwrap().value, 4);
        assert_eq!(chromatic_number(f4.graph(), &mut b).unwrap().value, 4);

        let f7 = build_token_graph(&family::cycle(7), 2, 2).unwrap();
        assert_eq!(independence_number(f7.graph(), &mut b).unwrap().value, 9);
        assert_eq!(domination_number(f7.graph(), &mut b).unwrap().value, 6);

        let f8 = build_token_graph(&family::cycle(8), 2, 2).unwrap();
        assert_eq!(independence_number(f8.graph(), &mut b).unwrap().value, 12);
    }

    #[test]
    fn budgets_fail_loudly() {
        let g = family::kneser(5, 2);
        let mut tiny = Budget::new(2, None);
        assert!(matches!(
            independence_number(&g, &mut tiny),
            Err(ResourceError::NodeBudget { .. })
        ));
    }

    #[test]
    fn witness_validation_rejects_forgeries() {
        let g = family::cycle(4);
        let bogus = InvariantWitness {
            value: 2,
            witness: Witness::IndependentSet { vertices: vec![0, 1] },
        };
        assert!(bogus.validate(&g).is_err());
        let wrong_count = InvariantWitness {
            value: 3,
            witness: Witness::IndependentSet { vertices: vec![0, 2] },
        };
        assert!(wrong_count.validate(&g).is_err());
    }

    #[test]
    fn explicit_cycle_colorings() {
        // n = 6 and n = 8 use variant C and come out proper.
        for n in [6, 8] {
            let rep = cycle_coloring(n, CycleColoringVariant::C).unwrap();
            assert_eq!(rep.assignment.len(), (n / 2) * (n / 2));
            assert!(rep.is_proper(), "n = {n} violations: {:?}", rep.violations);
        }
        // n = 10 is 1 mod 3: variant C refuses, C' applies and is proper.
        assert!(cycle_coloring(10, CycleColoringVariant::C).is_err());
        let rep = cycle_coloring(10, CycleColoringVariant::CPrime).unwrap();
        assert!(rep.is_proper(), "violations: {:?}", rep.violations);
        // n = 12: antipodal chords join configs whose representatives differ
        // by 6 ≡ 0 (mod 3), so the stated coloring is genuinely improper;
        // the report surfaces that rather than failing.
        let rep = cycle_coloring(12, CycleColoringVariant::C).unwrap();
        assert!(!rep.is_proper());
        // Preconditions.
        assert!(cycle_coloring(7, CycleColoringVariant::C).is_err());
        assert!(cycle_coloring(4, CycleColoringVariant::C).is_err());
        assert!(cycle_coloring(12, CycleColoringVariant::CPrime).is_err());
    }

    #[test]
    fn coloring_uses_exactly_three_colors_when_proper() {
        let rep = cycle_coloring(6, CycleColoringVariant::C).unwrap();
        let mut used: Vec<u8> = rep.assignment.iter().map(|&(_, c)| c).collect();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used, vec![0, 1, 2]);
    }
}
