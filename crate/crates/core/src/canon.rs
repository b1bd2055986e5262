//! Canonical labeling, isomorphism testing, and automorphism groups.
//!
//! The canonical form comes from individualization-refinement: color
//! vertices by degree, refine colors by sorted neighbor-color multisets
//! until stable, and where the partition is still not discrete, branch on
//! each vertex of the first non-singleton class.  Every discrete leaf
//! yields a relabeled adjacency string; the lexicographically smallest one
//! is canonical.  Leaves that tie with an earlier leaf reveal
//! automorphisms, which both prune the search (orbit pruning among sibling
//! candidates) and generate the automorphism group, whose exact order an
//! incremental stabilizer chain computes in big integers.

use crate::budget::{Budget, ResourceError};
use crate::codec::graph6_encode;
use crate::family::ParamError;
use crate::graph::Graph;
use crate::token::TokenGraph;
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// A bijection on `[0, n)`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Validate that `image` is a bijection on `[0, image.len())`.
    pub fn new(image: Vec<usize>) -> Result<Self, ParamError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(ParamError {
                    field: "image".into(),
                    message: format!("image array {image:?} is not a bijection"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation(image))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Does this permutation preserve the edges of `g` exactly?
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.vertex_count()
            && g.edges()
                .all(|(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}

/// Generators of a permutation group together with its exact order.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

/// A canonical vertex ordering and the canonical adjacency bytes it yields.
/// Two graphs are isomorphic exactly when their canonical bytes agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    ordering: Permutation,
    bytes: String,
}

impl CanonicalForm {
    /// The map from original vertices to canonical positions.
    pub fn ordering(&self) -> &Permutation {
        &self.ordering
    }

    /// graph6 of the canonically relabeled graph; equal across isomorphic
    /// inputs.
    pub fn bytes(&self) -> &str {
        &self.bytes
    }
}

/// Iterated color refinement: repeatedly recolor every vertex by the pair
/// (its color, sorted multiset of neighbor colors), renumbering colors by
/// signature rank, until the class count stops growing.  The result is
/// relabeling-invariant because signatures are.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.vertex_count();
    let mut class_count = colors.iter().collect::<std::collections::HashSet<_>>().len();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == class_count {
            return;
        }
        class_count = distinct.len();
        for v in 0..n {
            colors[v] = distinct.binary_search(&&sigs[v]).expect("own signature present") as u32;
        }
    }
}

/// Initial coloring by degree rank.
fn degree_colors(g: &Graph) -> Vec<u32> {
    let mut degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut distinct = degrees.clone();
    distinct.sort_unstable();
    distinct.dedup();
    degrees
        .iter_mut()
        .map(|d| distinct.binary_search(d).expect("own degree present") as u32)
        .collect()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    first: Option<(String, Vec<usize>)>,
    best: Option<(String, Vec<usize>)>,
    autos: Vec<Permutation>,
}

impl CanonSearch<'_> {
    fn explore(
        &mut self,
        mut colors: Vec<u32>,
        prefix: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<(), ResourceError> {
        budget.tick()?;
        refine(self.g, &mut colors);
        let n = self.g.vertex_count();

        // Discrete partition: the colors are the canonical positions.
        if colors.iter().collect::<std::collections::HashSet<_>>().len() == n {
            let ordering: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let bytes = graph6_encode(&self.g.relabel(&ordering));
            self.record_leaf(bytes, ordering);
            return Ok(());
        }

        // Target: the lowest color class with more than one vertex.
        let target = (0..)
            .map(|c| {
                (0..n)
                    .filter(|&v| colors[v] == c)
                    .collect::<Vec<usize>>()
            })
            .find(|cell| cell.len() > 1)
            .expect("a non-singleton class exists");
        let fresh = colors.iter().max().copied().unwrap_or(0) + 1;

        let mut tried: Vec<usize> = Vec::new();
        for &w in &target {
            if self.in_tried_orbit(w, &tried, prefix) {
                continue;
            }
            tried.push(w);
            let mut child = colors.clone();
            child[w] = fresh;
            prefix.push(w);
            self.explore(child, prefix, budget)?;
            prefix.pop();
        }
        Ok(())
    }

    /// Orbit pruning: skip `w` if some already-discovered automorphism that
    /// fixes the individualized prefix pointwise maps an already-tried
    /// sibling into `w`'s orbit.
    fn in_tried_orbit(&self, w: usize, tried: &[usize], prefix: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let fixing: Vec<&Permutation> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a.apply(p) == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut orbit = vec![w];
        let mut seen = vec![false; self.g.vertex_count()];
        seen[w] = true;
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            i += 1;
            for a in &fixing {
                for q in [a.apply(p), a.inverse().apply(p)] {
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
        }
        tried.iter().any(|&t| seen[t])
    }

    fn record_leaf(&mut self, bytes: String, ordering: Vec<usize>) {
        for reference in [&self.first, &self.best] {
            if let Some((ref_bytes, ref_ordering)) = reference {
                if *ref_bytes == bytes {
                    // Equal leaf strings mean the orderings differ by an
                    // automorphism: apply one, undo the other.
                    let sigma = Permutation(ref_ordering.clone())
                        .inverse()
                        .compose(&Permutation(ordering.clone()));
                    if !sigma.is_identity()
                        && !self.autos.contains(&sigma)
                    {
                        assert!(
                            sigma.is_automorphism_of(self.g),
                            "canonical search produced an invalid automorphism"
                        );
                        self.autos.push(sigma);
                    }
                }
            }
        }
        if self.first.is_none() {
            self.first = Some((bytes.clone(), ordering.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            self.best = Some((bytes, ordering));
        }
    }
}

fn run_search<'g>(g: &'g Graph, budget: &mut Budget) -> Result<CanonSearch<'g>, ResourceError> {
    let mut search = CanonSearch {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.explore(degree_colors(g), &mut Vec::new(), budget)?;
    Ok(search)
}

/// Canonical form of `g`: deterministic and invariant under any relabeling
/// of the input.
pub fn canonical_form(g: &Graph, budget: &mut Budget) -> Result<CanonicalForm, ResourceError> {
    let search = run_search(g, budget)?;
    let (bytes, ordering) = search.best.expect("every search reaches a leaf");
    Ok(CanonicalForm {
        ordering: Permutation(ordering),
        bytes,
    })
}

/// Isomorphism test: `Some(mapping)` sending vertices of `g` onto vertices
/// of `h` edge-exactly, or `None`.  The mapping is composed from the two
/// canonical orderings and re-validated edge by edge.
pub fn is_isomorphic(
    g: &Graph,
    h: &Graph,
    budget: &mut Budget,
) -> Result<Option<Permutation>, ResourceError> {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let cg = canonical_form(g, budget)?;
    let ch = canonical_form(h, budget)?;
    if cg.bytes != ch.bytes {
        return Ok(None);
    }
    let mapping = ch.ordering.inverse().compose(&cg.ordering);
    for (u, v) in g.edges() {
        assert!(
            h.has_edge(mapping.apply(u), mapping.apply(v)),
            "canonical orderings composed to a non-isomorphism"
        );
    }
    Ok(Some(mapping))
}

/// The automorphism group of `g`: generators discovered during the
/// canonical search (each validated), order computed exactly by a
/// stabilizer chain.
pub fn automorphism_group(g: &Graph, budget: &mut Budget) -> Result<PermGroup, ResourceError> {
    let search = run_search(g, budget)?;
    let order = group_order(g.vertex_count(), &search.autos);
    Ok(PermGroup {
        generators: search.autos,
        order,
    })
}

/// One level of a stabilizer chain: generators fixing all earlier base
/// points, with a transversal of the orbit of this level's base point.
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// orbit point -> group element mapping `base` to that point
    transversal: BTreeMap<usize, Permutation>,
}

fn rebuild_orbit(level: &mut Level, n: usize) {
    let mut tv = BTreeMap::new();
    tv.insert(level.base, Permutation::identity(n));
    let mut queue = vec![level.base];
    while let Some(p) = queue.pop() {
        for s in &level.gens {
            let q = s.apply(p);
            if !tv.contains_key(&q) {
                let rep = s.compose(&tv[&p]);
                tv.insert(q, rep);
                queue.push(q);
            }
        }
    }
    level.transversal = tv;
}

/// Divide `g` by transversal representatives through levels `start..`.
/// An identity residue certifies membership in the level-`start` group.
fn sift(chain: &[Level], start: usize, g: Permutation) -> Permutation {
    let mut g = g;
    for level in &chain[start..] {
        if g.is_identity() {
            return g;
        }
        let img = g.apply(level.base);
        match level.transversal.get(&img) {
            Some(rep) => g = rep.inverse().compose(&g),
            None => return g, // escapes the chain here
        }
    }
    g
}

/// Add `g` to the generating set of level `j` and restore the strong
/// generation property: the level's orbit is rebuilt, and every Schreier
/// generator must sift to the identity through the deeper levels — those
/// that do not are inserted one level down, recursively.
///
/// Level `j`'s generator list generates the whole `j`-th stabilizer group
/// (everything deeper is a product of them), so the orbit computed from it
/// alone is the true orbit.
fn insert_generator(chain: &mut Vec<Level>, j: usize, g: Permutation, n: usize) {
    if j == chain.len() {
        let base = (0..n).find(|&v| g.apply(v) != v).expect("non-identity moves a point");
        chain.push(Level {
            base,
            gens: Vec::new(),
            transversal: BTreeMap::new(),
        });
    }
    chain[j].gens.push(g);
    rebuild_orbit(&mut chain[j], n);
    let points: Vec<usize> = chain[j].transversal.keys().copied().collect();
    let gens = chain[j].gens.clone();
    for p in points {
        for s in &gens {
            let rep_p = chain[j].transversal[&p].clone();
            let q = s.apply(p);
            let rep_q = chain[j].transversal[&q].clone();
            let schreier = rep_q.inverse().compose(s).compose(&rep_p);
            let residue = sift(chain, j + 1, schreier);
            if !residue.is_identity() {
                insert_generator(chain, j + 1, residue, n);
            }
        }
    }
}

/// Exact order of the group generated by `gens`, acting on `[0, n)`,
/// as the product of orbit sizes along a stabilizer chain.
pub fn group_order(n: usize, gens: &[Permutation]) -> BigUint {
    let mut chain: Vec<Level> = Vec::new();
    for g in gens {
        if !sift(&chain, 0, g.clone()).is_identity() {
            insert_generator(&mut chain, 0, g.clone(), n);
        }
    }
    chain
        .iter()
        .map(|level| BigUint::from(level.transversal.len()))
        .product()
}

/// Lift an automorphism `f` of the base graph to the token graph: config
/// `A` maps to `f(A)`.  Errors if `f` is not an automorphism of the base;
/// the lifted map is validated to be an automorphism of the token graph.
pub fn induced_token_automorphism(f: &Permutation, t: &TokenGraph) -> Result<Permutation, ParamError> {
    if f.len() != t.base().vertex_count() {
        return Err(ParamError {
            field: "f".into(),
            message: format!(
                "permutation on {} points, base graph has {} vertices",
                f.len(),
                t.base().vertex_count()
            ),
        });
    }
    if !f.is_automorphism_of(t.base()) {
        return Err(ParamError {
            field: "f".into(),
            message: "permutation is not an automorphism of the base graph".into(),
        });
    }
    let image: Vec<usize> = (0..t.graph().vertex_count())
        .map(|i| {
            let mapped: Vec<usize> = t.config(i).members().iter().map(|&v| f.apply(v)).collect();
            let config = crate::token::TokenConfig::from_unsorted(mapped)
                .expect("an automorphism maps a config to a config");
            t.index_of(&config)
        })
        .collect();
    let phi = Permutation::new(image).expect("induced map of a bijection is a bijection");
    if !phi.is_automorphism_of(t.graph()) {
        return Err(ParamError {
            field: "f".into(),
            message: "induced map is not an automorphism of the token graph".into(),
        });
    }
    Ok(phi)
}
