//! Named graph families: paths, cycles, complete (bipartite) graphs, stars,
//! the diamond, Kneser graphs, and odd cycles decorated with glued bicliques.
//!
//! Direct constructors assert their preconditions (programmer error to
//! violate them); [`generate`] validates a parsed [`FamilySpec`] and is the
//! entry point for user-supplied parameters.

use crate::graph::Graph;
use itertools::Itertools;

/// A family parameter failed validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid {field}: {message}")]
pub struct ParamError {
    pub field: String,
    pub message: String,
}

impl ParamError {
    fn new(field: &str, message: impl Into<String>) -> Self {
        ParamError {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

/// The graph families the generator knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Diamond,
    Kneser,
    CycleWithBicliques,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Diamond,
        Family::Kneser,
        Family::CycleWithBicliques,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Diamond => "diamond",
            Family::Kneser => "kneser",
            Family::CycleWithBicliques => "cycle_with_bicliques",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                ParamError::new(
                    "family",
                    format!(
                        "unknown family {s:?}; expected one of {}",
                        Family::ALL.map(Family::name).join(", ")
                    ),
                )
            })
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with its integer parameters, as parsed from user input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

/// Validate `spec` and build its graph.
///
/// Vertex numbering is fixed per family so downstream labels are stable:
/// paths and cycles run 0..n-1 in order; `complete_bipartite m n` puts the
/// m-side first; `star n` is K_{1,n} with the center at 0; `kneser n k`
/// lists the k-subsets of {0..n-1} in lexicographic order;
/// `cycle_with_bicliques c m_1 .. m_j` places the cycle first, then for each
/// block i the m_i shared neighbours followed by the fresh apex.
pub fn generate(spec: &FamilySpec) -> Result<Graph, ParamError> {
    let p = &spec.params;
    let arity_err = |want: &str| {
        Err(ParamError::new(
            "params",
            format!("{} takes {want}, got {}", spec.family, p.len()),
        ))
    };
    match spec.family {
        Family::Path => match p[..] {
            [n] if n >= 1 => Ok(path(n)),
            [_] => Err(ParamError::new("n", "path needs n >= 1")),
            _ => arity_err("one parameter (n)"),
        },
        Family::Cycle => match p[..] {
            [n] if n >= 3 => Ok(cycle(n)),
            [_] => Err(ParamError::new("n", "cycle needs n >= 3")),
            _ => arity_err("one parameter (n)"),
        },
        Family::Complete => match p[..] {
            [n] if n >= 1 => Ok(complete(n)),
            [_] => Err(ParamError::new("n", "complete needs n >= 1")),
            _ => arity_err("one parameter (n)"),
        },
        Family::CompleteBipartite => match p[..] {
            [m, n] if m >= 1 && n >= 1 => Ok(complete_bipartite(m, n)),
            [_, _] => Err(ParamError::new("m,n", "complete_bipartite needs m, n >= 1")),
            _ => arity_err("two parameters (m, n)"),
        },
        Family::Star => match p[..] {
            [n] if n >= 1 => Ok(star(n)),
            [_] => Err(ParamError::new("n", "star needs n >= 1 leaves")),
            _ => arity_err("one parameter (n)"),
        },
        Family::Diamond => match p[..] {
            [] => Ok(diamond()),
            _ => arity_err("no parameters"),
        },
        Family::Kneser => match p[..] {
            [n, k] if k >= 1 && n >= 2 * k => Ok(kneser(n, k)),
            [_, _] => Err(ParamError::new("n,k", "kneser needs n >= 2k >= 2")),
            _ => arity_err("two parameters (n, k)"),
        },
        Family::CycleWithBicliques => match p[..] {
            [c, ref blocks @ ..] if c >= 3 && blocks.len() <= c => {
                if let Some(bad) = blocks.iter().position(|&m| m == 0) {
                    return Err(ParamError::new(
                        &format!("m_{}", bad + 1),
                        "attachment sizes must be >= 1",
                    ));
                }
                Ok(cycle_with_bicliques(c, blocks))
            }
            [c, ..] if c < 3 => Err(ParamError::new("c", "cycle length must be >= 3")),
            [c, ref blocks @ ..] => Err(ParamError::new(
                "params",
                format!("{} attachment blocks but the cycle has only {c} vertices", blocks.len()),
            )),
            _ => arity_err("a cycle length plus attachment sizes (c, m_1, ..)"),
        },
    }
}

/// Path P_n on vertices 0..n-1 in order.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::from_edge_list(n, (0..n - 1).map(|i| (i, i + 1))).expect("path edges are valid")
}

/// Cycle C_n on vertices 0..n-1 in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::empty(n).complement()
}

/// Complete bipartite K_{m,n}; the m-side is vertices 0..m-1.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    assert!(m >= 1 && n >= 1);
    Graph::from_edge_list(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
        .expect("biclique edges are valid")
}

/// Star K_{1,n}: center 0, leaves 1..=n.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::from_edge_list(n + 1, (1..=n).map(|v| (0, v))).expect("star edges are valid")
}

/// The diamond K_4 - e: vertices {0,1} adjacent to everything, {2,3} not
/// adjacent to each other.
pub fn diamond() -> Graph {
    Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        .expect("diamond edges are valid")
}

/// Kneser graph KG_{n,k}: vertices are the k-subsets of {0..n-1} in
/// lexicographic order, adjacent exactly when disjoint.
pub fn kneser(n: usize, k: usize) -> Graph {
    assert!(k >= 1 && n >= 2 * k);
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let mut g = Graph::empty(subsets.len());
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a.iter().all(|x| !b.contains(x)) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// A cycle C_c with a K_{2,m_i} glued onto cycle vertex i for each
/// attachment size in `blocks`: block i contributes m_i fresh vertices
/// adjacent to both cycle vertex i and one fresh apex.
///
/// Numbering: cycle 0..c-1, then per block the m_i shared neighbours
/// followed by the apex.
pub fn cycle_with_bicliques(c: usize, blocks: &[usize]) -> Graph {
    assert!(c >= 3 && blocks.len() <= c && blocks.iter().all(|&m| m >= 1));
    let n = c + blocks.iter().map(|&m| m + 1).sum::<usize>();
    let mut g = Graph::empty(n);
    for i in 0..c {
        g.add_edge(i, (i + 1) % c);
    }
    let mut next = c;
    for (i, &m) in blocks.iter().enumerate() {
        let apex = next + m;
        for x in next..next + m {
            g.add_edge(i, x);
            g.add_edge(apex, x);
        }
        next = apex + 1;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kneser_petersen() {
        let g = kneser(5, 2);
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn star_has_one_leaf_star() {
        let g = star(4);
        assert_eq!(g.leaf_stars(), vec![(0, vec![1, 2, 3, 4])]);
    }

    #[test]
    fn diamond_degrees() {
        assert_eq!(diamond().degree_sequence(), vec![2, 2, 3, 3]);
    }

    #[test]
    fn complete_bipartite_sides() {
        let g = complete_bipartite(2, 3);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
        assert!(g.has_edge(0, 2) && g.has_edge(1, 4));
    }

    #[test]
    fn decorated_cycle_shape() {
        // C_5 with one K_{2,2} glued at vertex 0.
        let g = cycle_with_bicliques(5, &[2]);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(0), 4); // two cycle edges + two shared neighbours
        assert_eq!(g.degree(7), 2); // apex sees only the shared pair
        assert!(g.is_connected());
        // These graphs have no leaves at all: the glued side vertices have
        // degree two and the apex degree m_i.
        assert_eq!(g.leaf_stars(), vec![]);
    }

    #[test]
    fn generate_validates_parameters() {
        let ok = generate(&FamilySpec { family: Family::Kneser, params: vec![5, 2] });
        assert_eq!(ok.unwrap().vertex_count(), 10);
        assert!(generate(&FamilySpec { family: Family::Kneser, params: vec![3, 2] }).is_err());
        assert!(generate(&FamilySpec { family: Family::Cycle, params: vec![2] }).is_err());
        assert!(generate(&FamilySpec { family: Family::Diamond, params: vec![1] }).is_err());
        assert!(generate(&FamilySpec {
            family: Family::CycleWithBicliques,
            params: vec![3, 1, 1, 1, 1],
        })
        .is_err());
        assert!("path".parse::<Family>().is_ok());
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn generate_is_deterministic() {
        let spec = FamilySpec { family: Family::CycleWithBicliques, params: vec![5, 2, 3] };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
    }
}
