//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
//!
//! The instances here are tiny — one side per token that has to move — so
//! the simple O(V·E) augmenting-path scheme is the right tool.

/// Size of a maximum matching in the bipartite graph whose left vertex `i`
/// is adjacent to the right vertices listed in `adj[i]` (indices `< right`).
pub fn max_bipartite_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut right_match: Vec<Option<usize>> = vec![None; right];
    let mut matched = 0;
    for u in 0..adj.len() {
        let mut visited = vec![false; right];
        if augment(u, adj, &mut right_match, &mut visited) {
            matched += 1;
        }
    }
    matched
}

/// True when every left vertex can be matched and the sides have equal size.
pub fn has_perfect_matching(adj: &[Vec<usize>], right: usize) -> bool {
    adj.len() == right && max_bipartite_matching(adj, right) == adj.len()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    right_match: &mut Vec<Option<usize>>,
    visited: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match right_match[v] {
            None => true,
            Some(w) => augment(w, adj, right_match, visited),
        };
        if free {
            right_match[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_found_through_augmentation() {
        // Left 0 and 1 both prefer right 0; augmenting must reroute.
        let adj = vec![vec![0], vec![0, 1]];
        assert_eq!(max_bipartite_matching(&adj, 2), 2);
        assert!(has_perfect_matching(&adj, 2));
    }

    #[test]
    fn deficient_side_caps_the_matching() {
        let adj = vec![vec![0], vec![0], vec![0, 1]];
        assert_eq!(max_bipartite_matching(&adj, 2), 2);
        assert!(!has_perfect_matching(&adj, 2));
    }

    #[test]
    fn empty_instances() {
        assert_eq!(max_bipartite_matching(&[], 0), 0);
        assert!(has_perfect_matching(&[], 0));
        assert!(!has_perfect_matching(&[vec![]], 1));
    }
}
