use super::Graph;

/// Backtracking search for a vertex map `phi` with `g.has_edge(u, v) == h.has_edge(phi[u], phi[v])`.
///
/// Exponential in the worst case; meant for the small graphs in this crate.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.degree() != h.degree() {
        return None;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if u == g.n() {
        return true;
    }
    for candidate in 0..h.n() {
        if used[candidate] {
            continue;
        }
        let consistent = (0..u).all(|w| g.has_edge(u, w) == h.has_edge(candidate, map[w]));
        if !consistent {
            continue;
        }
        map[u] = candidate;
        used[candidate] = true;
        if extend(g, h, u + 1, map, used) {
            return true;
        }
        used[candidate] = false;
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{balanced_multipartite, cayley_symmetric, complete_graph, cycle_graph};

    #[test]
    fn finds_valid_maps() {
        let c4 = cycle_graph(4).unwrap();
        let k22 = balanced_multipartite(2, 2).unwrap();
        let phi = find_isomorphism(&c4, &k22).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(c4.has_edge(u, v), k22.has_edge(phi[u], phi[v]));
            }
        }
        assert!(find_isomorphism(&cayley_symmetric(3).unwrap(), &balanced_multipartite(2, 3).unwrap()).is_some());
    }

    #[test]
    fn rejects_non_isomorphic() {
        // triangular prism: 6 vertices, 3-regular, but not bipartite like K_{3,3}
        let mut adj = vec![false; 36];
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)] {
            adj[u * 6 + v] = true;
            adj[v * 6 + u] = true;
        }
        let prism = Graph::from_adjacency(6, adj, crate::graphs::Family::Custom).unwrap();
        assert!(find_isomorphism(&prism, &balanced_multipartite(2, 3).unwrap()).is_none());
        assert!(find_isomorphism(&cycle_graph(5).unwrap(), &complete_graph(5).unwrap()).is_none());
    }
}
