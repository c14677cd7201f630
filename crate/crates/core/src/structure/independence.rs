use crate::graph::{bits, Graph};

/// Greedy clique cover size of `cand`: an upper bound on the independence
/// number of the induced subgraph.
fn clique_cover_bound(adj: &[u64], cand: u64) -> usize {
    let mut rem = cand;
    let mut count = 0;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut ext = rem & adj[v];
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            clique |= 1 << u;
            ext &= adj[u];
        }
        rem &= !clique;
        count += 1;
    }
    count
}

fn branch(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, cand) <= *best {
        return;
    }
    let v = bits(cand).max_by_key(|&v| (adj[v] & cand).count_ones()).expect("cand is nonempty");
    branch(adj, cand & !(1 << v) & !adj[v], size + 1, best);
    branch(adj, cand & !(1 << v), size, best);
}

/// Size of a maximum independent set, by branch and bound.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    branch(g.adjacency_rows(), g.vertex_mask(), 0, &mut best);
    best
}

/// `ν(G) = 2` iff the complement has an edge and no triangle.
pub fn nu_equals_two(g: &Graph) -> bool {
    let c = g.complement();
    let edges = c.edges();
    !edges.is_empty() && edges.iter().all(|&(u, v)| c.neighbors(u) & c.neighbors(v) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::connected_graphs;
    use crate::families::{complete_tripartite, cycle, path};
    use crate::testutil::random_connected;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Largest clique of the complement by checking every vertex subset.
    fn brute_complement_clique(g: &Graph) -> usize {
        let n = g.order();
        let c = g.complement();
        (0u64..1 << n)
            .filter(|&s| bits(s).all(|u| bits(s).all(|v| u == v || c.has_edge(u, v))))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(independence_number(&cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&path(5).unwrap()), 3);
        assert_eq!(independence_number(&complete_tripartite(2, 4, 3).unwrap()), 4);
        assert!(nu_equals_two(&cycle(5).unwrap()));
        assert!(nu_equals_two(&cycle(4).unwrap()));
        assert!(!nu_equals_two(&path(5).unwrap()));
    }

    #[test]
    fn agrees_with_brute_force_clique() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.0..1.0);
            let g = random_connected(&mut rng, n, p);
            assert_eq!(independence_number(&g), brute_complement_clique(&g), "{g:?}");
        }
    }

    #[test]
    fn fast_path_matches_exhaustively() {
        for n in 1..=8 {
            for g in connected_graphs(n).unwrap() {
                assert_eq!(nu_equals_two(&g), independence_number(&g) == 2, "{g:?}");
            }
        }
    }
}
