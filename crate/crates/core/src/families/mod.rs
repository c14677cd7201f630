//! Named graph families, their recognizers, the induced-pattern catalog and
//! the catalog of exceptional graphs.

pub mod catalog;
pub mod patterns;

pub use catalog::{
    bootstrap_exceptional_catalog, exceptional_clause, Clause, ClauseInputs, ExceptionalCatalog, ExceptionalEntry,
};
pub use patterns::{pattern, pattern_catalog, Pattern, PatternId};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: String) -> Error {
    Error::InvalidFamily(msg)
}

/// Complete multipartite graph with contiguous parts of the given sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid(format!("part sizes must be positive, got {parts:?}")));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut start = 0;
    let mut bounds = Vec::with_capacity(parts.len());
    for &s in parts {
        bounds.push(start..start + s);
        start += s;
    }
    for (i, a) in bounds.iter().enumerate() {
        for b in &bounds[i + 1..] {
            for u in a.clone() {
                for v in b.clone() {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("K_n needs n >= 1".into()));
    }
    complete_multipartite(&vec![1; n])
}

/// `K_n` minus the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("K_n - e needs n >= 2, got {n}")));
    }
    let mut g = complete(n)?;
    g.remove_edge(0, 1)?;
    Ok(g)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    complete_multipartite(&[p, q])
}

pub fn complete_tripartite(a: usize, b: usize, c: usize) -> Result<Graph> {
    complete_multipartite(&[a, b, c])
}

/// `K_a ∨ (n-a)K_1`: a clique on `0..a` joined to an independent set.
pub fn complete_split(a: usize, n: usize) -> Result<Graph> {
    if a == 0 || a > n {
        return Err(invalid(format!("complete split needs 1 <= a <= n, got a = {a}, n = {n}")));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..a {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{n-1}` with a pendant vertex `n - 1` hanging from vertex 0.
pub fn clique_with_pendant(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("clique with pendant needs n >= 3, got {n}")));
    }
    complete(n - 1)?.with_vertex(1)
}

/// `K_{a+b}` on `0..a+b` plus two nonadjacent vertices: `a+b` sees the
/// first `a` clique vertices, `a+b+1` the remaining `b`.
pub fn clique_with_two_attachments(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid(format!("attachment sizes must be positive, got {a}, {b}")));
    }
    let first = (1u64 << a) - 1;
    let second = ((1u64 << b) - 1) << a;
    complete(a + b)?.with_vertex(first)?.with_vertex(second)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("C_n needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("P_n needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Part sizes (ascending) if `g` is complete multipartite, i.e. every
/// component of the complement is a clique.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let c = g.complement();
    let mut sizes = Vec::new();
    for comp in c.components() {
        let k = comp.count_ones() as usize;
        let edges: usize = crate::graph::bits(comp).map(|v| c.degree(v)).sum::<usize>() / 2;
        if edges != k * (k - 1) / 2 {
            return None;
        }
        sizes.push(k);
    }
    sizes.sort_unstable();
    Some(sizes)
}

pub fn as_complete_tripartite(g: &Graph) -> Option<(usize, usize, usize)> {
    match multipartite_parts(g)?.as_slice() {
        &[a, b, c] => Some((a, b, c)),
        _ => None,
    }
}

/// The missing edge if `g` is `K_n - e`.
pub fn as_complete_minus_edge(g: &Graph) -> Option<(usize, usize)> {
    match g.complement().edges().as_slice() {
        &[e] => Some(e),
        _ => None,
    }
}

pub fn is_complete_bipartite(g: &Graph) -> bool {
    multipartite_parts(g).is_some_and(|p| p.len() == 2)
}

/// `K_a ∨ (n-a)K_1` with `a >= 2` (this includes `K_n`).
pub fn is_complete_split(g: &Graph) -> bool {
    let n = g.order();
    let hub: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if hub.len() < 2 {
        return false;
    }
    let hub_mask = hub.iter().fold(0u64, |m, &v| m | 1 << v);
    let rest = g.vertex_mask() & !hub_mask;
    crate::graph::bits(rest).all(|v| g.neighbors(v) & rest == 0)
}

fn is_clique(g: &Graph, set: u64) -> bool {
    crate::graph::bits(set).all(|v| g.neighbors(v) & set == set & !(1 << v))
}

/// `K_{n-1}` plus a pendant vertex.
pub fn is_clique_with_pendant(g: &Graph) -> bool {
    let n = g.order();
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    n >= 3 && leaves.len() == 1 && is_clique(g, g.vertex_mask() & !(1 << leaves[0]))
}

/// Attachment sizes `(a, b)` with `a >= b` if `g` is
/// [`clique_with_two_attachments`] up to isomorphism.
pub fn as_clique_with_two_attachments(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            let rest = g.vertex_mask() & !(1 << x) & !(1 << y);
            let (nx, ny) = (g.neighbors(x), g.neighbors(y));
            if nx != 0 && ny != 0 && nx & ny == 0 && nx | ny == rest && is_clique(g, rest) {
                let (a, b) = (nx.count_ones() as usize, ny.count_ones() as usize);
                return Some((a.max(b), a.min(b)));
            }
        }
    }
    None
}

pub fn is_five_cycle(g: &Graph) -> bool {
    g.order() == 5 && g.is_connected() && (0..5).all(|v| g.degree(v) == 2)
}
