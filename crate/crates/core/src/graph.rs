//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// Bit mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the indices of set bits in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A simple undirected graph. Vertices are `0..n`.
///
/// Adjacency is kept symmetric and irreflexive by every mutator, so a
/// `Graph` value is always a valid simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from raw adjacency rows, validating symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let mask = full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange { vertex: 63 - row.leading_zeros() as usize, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidFamily(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bit mask.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) == self.n - 1)
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let adj = (0..self.n).map(|u| !self.adj[u] & mask & !(1 << u)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start` within the vertex set `allowed`.
    pub fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in bits(self.adj[u]) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Largest distance between two vertices, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        let mut cuts = 0;
        if self.n <= 2 {
            return 0;
        }
        for v in 0..self.n {
            let rest = all & !(1 << v);
            let start = rest.trailing_zeros() as usize;
            if self.reach(start, rest) != rest {
                cuts |= 1 << v;
            }
        }
        cuts
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Add a new vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.n >= MAX_ORDER {
            return Err(Error::InvalidOrder(self.n + 1));
        }
        let nbrs = neighbors & self.vertex_mask();
        let mut adj = self.adj.clone();
        let new = self.n;
        for v in bits(nbrs) {
            adj[v] |= 1 << new;
        }
        adj.push(nbrs);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// 0/1 adjacency matrix as nested rows.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| i64::from(self.has_edge(u, v))).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn symmetric_and_irreflexive() {
        let mut g = Graph::empty(4).unwrap();
        g.add_edge(0, 3).unwrap();
        assert!(g.has_edge(3, 0));
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b1]).is_err());
    }

    #[test]
    fn order_limits() {
        assert_eq!(Graph::empty(0), Err(Error::InvalidOrder(0)));
        assert_eq!(Graph::empty(65), Err(Error::InvalidOrder(65)));
        let g = Graph::empty(64).unwrap();
        assert_eq!(g.complement().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k5 = Graph::empty(5).unwrap().complement();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.complement().edge_count(), 0);
        let c5 = cycle5();
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn complement_of_c5_is_a_relabelled_c5() {
        // 0-2-4-1-3-0 is the complement cycle; map it back onto 0-1-2-3-4.
        let c5 = cycle5();
        let comp = c5.complement();
        let mut perm = [0usize; 5];
        for (pos, v) in [0, 2, 4, 1, 3].into_iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(comp.permuted(&perm), c5);
    }

    #[test]
    fn connectivity() {
        assert!(cycle5().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(path(4).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(Graph::empty(n).unwrap().complement().diameter(), Some(1));
        }
        assert_eq!(cycle5().diameter(), Some(2));
        assert_eq!(path(4).diameter(), Some(3));
        assert_eq!(Graph::empty(3).unwrap().diameter(), None);
    }

    #[test]
    fn cut_vertices_of_path() {
        assert_eq!(path(4).cut_vertices(), 0b0110);
        assert_eq!(cycle5().cut_vertices(), 0);
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = cycle5();
        let p = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p, path(4));
        let g = c5.permuted(&[1, 2, 3, 4, 0]);
        assert_eq!(g, c5);
        let h = path(3).with_vertex(0b101).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(3, 0) && h.has_edge(3, 2));
    }
}
