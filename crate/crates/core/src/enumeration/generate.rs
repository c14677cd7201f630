//! Connected graphs up to isomorphism by canonical augmentation.
//!
//! A child `G'` of a parent `P` (order `n-1`) is `P` plus a new vertex with
//! a nonempty neighbourhood. Every connected `G'` has a non-cut vertex whose
//! deletion leaves a connected graph, so choosing one such vertex
//! canonically, `m(G')`, gives each isomorphism class a unique parent. A
//! child is kept iff its new vertex lies in the orbit of `m(G')`, and
//! children of one parent are deduplicated by the rooted code of the new
//! vertex.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::canonical::{rooted_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Cheap isomorphism-invariant vertex key used before any search.
fn vertex_key(g: &Graph, v: usize) -> u64 {
    let nb = g.neighbors(v);
    let deg = nb.count_ones() as u64;
    let nsum: u64 = bits(nb).map(|u| g.degree(u) as u64).sum();
    let tri: u64 = bits(nb).map(|u| (g.neighbors(u) & nb).count_ones() as u64).sum::<u64>() / 2;
    deg << 40 | nsum << 20 | tri
}

/// Rooted code of the new vertex if the child is the canonical extension
/// of its parent, else `None`.
fn accept(child: &Graph) -> Option<CanonicalCode> {
    let n = child.order();
    let new = n - 1;
    let cuts = child.cut_vertices();
    let new_key = vertex_key(child, new);
    let mut tied = Vec::new();
    for v in 0..new {
        if cuts >> v & 1 == 1 {
            continue;
        }
        let k = vertex_key(child, v);
        if k > new_key {
            return None;
        }
        if k == new_key {
            tied.push(v);
        }
    }
    let own = rooted_code(child, new).expect("order within bound");
    for v in tied {
        if rooted_code(child, v).expect("order within bound") < own {
            return None;
        }
    }
    Some(own)
}

/// Canonical children of one parent, in increasing neighbour-mask order.
pub fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1..(1u64 << k) {
        let child = parent.with_vertex(mask).expect("order within bound");
        if let Some(code) = accept(&child) {
            if seen.insert(code) {
                out.push(child);
            }
        }
    }
    out
}

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange { what: "order in 1..=10 for enumeration", got: n });
    }
    Ok(())
}

/// Every connected graph of order `n`, one per isomorphism class, collected
/// with the per-parent work spread over the rayon pool.
pub fn connected_graphs_vec(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let mut level = vec![Graph::empty(1).expect("order 1")];
    for _ in 1..n {
        level = level.par_iter().flat_map_iter(children).collect();
    }
    Ok(level)
}

/// Pull-based stream over the connected graphs of order `n`.
///
/// Parents (order `n-1`) are materialized once; children are produced one
/// parent at a time. [`ConnectedGraphs::parent_cursor`] and
/// [`ConnectedGraphs::resume`] allow restarting from a parent boundary.
#[derive(Clone)]
pub struct ConnectedGraphs {
    parents: Arc<Vec<Graph>>,
    next_parent: usize,
    buffer: std::vec::IntoIter<Graph>,
    base: Option<Graph>,
}

impl ConnectedGraphs {
    pub fn new(n: usize) -> Result<Self> {
        check(n)?;
        let (parents, base) = if n == 1 {
            (Vec::new(), Some(Graph::empty(1).expect("order 1")))
        } else {
            (connected_graphs_vec(n - 1)?, None)
        };
        Ok(ConnectedGraphs { parents: Arc::new(parents), next_parent: 0, buffer: Vec::new().into_iter(), base })
    }

    pub fn parents(&self) -> &[Graph] {
        &self.parents
    }

    /// Index of the parent whose children will be emitted next, counting a
    /// partly emitted parent as not yet started.
    pub fn parent_cursor(&self) -> usize {
        if self.buffer.len() > 0 {
            self.next_parent - 1
        } else {
            self.next_parent
        }
    }

    /// Restart from the first child of parent `cursor`.
    pub fn resume(&self, cursor: usize) -> Self {
        ConnectedGraphs {
            parents: Arc::clone(&self.parents),
            next_parent: cursor.min(self.parents.len()),
            buffer: Vec::new().into_iter(),
            base: None,
        }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.base.take() {
            return Some(g);
        }
        loop {
            if let Some(g) = self.buffer.next() {
                return Some(g);
            }
            let p = self.parents.get(self.next_parent)?;
            self.next_parent += 1;
            self.buffer = children(p).into_iter();
        }
    }
}

pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    ConnectedGraphs::new(n)
}
