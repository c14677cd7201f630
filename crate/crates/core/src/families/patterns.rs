//! The induced patterns `P4` and `H1`–`H6`.
//!
//! Vertex `i` of a pattern graph plays role `v_{i+1}`. `H1`–`H5` all contain
//! the induced path `v1 v2 v3 v4` and differ in how `v5` attaches to it;
//! `H3` is the 5-cycle `v1 v2 v3 v4 v5`. `H6` is `K_{2,3}` with sides
//! `{v2, v5}` and `{v1, v3, v4}` plus the edge `v1 v4`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternId {
    P4,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
}

impl PatternId {
    pub const ALL: [PatternId; 7] =
        [PatternId::P4, PatternId::H1, PatternId::H2, PatternId::H3, PatternId::H4, PatternId::H5, PatternId::H6];
    pub const H: [PatternId; 6] = [PatternId::H1, PatternId::H2, PatternId::H3, PatternId::H4, PatternId::H5, PatternId::H6];

    fn index(self) -> usize {
        self as usize
    }

    /// Edges on roles, 1-based as `(i, j)` meaning `v_i v_j`.
    fn role_edges(self) -> &'static [(usize, usize)] {
        const P4: [(usize, usize); 3] = [(1, 2), (2, 3), (3, 4)];
        match self {
            PatternId::P4 => &P4,
            PatternId::H1 => &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5)],
            PatternId::H2 => &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5)],
            PatternId::H3 => &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
            PatternId::H4 => &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (4, 5)],
            PatternId::H5 => &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
            PatternId::H6 => &[(1, 2), (2, 3), (2, 4), (1, 5), (3, 5), (4, 5), (1, 4)],
        }
    }

    fn order(self) -> usize {
        if self == PatternId::P4 {
            4
        } else {
            5
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct Pattern {
    pub id: PatternId,
    pub graph: Graph,
    /// Every automorphism as a role permutation `sigma` (role `i` maps to
    /// `sigma[i]`), identity first.
    pub automorphisms: Vec<Vec<usize>>,
    pub roles: Vec<String>,
}

impl Pattern {
    fn build(id: PatternId) -> Self {
        let k = id.order();
        let edges: Vec<_> = id.role_edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        let graph = Graph::from_edges(k, &edges).expect("pattern edges are valid");
        let automorphisms = automorphisms(&graph);
        let roles = (1..=k).map(|i| format!("v{i}")).collect();
        Pattern { id, graph, automorphisms, roles }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Brute force over all `k!` permutations.
fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let k = g.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permutations(&mut perm, 0, &mut |p| {
        if g.permuted(p) == *g {
            out.push(p.to_vec());
        }
    });
    out.sort();
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn pattern_catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(|| PatternId::ALL.iter().map(|&id| Pattern::build(id)).collect())
}

pub fn pattern(id: PatternId) -> &'static Pattern {
    &pattern_catalog()[id.index()]
}
