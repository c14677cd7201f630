use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{pattern, PatternId};
use crate::graph::Graph;

/// An induced copy of a pattern: `map[i]` is the host vertex playing role
/// `v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern: PatternId,
    pub map: Vec<usize>,
}

impl Embedding {
    /// Host vertex playing role `v_i` (1-based).
    pub fn role(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    /// Whether `map` is injective and induces exactly the pattern edges.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let p = &pattern(self.pattern).graph;
        let k = p.order();
        if self.map.len() != k || self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| self.map[i] != self.map[j] && p.has_edge(i, j) == g.has_edge(self.map[i], self.map[j]))
        })
    }

    pub(crate) fn require_induced(&self, g: &Graph) -> Result<()> {
        if self.is_induced_in(g) {
            Ok(())
        } else {
            Err(Error::PatternMismatch(pattern_name(self.pattern)))
        }
    }
}

fn pattern_name(id: PatternId) -> &'static str {
    match id {
        PatternId::P4 => "P4",
        PatternId::H1 => "H1",
        PatternId::H2 => "H2",
        PatternId::H3 => "H3",
        PatternId::H4 => "H4",
        PatternId::H5 => "H5",
        PatternId::H6 => "H6",
    }
}

/// Backtracking over role assignments; `visit` returns `false` to stop.
fn search(g: &Graph, id: PatternId, visit: &mut impl FnMut(&[usize]) -> bool) {
    let p = &pattern(id).graph;
    let k = p.order();
    if g.order() < k {
        return;
    }
    let mut map = Vec::with_capacity(k);
    extend(g, p, &mut map, 0, visit);
}

fn extend(g: &Graph, p: &Graph, map: &mut Vec<usize>, used: u64, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let i = map.len();
    if i == p.order() {
        return visit(map);
    }
    for u in 0..g.order() {
        if used >> u & 1 == 1 {
            continue;
        }
        if (0..i).all(|j| p.has_edge(j, i) == g.has_edge(map[j], u)) {
            map.push(u);
            let go_on = extend(g, p, map, used | 1 << u, visit);
            map.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// Every induced embedding as an ordered role tuple.
pub fn find_induced_labeled(g: &Graph, id: PatternId) -> Vec<Embedding> {
    let mut out = Vec::new();
    search(g, id, &mut |m| {
        out.push(Embedding { pattern: id, map: m.to_vec() });
        true
    });
    out
}

/// Induced embeddings up to pattern automorphisms: the lexicographically
/// least tuple of each orbit.
pub fn find_induced(g: &Graph, id: PatternId) -> Vec<Embedding> {
    let auts = &pattern(id).automorphisms;
    let mut out = find_induced_labeled(g, id);
    out.retain(|e| {
        auts.iter().all(|sigma| {
            let image: Vec<usize> = sigma.iter().map(|&s| e.map[s]).collect();
            e.map <= image
        })
    });
    out
}

pub fn has_induced(g: &Graph, id: PatternId) -> bool {
    let mut found = false;
    search(g, id, &mut |_| {
        found = true;
        false
    });
    found
}

/// No induced `P4`.
pub fn is_cograph(g: &Graph) -> bool {
    !has_induced(g, PatternId::P4)
}
