use crate::error::{Error, Result};
use crate::families::PatternId;
use crate::graph::{bits, Graph};

use super::Embedding;

/// Vertices outside an induced `P4 = v1 v2 v3 v4`, grouped by which path
/// vertices they see. Bucket index bit `i` stands for `v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePartition {
    pub p4: [usize; 4],
    pub buckets: [u64; 16],
}

impl TracePartition {
    /// `S_U` for `U` given as 1-based roles, e.g. `&[1, 4]`.
    pub fn bucket(&self, roles: &[usize]) -> u64 {
        self.buckets[roles.iter().fold(0, |m, &r| m | 1 << (r - 1))]
    }

    pub fn members(&self, roles: &[usize]) -> Vec<usize> {
        bits(self.bucket(roles)).collect()
    }

    /// The buckets are disjoint and together with the path cover `V(G)`.
    pub fn is_partition_of(&self, g: &Graph) -> bool {
        let path = self.p4.iter().fold(0u64, |m, &v| m | 1 << v);
        let mut seen = path;
        for &b in &self.buckets {
            if b & seen != 0 {
                return false;
            }
            seen |= b;
        }
        seen == g.vertex_mask()
    }
}

pub fn trace_partition(g: &Graph, p4: &Embedding) -> Result<TracePartition> {
    if p4.pattern != PatternId::P4 {
        return Err(Error::PatternMismatch("P4"));
    }
    p4.require_induced(g)?;
    let path = [p4.map[0], p4.map[1], p4.map[2], p4.map[3]];
    let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut buckets = [0u64; 16];
    for u in bits(g.vertex_mask() & !on_path) {
        let key = (0..4).filter(|&i| g.has_edge(u, path[i])).fold(0, |m, i| m | 1 << i);
        buckets[key] |= 1 << u;
    }
    Ok(TracePartition { p4: path, buckets })
}
