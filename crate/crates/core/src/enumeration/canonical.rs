//! Canonical labelling by equitable refinement and a branching search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph};

pub const MAX_CANONICAL_ORDER: usize = 16;

/// Upper-triangle adjacency bits of the canonical relabelling.
///
/// Bit `j(j-1)/2 + i` (for `i < j`) records the pair `{i, j}`. Equal codes
/// mean isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u128,
}

impl CanonicalCode {
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut g = Graph::empty(n).expect("stored order is valid");
        for j in 1..n {
            for i in 0..j {
                if self.bits >> pair_index(i, j) & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({}, {:#x})", self.n, self.bits)
    }
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Split every cell by the number of neighbours in each splitter cell until
/// the ordered partition is equitable. Sub-cells are ordered by count.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let n = adj.len();
    let mut buf: Vec<u64> = Vec::with_capacity(n);
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() && cells.len() < n {
            let w = cells[s];
            buf.clear();
            for &c in cells.iter() {
                if c.count_ones() == 1 {
                    buf.push(c);
                    continue;
                }
                groups.clear();
                for v in bits(c) {
                    let k = (adj[v] & w).count_ones();
                    match groups.iter_mut().find(|(gk, _)| *gk == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                    groups.sort_unstable_by_key(|&(k, _)| k);
                }
                buf.extend(groups.iter().map(|&(_, m)| m));
            }
            std::mem::swap(cells, &mut buf);
            s += 1;
        }
        if !changed || cells.len() == n {
            return;
        }
    }
}

fn leaf_code(adj: &[u64], cells: &[u64]) -> u128 {
    let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = adj[order[j]];
        for (i, &u) in order[..j].iter().enumerate() {
            if row >> u & 1 == 1 {
                code |= 1 << pair_index(i, j);
            }
        }
    }
    code
}

fn twins(adj: &[u64], v: usize, w: usize) -> bool {
    adj[v] & !(1 << w) == adj[w] & !(1 << v)
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(u128, Vec<u64>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>) {
        refine(self.adj, &mut cells);
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            let code = leaf_code(self.adj, &cells);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, cells));
            }
            return;
        };
        let cell = cells[t];
        let mut explored: u64 = 0;
        for v in bits(cell) {
            // Swapping twins is an automorphism fixing everything already
            // individualized, so their subtrees give the same codes.
            if bits(explored).any(|u| twins(self.adj, u, v)) {
                continue;
            }
            explored |= 1 << v;
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[t + 1..]);
            self.run(next);
        }
    }
}

fn search(g: &Graph, initial: Vec<u64>) -> (u128, Vec<usize>) {
    let mut s = Search { adj: g.adjacency_rows(), best: None };
    s.run(initial);
    let (code, cells) = s.best.expect("search visits at least one leaf");
    (code, cells.iter().map(|c| c.trailing_zeros() as usize).collect())
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::OutOfRange { what: "order <= 16 for canonical labelling", got: g.order() });
    }
    Ok(())
}

/// Canonical labelling: `order[i]` is the vertex that receives label `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    check_order(g)?;
    let (bits, order) = search(g, vec![full_mask(g.order())]);
    Ok((CanonicalCode { n: g.order() as u8, bits }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical code of `g` with `v` distinguished. Two vertices share an
/// automorphism orbit iff their rooted codes are equal.
pub fn rooted_code(g: &Graph, v: usize) -> Result<CanonicalCode> {
    check_order(g)?;
    let all = full_mask(g.order());
    let init = if g.order() == 1 { vec![all] } else { vec![1 << v, all & !(1 << v)] };
    let (bits, _) = search(g, init);
    Ok(CanonicalCode { n: g.order() as u8, bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, path, random_connected};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Minimum code over all n! relabellings.
    fn brute_force_code(g: &Graph) -> u128 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u128::MAX;
        permute(&mut perm, 0, &mut |p| {
            let cells: Vec<u64> = p.iter().map(|&v| 1u64 << v).collect();
            best = best.min(leaf_code(g.adjacency_rows(), &cells));
        });
        best
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn cycle_examples() {
        let c5 = cycle(5);
        let code = canonical_form(&c5).unwrap();
        assert_eq!(canonical_form(&c5.permuted(&[3, 0, 4, 2, 1])).unwrap(), code);
        assert_eq!(canonical_form(&c5.complement()).unwrap(), code);
        assert_ne!(canonical_form(&path(5)).unwrap(), code);
        assert_eq!(canonical_form(&code.to_graph()).unwrap(), code);
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let (code, order) = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; 6];
        for (label, &v) in order.iter().enumerate() {
            perm[v] = label;
        }
        assert_eq!(g.permuted(&perm), code.to_graph());
    }

    #[test]
    fn agrees_with_brute_force_on_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rand::Rng::gen_range(&mut rng, 2..=6);
            let a = random_connected(&mut rng, n, 0.4);
            let b = random_connected(&mut rng, n, 0.4);
            let same = brute_force_code(&a) == brute_force_code(&b);
            assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), same, "{a:?} {b:?}");
        }
    }

    #[test]
    fn rooted_codes_detect_orbits() {
        // Path 0-1-2-3: orbits {0,3}, {1,2}.
        let p = path(4);
        let r: Vec<_> = (0..4).map(|v| rooted_code(&p, v).unwrap()).collect();
        assert_eq!(r[0], r[3]);
        assert_eq!(r[1], r[2]);
        assert_ne!(r[0], r[1]);
    }

    #[test]
    fn order_guard() {
        let g = Graph::empty(17).unwrap();
        assert!(canonical_form(&g).is_err());
        assert!(canonical_form(&Graph::empty(16).unwrap()).is_ok());
    }
}
