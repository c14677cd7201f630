use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{BigRational, RationalPoly};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::nl_charpoly;

/// Maximal cliques of size at least 2 whose members share their
/// neighbourhood outside the clique: the classes of equal closed
/// neighbourhoods.
pub fn twin_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for v in 0..g.order() {
        let closed = g.neighbors(v) | 1 << v;
        match classes.iter_mut().find(|(c, _)| *c == closed) {
            Some((_, members)) => members.push(v),
            None => classes.push((closed, vec![v])),
        }
    }
    classes.into_iter().map(|(_, m)| m).filter(|m| m.len() >= 2).collect()
}

fn validate(g: &Graph, k: &[usize]) -> Result<u64> {
    let n = g.order();
    if k.len() < 2 {
        return Err(Error::NotTwinClique(format!("needs at least 2 vertices, got {}", k.len())));
    }
    let mut mask = 0u64;
    for &v in k {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if mask >> v & 1 == 1 {
            return Err(Error::NotTwinClique(format!("vertex {v} repeated")));
        }
        mask |= 1 << v;
    }
    let outside = g.neighbors(k[0]) & !mask;
    for &v in k {
        if g.neighbors(v) & mask != mask & !(1 << v) {
            return Err(Error::NotTwinClique(format!("{k:?} is not a clique")));
        }
        if g.neighbors(v) & !mask != outside {
            return Err(Error::NotTwinClique(format!("vertex {v} has a different outside neighbourhood")));
        }
    }
    Ok(mask)
}

/// Whether `(x - (1 + 1/d))^(q-1)` divides the characteristic polynomial,
/// for a twin clique `k` of size `q` whose members have degree `d`.
pub fn check_twin_eigenvalue(g: &Graph, k: &[usize]) -> Result<bool> {
    validate(g, k)?;
    let d = g.degree(k[0]);
    let lambda = BigRational::one() + BigRational::new(BigInt::one(), BigInt::from(d));
    let divisor = RationalPoly::linear_root(&lambda).pow(k.len() as u32 - 1);
    Ok(nl_charpoly(g)?.rem(&divisor).is_zero())
}
