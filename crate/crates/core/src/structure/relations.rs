//! Degree identities that θ must satisfy, as residual polynomials in θ.
//!
//! Each identity is a polynomial in `t = 1 - θ` with integer coefficients
//! built from vertex degrees. It is expanded in θ and reduced modulo the
//! factor carrying θ; a zero remainder means the identity holds at every
//! root of that factor.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{residual_mod, sturm_count, RationalPoly};
use crate::error::{Error, Result};
use crate::families::PatternId;
use crate::graph::Graph;
use crate::spectra::ThetaDescriptor;

use super::Embedding;

/// `t = 1 - θ`.
fn t() -> RationalPoly {
    RationalPoly::from_ints(&[1, -1])
}

/// `Σ c_k t^k` as a polynomial in θ.
fn in_t(coeffs: &[i128]) -> RationalPoly {
    let t = t();
    coeffs.iter().rev().fold(RationalPoly::zero(), |acc, &c| {
        &(&acc * &t) + &RationalPoly::constant(BigRational::from_integer(BigInt::from(c)))
    })
}

/// Left side of the four-vertex identity for an induced path `v1 v2 v3 v4`
/// with degrees `d`:
/// `t⁴ d1 d2 d3 d4 - (d1 d2 + d3 d4 + d1 d4) t² + 1`.
pub fn path_identity_poly(d: [u64; 4]) -> RationalPoly {
    let [d1, d2, d3, d4] = d.map(i128::from);
    in_t(&[1, 0, -(d1 * d2 + d3 * d4 + d1 * d4), 0, d1 * d2 * d3 * d4])
}

/// Identities attached to a five-vertex pattern, denominators cleared.
/// `d[i]` is the degree of role `v_{i+1}`; for `P4` only the first four
/// entries are read.
pub fn pattern_relation_polys(id: PatternId, d: &[u64; 5]) -> Vec<RationalPoly> {
    let [d1, d2, d3, d4, d5] = d.map(i128::from);
    match id {
        PatternId::P4 => vec![path_identity_poly([d[0], d[1], d[2], d[3]])],
        // t = -1/d1 = -1/d5
        PatternId::H1 => vec![in_t(&[1, d1]), in_t(&[1, d5])],
        // t = -1/d2 = -1/d5
        PatternId::H2 => vec![in_t(&[1, d2]), in_t(&[1, d5])],
        PatternId::H3 => vec![in_t(&[-1, d4, d1 * d2])],
        PatternId::H4 => vec![
            in_t(&[d3 + d5, d3 * d2]),
            in_t(&[d2 + d4, d4 * d5]),
            in_t(&[-1, d3, d1 * (d3 + d5)]),
        ],
        PatternId::H5 => vec![in_t(&[d2 + 2 * d4, d4 * (d2 + d5)]), in_t(&[d3 + 2 * d1, d1 * (d3 + d5)])],
        // t = -1/d1 = -1/d4: the endpoints of the edge inside the 3-side.
        PatternId::H6 => vec![in_t(&[1, d1]), in_t(&[1, d4])],
    }
}

fn degrees_of(g: &Graph, map: &[usize]) -> [u64; 5] {
    let mut d = [0u64; 5];
    for (slot, &v) in d.iter_mut().zip(map) {
        *slot = g.degree(v) as u64;
    }
    d
}

/// Residual of the four-vertex identity for the induced path `p4`.
pub fn check_path_identity(g: &Graph, theta: &ThetaDescriptor, p4: &Embedding) -> Result<RationalPoly> {
    if p4.pattern != PatternId::P4 {
        return Err(Error::PatternMismatch("P4"));
    }
    p4.require_induced(g)?;
    let d = degrees_of(g, &p4.map);
    residual_mod(&path_identity_poly([d[0], d[1], d[2], d[3]]), &theta.factor)
}

/// Residuals of the identities attached to `emb.pattern` (one of `H1`–`H6`).
pub fn check_pattern_relations(g: &Graph, theta: &ThetaDescriptor, emb: &Embedding) -> Result<Vec<RationalPoly>> {
    if emb.pattern == PatternId::P4 {
        return Err(Error::PatternMismatch("H1-H6"));
    }
    emb.require_induced(g)?;
    let d = degrees_of(g, &emb.map);
    pattern_relation_polys(emb.pattern, &d).iter().map(|p| residual_mod(p, &theta.factor)).collect()
}

/// Whether `p` vanishes at the particular root θ, even when the residual
/// modulo a reducible factor is nonzero.
pub fn vanishes_at(p: &RationalPoly, theta: &ThetaDescriptor) -> bool {
    let common = p.gcd(&theta.factor);
    match common.degree() {
        None => true,
        Some(0) => false,
        Some(_) => sturm_count(&common, &theta.interval.lo, &theta.interval.hi).expect("isolating interval") > 0,
    }
}
