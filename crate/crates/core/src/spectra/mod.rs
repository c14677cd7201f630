//! Exact normalized-Laplacian spectra.
//!
//! `ℒ = I - D^{-1/2} A D^{-1/2}` has irrational entries, but it is similar
//! (via `D^{1/2}`) to `I - D⁻¹A`, whose entries are rational. Everything
//! here works with the rational matrix, so multiplicities are exact.

pub mod charpoly;
pub mod crosscheck;
pub mod jacobi;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::roots::{count_roots_open, isolate_roots_hinted, separate};
use crate::algebra::squarefree::squarefree_int;
use crate::algebra::{
    BigRational, IntPoly, IsolatingInterval, RationalMatrix, RationalPoly, SquarefreeDecomposition, SquarefreePart,
};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use crosscheck::{cross_validate, CrossCheckError};

fn require_no_isolated(g: &Graph) -> Result<()> {
    match (0..g.order()).find(|&u| g.degree(u) == 0) {
        Some(u) => Err(Error::IsolatedVertex(u)),
        None => Ok(()),
    }
}

/// Random-walk matrix `D⁻¹A`.
pub fn walk_matrix(g: &Graph) -> Result<RationalMatrix> {
    require_no_isolated(g)?;
    let n = g.order();
    let mut m = RationalMatrix::zeros(n, n);
    for u in 0..n {
        let w = BigRational::new(BigInt::one(), BigInt::from(g.degree(u)));
        for v in bits(g.neighbors(u)) {
            m[(u, v)] = w.clone();
        }
    }
    Ok(m)
}

/// Characteristic polynomial of `ℒ(G)`, monic of degree `n`.
pub fn nl_charpoly(g: &Graph) -> Result<RationalPoly> {
    require_no_isolated(g)?;
    Ok(charpoly_from_numerator(charpoly::shifted_determinant_poly(g)))
}

/// `det((x-1)D + A)` divided by its leading coefficient `∏ d_u`.
pub fn charpoly_from_numerator(num: Vec<BigInt>) -> RationalPoly {
    let lead = num.last().cloned().unwrap_or_else(BigInt::one);
    RationalPoly::new(num.into_iter().map(|c| BigRational::new(c, lead.clone())).collect())
}

/// Same polynomial through Faddeev–LeVerrier on `I - D⁻¹A`.
pub fn nl_charpoly_faddeev(g: &Graph) -> Result<RationalPoly> {
    let w = walk_matrix(g)?;
    Ok(RationalMatrix::identity(g.order()).sub(&w).charpoly())
}

/// One distinct eigenvalue: the square-free part it belongs to and an
/// isolating interval for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootHandle {
    pub part: usize,
    pub interval: IsolatingInterval,
}

/// Exact spectrum of `ℒ(G)`.
#[derive(Clone, Debug)]
pub struct MultiplicityProfile {
    pub n: usize,
    pub charpoly: RationalPoly,
    pub decomposition: SquarefreeDecomposition,
    /// Isolating intervals per part, ascending within each part.
    pub roots: Vec<Vec<IsolatingInterval>>,
    /// All distinct eigenvalues in ascending order with pairwise disjoint
    /// intervals.
    pub ordered: Vec<RootHandle>,
}

impl MultiplicityProfile {
    pub fn from_charpoly(n: usize, charpoly: RationalPoly) -> Result<Self> {
        let unit = charpoly.leading().cloned().ok_or(Error::ZeroPolynomial)?;
        let int_parts = squarefree_int(&IntPoly::from_rational(&charpoly));
        // Normalized-Laplacian eigenvalues lie in [0, 2]; the hint is verified.
        let hint = || Some((BigRational::from_integer((-1).into()), BigRational::from_integer(3.into())));
        let roots: Vec<Vec<IsolatingInterval>> =
            int_parts.iter().map(|(f, _)| isolate_roots_hinted(f, hint())).collect();
        let parts = int_parts
            .iter()
            .map(|(f, multiplicity)| SquarefreePart { factor: f.to_rational().monic(), multiplicity: *multiplicity })
            .collect();
        let decomposition = SquarefreeDecomposition { unit, parts };
        let ordered = order_roots(&decomposition, &roots);
        Ok(MultiplicityProfile { n, charpoly, decomposition, roots, ordered })
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.decomposition.parts[part].multiplicity
    }

    pub fn factor(&self, part: usize) -> &RationalPoly {
        &self.decomposition.parts[part].factor
    }

    /// Eigenvalue count with multiplicity over all isolated roots.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().enumerate().map(|(i, r)| r.len() * self.multiplicity(i)).sum()
    }

    /// Multiplicity of the rational eigenvalue `x` (0 if not an eigenvalue).
    pub fn multiplicity_of(&self, x: &BigRational) -> usize {
        self.decomposition
            .parts
            .iter()
            .find(|p| p.factor.eval(x).is_zero())
            .map_or(0, |p| p.multiplicity)
    }

    /// Eigenvalues with multiplicity, ascending: one handle per slot.
    pub fn slots(&self) -> Vec<&RootHandle> {
        self.ordered.iter().flat_map(|h| std::iter::repeat_n(h, self.multiplicity(h.part))).collect()
    }

    fn is_root_value(&self, h: &RootHandle, x: &BigRational) -> bool {
        h.interval.contains(x) && self.factor(h.part).eval(x).is_zero()
    }
}

/// Sort every distinct root and refine until neighbouring intervals are
/// disjoint. Roots of different parts are distinct, so this terminates.
fn order_roots(dec: &SquarefreeDecomposition, roots: &[Vec<IsolatingInterval>]) -> Vec<RootHandle> {
    let mut all: Vec<RootHandle> = roots
        .iter()
        .enumerate()
        .flat_map(|(part, ivs)| ivs.iter().map(move |iv| RootHandle { part, interval: iv.clone() }))
        .collect();
    loop {
        all.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo).then_with(|| a.interval.hi.cmp(&b.interval.hi)));
        let Some(i) = (1..all.len()).find(|&i| !all[i - 1].interval.is_left_of(&all[i].interval)) else {
            return all;
        };
        let (a, b) = separate(
            &dec.parts[all[i - 1].part].factor,
            &all[i - 1].interval,
            &dec.parts[all[i].part].factor,
            &all[i].interval,
        );
        all[i - 1].interval = a;
        all[i].interval = b;
    }
}

/// Whether some eigenvalue has multiplicity exactly `k`. Reads the
/// square-free decomposition only: ℒ is symmetric, so every root of every
/// part is real and no isolation is needed.
pub fn has_eigenvalue_of_multiplicity(g: &Graph, k: usize) -> Result<bool> {
    require_no_isolated(g)?;
    let num = IntPoly::new(charpoly::shifted_determinant_poly(g));
    Ok(squarefree_int(&num).iter().any(|(_, m)| *m == k))
}

pub fn multiplicity_profile(g: &Graph) -> Result<MultiplicityProfile> {
    MultiplicityProfile::from_charpoly(g.order(), nl_charpoly(g)?)
}

/// The eigenvalue θ of multiplicity `n - 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaDescriptor {
    #[serde(serialize_with = "serialize_poly")]
    pub factor: RationalPoly,
    pub interval: IsolatingInterval,
    pub multiplicity: usize,
    pub is_rho1: bool,
    pub is_rho_n_minus_1: bool,
    pub equals_one: bool,
}

fn serialize_poly<S: serde::Serializer>(p: &RationalPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::algebra::squarefree::poly_serde::serialize(p, s)
}

impl ThetaDescriptor {
    pub fn approx(&self) -> f64 {
        let iv = crate::algebra::refine(&self.factor, &self.interval, &BigRational::new(1.into(), (1u64 << 40).into()));
        crate::algebra::rational::to_f64(&iv.midpoint())
    }
}

/// Descriptors for every root of multiplicity exactly `k` in `profile`.
pub fn roots_with_multiplicity(profile: &MultiplicityProfile, k: usize) -> Vec<ThetaDescriptor> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    let Some(part) = profile.decomposition.parts.iter().position(|p| p.multiplicity == k) else {
        return Vec::new();
    };
    let ordered = &profile.ordered;
    let largest = ordered.last();
    let smallest_nonzero = ordered.iter().find(|h| !profile.is_root_value(h, &zero));
    ordered
        .iter()
        .filter(|h| h.part == part)
        .map(|h| ThetaDescriptor {
            factor: profile.factor(part).clone(),
            interval: h.interval.clone(),
            multiplicity: k,
            is_rho1: largest == Some(h),
            is_rho_n_minus_1: smallest_nonzero == Some(h),
            equals_one: profile.is_root_value(h, &one),
        })
        .collect()
}

pub fn find_theta(g: &Graph) -> Result<Vec<ThetaDescriptor>> {
    find_theta_in(g, &multiplicity_profile(g)?)
}

pub fn find_theta_in(g: &Graph, profile: &MultiplicityProfile) -> Result<Vec<ThetaDescriptor>> {
    let n = g.order();
    if n < 5 {
        return Err(Error::OutOfRange { what: "order n >= 5", got: n });
    }
    Ok(roots_with_multiplicity(profile, n - 3))
}

/// Multiplicity of eigenvalue 1, via `n - rank(A)`.
pub fn eigenvalue_one_multiplicity(g: &Graph) -> usize {
    g.order() - RationalMatrix::from_ints(&g.adjacency_matrix()).rank()
}

/// Whether the smallest nonzero eigenvalue equals 1.
pub fn rho_n_minus_1_is_one(g: &Graph) -> Result<bool> {
    let profile = multiplicity_profile(g)?;
    Ok(rho_n_minus_1_is_one_in(g, &profile))
}

pub fn rho_n_minus_1_is_one_in(g: &Graph, profile: &MultiplicityProfile) -> bool {
    let radical = profile.decomposition.radical();
    let below_one = count_roots_open(&radical, &BigRational::zero(), &BigRational::one()).expect("0 < 1");
    below_one == 0 && eigenvalue_one_multiplicity(g) >= 1
}

/// Symmetric `ℒ(G)` in floating point.
pub fn normalized_laplacian_f64(g: &Graph) -> Result<Vec<Vec<f64>>> {
    require_no_isolated(g)?;
    let n = g.order();
    let d: Vec<f64> = (0..n).map(|u| g.degree(u) as f64).collect();
    Ok((0..n)
        .map(|u| {
            (0..n)
                .map(|v| match (u == v, g.has_edge(u, v)) {
                    (true, _) => 1.0,
                    (false, true) => -1.0 / (d[u] * d[v]).sqrt(),
                    (false, false) => 0.0,
                })
                .collect()
        })
        .collect())
}

/// Eigenvalues of `ℒ(G)` by Jacobi rotations, ascending.
pub fn float_spectrum(g: &Graph) -> Result<Vec<f64>> {
    jacobi::symmetric_eigenvalues(normalized_laplacian_f64(g)?)
}

/// Compare against a rational threshold: how many eigenvalues (with
/// multiplicity) are `>= c`.
pub fn count_eigenvalues_at_least(profile: &MultiplicityProfile, c: &BigRational) -> usize {
    profile
        .decomposition
        .parts
        .iter()
        .map(|p| crate::algebra::count_roots_at_least(&p.factor, c) * p.multiplicity)
        .sum()
}

/// Whether some eigenvalue lies in `(0, 1]`, i.e. `ρ_{n-1} ≤ 1`.
pub fn has_nonzero_eigenvalue_at_most_one(profile: &MultiplicityProfile) -> bool {
    let radical = profile.decomposition.radical();
    count_roots_open(&radical, &BigRational::zero(), &BigRational::one()).expect("0 < 1") > 0
        || profile.multiplicity_of(&BigRational::one()) > 0
}

/// Where the root behind `h` sits relative to the rational `x`.
pub fn cmp_root_to(profile: &MultiplicityProfile, h: &RootHandle, x: &BigRational) -> Ordering {
    if profile.is_root_value(h, x) {
        Ordering::Equal
    } else if &h.interval.hi <= x {
        Ordering::Less
    } else if &h.interval.lo >= x {
        Ordering::Greater
    } else {
        let sign_x = profile.factor(h.part).sign_at(x);
        let sign_lo = profile.factor(h.part).sign_at(&h.interval.lo);
        if sign_x == sign_lo {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}
