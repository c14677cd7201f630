//! Exact/float agreement: every float eigenvalue must sit within
//! [`TOLERANCE`] of the exact root in the same sorted slot, with that root
//! pinned to an interval of width at most [`REFINED_WIDTH`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::MultiplicityProfile;
use crate::algebra::rational::{from_f64, to_f64};
use crate::algebra::roots::refine_int;
use crate::algebra::{BigRational, IntPoly, IsolatingInterval};

pub const TOLERANCE: f64 = 1e-8;
pub const REFINED_WIDTH: f64 = 1e-10;

/// Half-width of the float-guided probe, `2^-35`.
const PROBE_EXPONENT: u32 = 35;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CrossCheckError {
    #[error("exact spectrum has {exact} eigenvalues with multiplicity, float spectrum has {float}")]
    Count { exact: usize, float: usize },
    #[error("float eigenvalue {value} in slot {slot} is {distance:e} from exact interval [{lo}, {hi}]")]
    Deviation { slot: usize, value: f64, lo: f64, hi: f64, distance: f64 },
    #[error("float eigenvalue in slot {0} is not finite")]
    NotFinite(usize),
}

fn sign_nonzero(o: Ordering) -> bool {
    o != Ordering::Equal
}

/// An interval of width `<= 2^-34` around `x` that provably holds the root
/// of `p` isolated by `iv`, if the probe brackets it.
fn probe(p: &IntPoly, iv: &IsolatingInterval, x: &BigRational) -> Option<IsolatingInterval> {
    let eps = BigRational::new(BigInt::one(), BigInt::one() << PROBE_EXPONENT);
    let lo = (x - &eps).max(iv.lo.clone());
    let hi = (x + &eps).min(iv.hi.clone());
    if lo >= hi {
        return None;
    }
    let (sl, sh) = (p.sign_at(&lo), p.sign_at(&hi));
    if !sign_nonzero(sl) || !sign_nonzero(sh) || sl != sh {
        // A zero at an endpoint is the root itself: inside [lo, hi] too.
        Some(IsolatingInterval { lo, hi })
    } else {
        None
    }
}

fn distance(x: f64, iv: &IsolatingInterval) -> (f64, f64, f64) {
    let (lo, hi) = (to_f64(&iv.lo), to_f64(&iv.hi));
    let d = if x < lo {
        lo - x
    } else if x > hi {
        x - hi
    } else {
        0.0
    };
    (d, lo, hi)
}

/// Match `floats` (ascending) slot by slot against the exact spectrum.
pub fn cross_validate(profile: &MultiplicityProfile, floats: &[f64]) -> Result<(), CrossCheckError> {
    let slots = profile.slots();
    if slots.len() != floats.len() {
        return Err(CrossCheckError::Count { exact: slots.len(), float: floats.len() });
    }
    let ints: Vec<IntPoly> = profile.decomposition.parts.iter().map(|p| IntPoly::from_rational(&p.factor)).collect();
    let width = from_f64(REFINED_WIDTH).expect("finite");
    for (slot, (h, &x)) in slots.iter().zip(floats).enumerate() {
        let xq = from_f64(x).ok_or(CrossCheckError::NotFinite(slot))?;
        let p = &ints[h.part];
        let iv = probe(p, &h.interval, &xq).unwrap_or_else(|| refine_int(p, &h.interval, &width));
        let (d, lo, hi) = distance(x, &iv);
        if d > TOLERANCE {
            return Err(CrossCheckError::Deviation { slot, value: x, lo, hi, distance: d });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spectra::{float_spectrum, multiplicity_profile};

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn five_cycle_agrees() {
        let g = c5();
        let prof = multiplicity_profile(&g).unwrap();
        cross_validate(&prof, &float_spectrum(&g).unwrap()).unwrap();
    }

    #[test]
    fn perturbed_value_is_rejected() {
        let g = c5();
        let prof = multiplicity_profile(&g).unwrap();
        let mut f = float_spectrum(&g).unwrap();
        f[3] += 1e-6;
        assert!(matches!(cross_validate(&prof, &f), Err(CrossCheckError::Deviation { slot: 3, .. })));
        f.pop();
        assert_eq!(cross_validate(&prof, &f), Err(CrossCheckError::Count { exact: 5, float: 4 }));
    }

    #[test]
    fn refined_fallback_width() {
        let g = c5();
        let prof = multiplicity_profile(&g).unwrap();
        let h = &prof.ordered[1];
        let p = IntPoly::from_rational(prof.factor(h.part));
        let iv = refine_int(&p, &h.interval, &from_f64(REFINED_WIDTH).unwrap());
        assert!(to_f64(&iv.width()) <= REFINED_WIDTH);
        assert!(probe(&p, &h.interval, &from_f64(0.5).unwrap()).is_none());
    }
}
