//! Sturm sequences and exact real-root isolation.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{IntPoly, RationalPoly};
use super::rational::{int, to_fraction_string, BigRational};
use crate::error::{Error, Result};

/// Open interval `(lo, hi)` holding exactly one root of a square-free
/// polynomial; neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Strictly left of `other`, sharing at most an endpoint.
    pub fn is_left_of(&self, other: &IsolatingInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn to_fraction_pair(&self) -> [String; 2] {
        [to_fraction_string(&self.lo), to_fraction_string(&self.hi)]
    }
}

impl Serialize for IsolatingInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_fraction_pair().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IsolatingInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let [lo, hi] = <[String; 2]>::deserialize(d)?;
        let parse = |s: &str| {
            super::rational::parse_fraction(s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}")))
        };
        Ok(IsolatingInterval { lo: parse(&lo)?, hi: parse(&hi)? })
    }
}

/// Cauchy bound: every complex root has modulus strictly below
/// `1 + max |a_i / a_d|`.
pub fn cauchy_bound(p: &RationalPoly) -> BigRational {
    let Some(lc) = p.leading() else {
        return BigRational::one();
    };
    let d = p.degree().unwrap_or(0);
    let max = p.coeffs()[..d].iter().map(|c| (c / lc).abs()).max().unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Sturm chain `p, p', -rem(p, p'), ...`, stored as positive integer
/// multiples so sign evaluation stays in integer arithmetic.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &RationalPoly) -> Self {
        Self::from_int(&IntPoly::from_rational(p))
    }

    /// Chain built with positive-multiplier pseudo-remainders.
    pub fn from_int(p: &IntPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmSequence { chain };
        }
        let mut a = p.clone();
        let mut b = p.derivative().primitive();
        chain.push(a.clone());
        while !b.is_zero() {
            chain.push(b.clone());
            let r = IntPoly::new(Vec::new()).sub(&a.pseudo_rem(&b)).primitive();
            a = b;
            b = r;
        }
        SturmSequence { chain }
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for q in &self.chain {
            let s = q.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.chain.first().map_or(Ordering::Equal, |p| p.sign_at(x))
    }

    /// Distinct roots in `(lo, hi)`; endpoints must not be roots.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        for x in [lo, hi] {
            if self.sign_at(x) == Ordering::Equal {
                return Err(Error::EndpointIsRoot(to_fraction_string(x)));
            }
        }
        Ok(self.variations(lo) - self.variations(hi))
    }
}

/// Number of distinct real roots of the square-free `p` in `(lo, hi)`.
pub fn sturm_count(p: &RationalPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    SturmSequence::new(p).count(lo, hi)
}

/// Like [`sturm_count`] but endpoints may be roots; they are divided out.
pub fn count_roots_open(p: &RationalPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    let mut q = p.clone();
    for x in [lo, hi] {
        if q.eval(x).is_zero() {
            q = q.exact_div(&RationalPoly::linear_root(x)).expect("x is a root");
        }
    }
    sturm_count(&q, lo, hi)
}

/// Number of distinct real roots of the square-free `p` that are `>= c`.
pub fn count_roots_at_least(p: &RationalPoly, c: &BigRational) -> usize {
    let b = cauchy_bound(p);
    let at_c = usize::from(p.eval(c).is_zero());
    if c >= &b {
        return at_c;
    }
    at_c + count_roots_open(p, c, &b).expect("valid interval")
}

/// All real roots of the square-free `p`, one interval each, ascending.
pub fn isolate_roots(p: &RationalPoly) -> Vec<IsolatingInterval> {
    isolate_roots_int(&IntPoly::from_rational(p))
}

pub(crate) fn isolate_roots_int(p: &IntPoly) -> Vec<IsolatingInterval> {
    isolate_roots_hinted(p, None)
}

/// Isolation starting from `hint = (lo, hi)` when every real root is known
/// to lie there. The hint is checked against the Cauchy bound and ignored
/// if it misses a root.
pub(crate) fn isolate_roots_hinted(p: &IntPoly, hint: Option<(BigRational, BigRational)>) -> Vec<IsolatingInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = SturmSequence::from_int(p);
    let b = cauchy_bound_int(p);
    let vlo = seq.variations(&-b.clone());
    let vhi = seq.variations(&b);
    let (lo, hi, vlo, vhi) = match hint {
        Some((lo, hi)) if lo < hi && seq.sign_at(&lo) != Ordering::Equal && seq.sign_at(&hi) != Ordering::Equal => {
            let (vl, vh) = (seq.variations(&lo), seq.variations(&hi));
            if vl - vh == vlo - vhi {
                (lo, hi, vl, vh)
            } else {
                (-b.clone(), b, vlo, vhi)
            }
        }
        _ => (-b.clone(), b, vlo, vhi),
    };
    let mut out = Vec::new();
    split(&seq, lo, hi, vlo, vhi, &mut out);
    out
}

fn cauchy_bound_int(p: &IntPoly) -> BigRational {
    let d = p.degree().unwrap_or(0);
    let lc = p.coeffs[d].abs();
    let max = p.coeffs[..d].iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::new(max, lc) + BigRational::one()
}

fn split(
    seq: &SturmSequence,
    lo: BigRational,
    hi: BigRational,
    vlo: usize,
    vhi: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    match vlo - vhi {
        0 => {}
        1 => out.push(IsolatingInterval { lo, hi }),
        _ => {
            let mid = split_point(seq, &lo, &hi);
            let vmid = seq.variations(&mid);
            split(seq, lo, mid.clone(), vlo, vmid, out);
            split(seq, mid, hi, vmid, vhi, out);
        }
    }
}

/// A point strictly inside `(lo, hi)` that is not a root: the midpoint,
/// or repeatedly halved toward `lo` when the midpoint is a root.
fn split_point(seq: &SturmSequence, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = int(2);
    let mut m = (lo + hi) / &two;
    while seq.sign_at(&m) == Ordering::Equal {
        m = (lo + &m) / &two;
    }
    m
}

/// Shrink `iv` (isolating for the square-free `p`) to width `<= width` by
/// bisection.
pub fn refine(p: &RationalPoly, iv: &IsolatingInterval, width: &BigRational) -> IsolatingInterval {
    let ip = IntPoly::from_rational(p);
    refine_int(&ip, iv, width)
}

pub(crate) fn refine_int(p: &IntPoly, iv: &IsolatingInterval, width: &BigRational) -> IsolatingInterval {
    let mut iv = iv.clone();
    while &iv.width() > width {
        let w = iv.width().min(width.clone());
        iv = bisect_int(p, &iv, &w);
    }
    iv
}

/// One bisection step. If the midpoint is the root itself, return an
/// interval of width `tight / 2` centred on it.
pub(crate) fn bisect_int(p: &IntPoly, iv: &IsolatingInterval, tight: &BigRational) -> IsolatingInterval {
    let m = iv.midpoint();
    match p.sign_at(&m) {
        Ordering::Equal => {
            let h = tight / int(4);
            IsolatingInterval { lo: &m - &h, hi: &m + &h }
        }
        s if s == p.sign_at(&iv.lo) => IsolatingInterval { lo: m, hi: iv.hi.clone() },
        _ => IsolatingInterval { lo: iv.lo.clone(), hi: m },
    }
}

/// Refine two isolating intervals of distinct roots until disjoint.
pub fn separate(
    p: &RationalPoly,
    a: &IsolatingInterval,
    q: &RationalPoly,
    b: &IsolatingInterval,
) -> (IsolatingInterval, IsolatingInterval) {
    let pi = IntPoly::from_rational(p);
    let qi = IntPoly::from_rational(q);
    let (mut a, mut b) = (a.clone(), b.clone());
    while !(a.is_left_of(&b) || b.is_left_of(&a)) {
        if a.width() >= b.width() {
            let w = a.width();
            a = bisect_int(&pi, &a, &w);
        } else {
            let w = b.width();
            b = bisect_int(&qi, &b, &w);
        }
    }
    (a, b)
}
