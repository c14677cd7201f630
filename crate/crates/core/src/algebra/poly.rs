//! Univariate polynomials over ℚ.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{to_fraction_string, BigRational};

/// Dense polynomial, coefficients in ascending degree. The zero polynomial
/// is the empty vector; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `self(x)` without building the reduced value.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        IntPoly::from_rational(self).sign_at(x)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division, `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// Substitute `x -> 1 - x`.
    pub fn reflect_one_minus(&self) -> Self {
        let t = Self::from_ints(&[1, -1]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &t) + &Self::constant(c.clone());
        }
        acc
    }

    /// Human-readable form such as `x^2 - 5/2 x + 5/4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a} {mono}"));
            }
        }
        out
    }

    /// Coefficients as fraction strings, ascending degree.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(to_fraction_string).collect()
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Integer polynomial used for fast exact sign evaluation. A rational
/// polynomial maps to a positive multiple of itself, so signs agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Positive integer multiple of `p` with unit content.
    pub fn from_rational(p: &RationalPoly) -> Self {
        let mut lcm = BigInt::one();
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let mut coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut content = BigInt::zero();
        for c in &coeffs {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in &mut coeffs {
                *c /= &content;
            }
        }
        IntPoly { coeffs }
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn to_rational(&self) -> RationalPoly {
        RationalPoly::from_bigints(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Divide by the (positive) gcd of the coefficients.
    pub fn primitive(&self) -> Self {
        let content = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &content).collect() }
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive();
        if p.leading().is_some_and(Signed::is_negative) {
            IntPoly { coeffs: p.coeffs.iter().map(|c| -c).collect() }
        } else {
            p
        }
    }

    fn sub_scaled_shift(&mut self, c: &BigInt, b: &IntPoly, shift: usize) {
        for (i, bc) in b.coeffs.iter().enumerate() {
            self.coeffs[i + shift] -= c * bc;
        }
    }

    /// `|lc(b)|^k · self - q · b` with `deg < deg b`: a remainder that is a
    /// positive multiple of the remainder over ℚ.
    pub fn pseudo_rem(&self, b: &IntPoly) -> Self {
        let db = b.degree().expect("division by the zero polynomial");
        let lb = b.leading().expect("nonzero");
        let abs_lb = lb.abs();
        let neg = lb.is_negative();
        let mut r = self.clone();
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let lr = r.coeffs[dr].clone();
            for c in &mut r.coeffs {
                *c *= &abs_lb;
            }
            let factor = if neg { -lr } else { lr };
            r.sub_scaled_shift(&factor, b, dr - db);
            r = IntPoly::new(r.coeffs);
        }
        r
    }

    /// Quotient over ℤ when `b` divides `self` exactly there.
    pub fn exact_div(&self, b: &IntPoly) -> Option<Self> {
        let db = b.degree().expect("division by the zero polynomial");
        let lb = b.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(IntPoly::new(Vec::new()));
        };
        if dr < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - db + 1];
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let (c, rem) = r.coeffs[dr].div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            r.sub_scaled_shift(&c, b, dr - db);
            q[dr - db] = c;
            r = IntPoly::new(r.coeffs);
        }
        r.is_zero().then(|| IntPoly::new(q))
    }

    pub fn sub(&self, o: &IntPoly) -> Self {
        let len = self.coeffs.len().max(o.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - o.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Normalized gcd by the primitive remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> Self {
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// Sign of the value at `x = a/b` (b > 0): sign of Σ c_i a^i b^(d-i).
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let a = x.numer();
        let b = x.denom();
        // Horner in homogeneous form.
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for i in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[i] * &bpow;
        }
        acc.sign_ordering()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, q};

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(RationalPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, RationalPoly::zero());
        assert_eq!(a.pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(p(&[5, 0, 3]).derivative(), p(&[0, 6]));
    }

    #[test]
    fn division() {
        let f = p(&[-1, 0, 0, 1]);
        let (quot, r) = f.div_rem(&p(&[-1, 1]));
        assert_eq!(quot, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (quot, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(quot, RationalPoly::new(vec![int(0), q(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 1])), None);
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&RationalPoly::zero()), p(&[1, 1]));
    }

    #[test]
    fn evaluation_and_sign() {
        let f = RationalPoly::new(vec![q(5, 4), q(-5, 2), int(1)]);
        assert_eq!(f.eval(&int(1)), q(-1, 4));
        assert_eq!(f.sign_at(&int(1)), Ordering::Less);
        assert_eq!(f.sign_at(&int(0)), Ordering::Greater);
        assert_eq!(f.sign_at(&int(2)), Ordering::Greater);
        assert_eq!(p(&[-2, 0, 1]).sign_at(&q(3, 2)), Ordering::Greater);
        assert_eq!(p(&[-1, 2]).sign_at(&q(1, 2)), Ordering::Equal);
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn integer_division_and_gcd() {
        let a = ip(&[-2, 1]); // x - 2
        let b = ip(&[3, 2]); // 2x + 3
        let f = IntPoly::from_rational(&(&a.to_rational() * &b.to_rational()));
        assert_eq!(f.exact_div(&b), Some(a.clone()));
        assert_eq!(f.exact_div(&ip(&[1, 1])), None);
        assert_eq!(f.gcd(&IntPoly::from_rational(&(&b.to_rational() * &b.to_rational()))), b);
        assert_eq!(ip(&[-4, 0, 2]).normalized(), ip(&[-2, 0, 1]));
        assert_eq!(ip(&[4, -2]).normalized(), ip(&[-2, 1]));
        // Remainder of x^2 + 1 by 2x + 3 over ℚ is 13/4; |2|^2 scaling gives 13.
        assert_eq!(ip(&[1, 0, 1]).pseudo_rem(&b), ip(&[13]));
        assert_eq!(ip(&[1, 0, 1]).pseudo_rem(&ip(&[3, -2])), ip(&[13]));
    }

    #[test]
    fn reflection() {
        // (1 - x)^2 = 1 - 2x + x^2
        assert_eq!(p(&[0, 0, 1]).reflect_one_minus(), p(&[1, -2, 1]));
    }

    #[test]
    fn display() {
        let f = RationalPoly::new(vec![q(5, 4), q(-5, 2), int(1)]);
        assert_eq!(f.to_string(), "x^2 - 5/2 x + 5/4");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(RationalPoly::zero().to_string(), "0");
        assert_eq!(f.to_fraction_strings(), ["5/4", "-5/2", "1/1"]);
    }
}
