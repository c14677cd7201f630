use serde::{Deserialize, Serialize};

use super::poly::{IntPoly, RationalPoly};
use super::rational::BigRational;
use crate::error::{Error, Result};

/// `p = unit · ∏ factor^multiplicity` with monic, square-free, pairwise
/// coprime factors. A root of the part with multiplicity `k` is a root of
/// `p` of multiplicity exactly `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: BigRational,
    pub parts: Vec<SquarefreePart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquarefreePart {
    #[serde(with = "poly_serde")]
    pub factor: RationalPoly,
    pub multiplicity: usize,
}

impl SquarefreeDecomposition {
    /// Multiply the decomposition back out.
    pub fn expand(&self) -> RationalPoly {
        self.parts.iter().fold(RationalPoly::constant(self.unit.clone()), |acc, part| {
            &acc * &part.factor.pow(part.multiplicity as u32)
        })
    }

    /// Product of the factors: the square-free part of `p`.
    pub fn radical(&self) -> RationalPoly {
        self.parts.iter().fold(RationalPoly::one(), |acc, part| &acc * &part.factor)
    }

    pub fn part_with_multiplicity(&self, k: usize) -> Option<&SquarefreePart> {
        self.parts.iter().find(|p| p.multiplicity == k)
    }
}

/// Yun's square-free decomposition.
pub fn squarefree(p: &RationalPoly) -> Result<SquarefreeDecomposition> {
    let unit = p.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let parts = squarefree_int(&IntPoly::from_rational(p))
        .into_iter()
        .map(|(f, multiplicity)| SquarefreePart { factor: f.to_rational().monic(), multiplicity })
        .collect();
    Ok(SquarefreeDecomposition { unit, parts })
}

/// Yun's algorithm over ℤ[x]. Every step is homogeneous in the scaling of
/// its inputs, so gcds may be taken up to units. Factors come back
/// normalized (primitive, positive leading coefficient).
pub(crate) fn squarefree_int(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut parts = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return parts;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = c.sub(&b.derivative());
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let next_b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = c.sub(&next_b.derivative());
        if a.degree().unwrap_or(0) > 0 {
            parts.push((a, k));
        }
        b = next_b;
        k += 1;
    }
    parts
}

/// Remainder of `p` modulo `minpoly`; zero iff `p` vanishes at every root
/// of `minpoly` (when `minpoly` is square-free).
pub fn residual_mod(p: &RationalPoly, minpoly: &RationalPoly) -> Result<RationalPoly> {
    match minpoly.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::OutOfRange { what: "modulus of degree >= 1", got: 0 }),
        Some(_) => Ok(p.rem(minpoly)),
    }
}

pub(crate) mod poly_serde {
    use super::RationalPoly;
    use crate::algebra::rational::parse_fraction;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &RationalPoly, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.to_fraction_strings())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RationalPoly, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_fraction(s).ok_or_else(|| D::Error::custom(format!("bad fraction {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, q};

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    /// Yun's algorithm over ℚ with monic gcds.
    fn rational_yun(p: &RationalPoly) -> Vec<SquarefreePart> {
        let f = p.monic();
        let mut parts = Vec::new();
        if f.is_constant() {
            return parts;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut d = &df.exact_div(&a0).unwrap() - &b.derivative();
        let mut k = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let next_b = b.exact_div(&a).unwrap();
            d = &d.exact_div(&a).unwrap() - &next_b.derivative();
            if !a.is_constant() {
                parts.push(SquarefreePart { factor: a, multiplicity: k });
            }
            b = next_b;
            k += 1;
        }
        parts
    }

    #[test]
    fn repeated_linear_factor() {
        // (x - 1)^2 (x + 2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let d = squarefree(&f).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[0], SquarefreePart { factor: p(&[2, 1]), multiplicity: 1 });
        assert_eq!(d.parts[1], SquarefreePart { factor: p(&[-1, 1]), multiplicity: 2 });
        assert_eq!(d.expand(), f);
    }

    #[test]
    fn squarefree_input_is_one_part() {
        let f = p(&[-2, 0, 3]);
        let d = squarefree(&f).unwrap();
        assert_eq!(d.unit, int(3));
        assert_eq!(d.parts, vec![SquarefreePart { factor: f.monic(), multiplicity: 1 }]);
    }

    #[test]
    fn five_cycle_charpoly() {
        // x (x^2 - 5/2 x + 5/4)^2, expanded by hand:
        // x^5 - 5 x^4 + 35/4 x^3 - 25/4 x^2 + 25/16 x
        let f = RationalPoly::new(vec![int(0), q(25, 16), q(-25, 4), q(35, 4), int(-5), int(1)]);
        let quad = RationalPoly::new(vec![q(5, 4), q(-5, 2), int(1)]);
        assert_eq!(&RationalPoly::x() * &quad.pow(2), f);
        let d = squarefree(&f).unwrap();
        assert_eq!(
            d.parts,
            vec![
                SquarefreePart { factor: RationalPoly::x(), multiplicity: 1 },
                SquarefreePart { factor: quad, multiplicity: 2 },
            ]
        );
    }

    #[test]
    fn zero_is_rejected_and_constants_have_no_parts() {
        assert_eq!(squarefree(&RationalPoly::zero()), Err(Error::ZeroPolynomial));
        let d = squarefree(&p(&[7])).unwrap();
        assert!(d.parts.is_empty());
        assert_eq!(d.unit, int(7));
    }

    #[test]
    fn high_multiplicities() {
        let f = &(&p(&[0, 1]).pow(5) * &p(&[-3, 1]).pow(3)) * &p(&[1, 0, 1]).scale(&q(-2, 3));
        let d = squarefree(&f).unwrap();
        let mults: Vec<_> = d.parts.iter().map(|p| p.multiplicity).collect();
        assert_eq!(mults, [1, 3, 5]);
        assert_eq!(d.expand(), f);
        assert_eq!(d.unit, q(-2, 3));
    }

    #[test]
    fn residuals() {
        assert!(residual_mod(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap().is_zero());
        assert_eq!(residual_mod(&p(&[1, 1]), &p(&[-3, 1])).unwrap(), p(&[4]));
        assert!(residual_mod(&p(&[1]), &RationalPoly::zero()).is_err());
    }

    proptest::proptest! {
        #[test]
        fn reassembles(roots in proptest::collection::vec((-4i64..5, 1u32..4), 1..5), lead in 1i64..5) {
            let mut f = RationalPoly::constant(int(lead));
            for (r, m) in &roots {
                f = &f * &p(&[-r, 1]).pow(*m);
            }
            let d = squarefree(&f).unwrap();
            proptest::prop_assert_eq!(d.expand(), f.clone());
            proptest::prop_assert_eq!(&d.parts, &rational_yun(&f));
            for part in &d.parts {
                proptest::prop_assert_eq!(part.factor.gcd(&part.factor.derivative()), RationalPoly::one());
            }
        }
    }
}
