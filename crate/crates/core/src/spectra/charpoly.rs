//! Integer route to the normalized-Laplacian characteristic polynomial.
//!
//! With `D` the degree matrix and `A` the adjacency matrix,
//! `det(xI - (I - D⁻¹A)) = det((x-1)D + A) / det D`. The numerator has
//! integer coefficients; it is recovered from its values at `x = 0..=n`
//! by Newton forward differences, in `i128` when nothing overflows and in
//! `BigInt` otherwise.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::{bits, Graph};

trait Ring: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero_(&self) -> bool;
    fn add_(&self, o: &Self) -> Option<Self>;
    fn sub_(&self, o: &Self) -> Option<Self>;
    fn mul_(&self, o: &Self) -> Option<Self>;
    /// Exact division.
    fn div_(&self, o: &Self) -> Option<Self>;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn is_zero_(&self) -> bool {
        *self == 0
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0);
        self.checked_div(*o)
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn is_zero_(&self) -> bool {
        self.is_zero()
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// `det((x-1)D + A)` at an integer `x`, by Bareiss elimination.
fn shifted_det<R: Ring>(g: &Graph, x: i64) -> Option<R> {
    let n = g.order();
    let mut a: Vec<Vec<R>> = (0..n)
        .map(|u| {
            let mut row = vec![R::from_i64(0); n];
            for v in bits(g.neighbors(u)) {
                row[v] = R::from_i64(1);
            }
            row[u] = R::from_i64((x - 1) * g.degree(u) as i64);
            row
        })
        .collect();
    let mut negate = false;
    let mut prev = R::from_i64(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero_()) else {
            return Some(R::from_i64(0));
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul_(&a[i][j])?.sub_(&a[i][k].mul_(&a[k][j])?)?;
                a[i][j] = v.div_(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        R::from_i64(0).sub_(&prev)
    } else {
        Some(prev)
    }
}

/// Coefficients (ascending) of the degree-`n` polynomial through
/// `(j, values[j])`, `j = 0..=n`, assuming they are integers.
fn interpolate<R: Ring>(values: Vec<R>) -> Option<Vec<R>> {
    let n = values.len() - 1;
    // Forward differences Δ^k f(0).
    let mut diffs = Vec::with_capacity(n + 1);
    let mut row = values;
    for _ in 0..=n {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| w[1].sub_(&w[0])).collect::<Option<Vec<_>>>()?;
    }
    // f = Σ (Δ^k f(0) / k!) · x(x-1)…(x-k+1); every quotient is an integer.
    let mut out = vec![R::from_i64(0); n + 1];
    let mut falling = vec![R::from_i64(1)];
    let mut factorial = R::from_i64(1);
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            factorial = factorial.mul_(&R::from_i64(k as i64))?;
            // falling *= (x - (k-1))
            let shift = R::from_i64(k as i64 - 1);
            let mut next = vec![R::from_i64(0); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] = next[i + 1].add_(c)?;
                next[i] = next[i].sub_(&c.mul_(&shift)?)?;
            }
            falling = next;
        }
        let a = d.div_(&factorial)?;
        if a.is_zero_() {
            continue;
        }
        for (i, c) in falling.iter().enumerate() {
            out[i] = out[i].add_(&a.mul_(c)?)?;
        }
    }
    Some(out)
}

fn numerator_in<R: Ring>(g: &Graph) -> Option<Vec<R>> {
    let n = g.order();
    let values = (0..=n as i64).map(|x| shifted_det::<R>(g, x)).collect::<Option<Vec<_>>>()?;
    interpolate(values)
}

/// Integer coefficients of `det((x-1)D + A)`, ascending. The leading
/// coefficient is `∏ d_u`.
pub fn shifted_determinant_poly(g: &Graph) -> Vec<BigInt> {
    if let Some(c) = numerator_in::<i128>(g) {
        return c.into_iter().map(BigInt::from).collect();
    }
    numerator_in::<BigInt>(g).expect("BigInt arithmetic does not overflow")
}

/// The same coefficients in `i128` when they fit (always for n ≤ 12).
pub fn shifted_determinant_poly_i128(g: &Graph) -> Option<Vec<i128>> {
    numerator_in::<i128>(g)
}

#[cfg(test)]
fn degree_product(g: &Graph) -> BigInt {
    (0..g.order()).fold(BigInt::from(1), |acc, u| acc * BigInt::from(g.degree(u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_integer_polynomials() {
        // 3x^3 - 2x + 7
        let f = |x: i128| 3 * x * x * x - 2 * x + 7;
        let vals: Vec<i128> = (0..=3).map(f).collect();
        assert_eq!(interpolate(vals).unwrap(), vec![7, -2, 0, 3]);
    }

    #[test]
    fn leading_coefficient_is_degree_product() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let c = shifted_determinant_poly(&g);
        assert_eq!(c.last().unwrap(), &degree_product(&g));
        assert_eq!(c.len(), 5);
        assert!(c[0].is_zero());
    }

    #[test]
    fn bigint_and_i128_paths_agree() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let small: Vec<BigInt> = numerator_in::<i128>(&g).unwrap().into_iter().map(BigInt::from).collect();
        assert_eq!(small, numerator_in::<BigInt>(&g).unwrap());
    }
}
