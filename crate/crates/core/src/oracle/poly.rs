//! Sparse multivariate integer polynomials, just enough for Saito determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The linear form `Σ coeffs[i] x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize, nvars: usize) -> Self {
        (0..k).fold(Self::constant(nvars, BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }
}

/// Determinant of a square matrix of polynomials, expanding row by row over
/// column subsets.
pub fn poly_determinant(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    let mut table: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    table[0] = Some(MultiPoly::constant(nvars, BigInt::one()));
    for (row, entries) in m.iter().enumerate() {
        let mut next: Vec<Option<MultiPoly>> = vec![None; 1 << n];
        for (set, value) in table.iter().enumerate() {
            let Some(value) = value else { continue };
            if (set as u32).count_ones() as usize != row || value.is_zero() {
                continue;
            }
            for (col, entry) in entries.iter().enumerate() {
                if set >> col & 1 == 1 || entry.is_zero() {
                    continue;
                }
                let inversions = (set >> (col + 1)).count_ones();
                let mut term = value.mul(entry);
                if inversions % 2 == 1 {
                    term = term.scale(&BigInt::from(-1));
                }
                let slot = next[set | 1 << col].get_or_insert_with(MultiPoly::zero);
                *slot = slot.add(&term);
            }
        }
        table = next;
    }
    table[(1 << n) - 1].clone().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        // det [[x, y], [1, 1]] = x − y
        let x = MultiPoly::linear(&[1, 0]);
        let y = MultiPoly::linear(&[0, 1]);
        let one = MultiPoly::constant(2, BigInt::one());
        let d = poly_determinant(&[vec![x.clone(), y.clone()], vec![one.clone(), one]], 2);
        assert_eq!(d, MultiPoly::linear(&[1, -1]));
        assert_eq!(d.eval(&[BigInt::from(5), BigInt::from(2)]), BigInt::from(3));
    }

    #[test]
    fn vandermonde() {
        let v: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::linear(&[(i == 0) as i64, (i == 1) as i64, (i == 2) as i64])).collect();
        let m: Vec<Vec<MultiPoly>> = (0..3).map(|k| v.iter().map(|x| x.pow(k, 3)).collect()).collect();
        let d = poly_determinant(&m, 3);
        let expected = MultiPoly::linear(&[0, 1, -1]).mul(&MultiPoly::linear(&[1, 0, -1])).mul(&MultiPoly::linear(&[1, -1, 0]));
        assert!(d == expected || d == expected.scale(&BigInt::from(-1)));
    }
}
