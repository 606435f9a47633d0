//! Incremental reduced row-echelon form over ℚ with sparse rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type SparseRow = BTreeMap<usize, BigRational>;

/// Rows are kept fully reduced: each has a unit pivot and zeros in every
/// other pivot column, so the form does not depend on insertion order.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

pub fn sparse_from_ints(v: &[BigInt]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, BigRational::from_integer(x.clone())))
        .collect()
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        let hits: Vec<(usize, BigRational)> = v
            .iter()
            .filter(|(c, _)| self.rows.contains_key(c))
            .map(|(c, x)| (*c, x.clone()))
            .collect();
        for (c, coef) in hits {
            for (k, x) in &self.rows[&c] {
                let slot = v.entry(*k).or_insert_with(BigRational::zero);
                *slot -= &coef * x;
                if slot.is_zero() {
                    v.remove(k);
                }
            }
        }
        v
    }

    /// Adds `v` to the row space; false if it was already there.
    pub fn insert(&mut self, v: SparseRow) -> bool {
        let mut v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else { return false };
        let lead = lead.clone();
        if !lead.is_one() {
            for x in v.values_mut() {
                *x /= &lead;
            }
        }
        for row in self.rows.values_mut() {
            let Some(coef) = row.get(&pivot).cloned() else { continue };
            for (k, x) in &v {
                let slot = row.entry(*k).or_insert_with(BigRational::zero);
                *slot -= &coef * x;
                if slot.is_zero() {
                    row.remove(k);
                }
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// One primitive integer vector per free column `f`, with entry 1 (after
    /// scaling) at `f` and 0 at every other free column.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut by_free: BTreeMap<usize, Vec<(usize, BigRational)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (&k, x) in row {
                if k != p {
                    by_free.entry(k).or_default().push((p, -x.clone()));
                }
            }
        }
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| {
                let entries = by_free.remove(&f).unwrap_or_default();
                let lcm = entries.iter().fold(BigInt::one(), |l, (_, x)| l.lcm(x.denom()));
                let mut v = vec![BigInt::zero(); self.ncols];
                v[f] = lcm.clone();
                for (p, x) in entries {
                    v[p] = (x * BigRational::from_integer(lcm.clone())).to_integer();
                }
                primitive(&mut v);
                v
            })
            .collect()
    }
}

pub fn primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        sparse_from_ints(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let rows = [row(&[1, 2, 3, 0]), row(&[0, 1, 1, 1]), row(&[1, 3, 4, 1])];
        let mut a = SparseEchelon::new(4);
        let mut b = SparseEchelon::new(4);
        let inserted: Vec<bool> = rows.iter().map(|r| a.insert(r.clone())).collect();
        assert_eq!(inserted, vec![true, true, false]);
        for r in rows.iter().rev() {
            b.insert(r.clone());
        }
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.nullspace(), b.nullspace());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = [row(&[2, -1, 0, 3]), row(&[0, 3, 1, -1])];
        let mut e = SparseEchelon::new(4);
        for r in &rows {
            e.insert(r.clone());
        }
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot: BigRational = r.iter().map(|(k, x)| x * BigRational::from_integer(v[*k].clone())).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
