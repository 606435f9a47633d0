//! Fraction-free Gauss-Jordan elimination over the integers.
//!
//! Every routine first runs on `i128` with checked arithmetic and silently
//! restarts on `BigInt` if an intermediate value overflows, so results are
//! always exact. Rows are kept primitive (content 1) with a positive pivot,
//! which makes the reduced form canonical: it is the rational RREF with each
//! row scaled to its primitive integer multiple.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn nought() -> Self;
    fn nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn abs_key(&self) -> u128;
    /// `self * a - b * c`, or `None` on overflow.
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Ring for i128 {
    fn nought() -> Self {
        0
    }
    fn nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn abs_key(&self) -> u128 {
        self.unsigned_abs()
    }
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        let left = self.checked_mul(*a)?;
        let right = b.checked_mul(*c)?;
        let out = left.checked_sub(right)?;
        // Keep a safety margin so that negation never overflows.
        (out != i128::MIN).then_some(out)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Ring for BigInt {
    fn nought() -> Self {
        Zero::zero()
    }
    fn nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs_key(&self) -> u128 {
        self.magnitude().to_u128().unwrap_or(u128::MAX)
    }
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Option<Self> {
        Some(self * a - b * c)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

fn make_primitive<T: Ring>(row: &mut [T]) {
    let mut g = T::nought();
    for x in row.iter() {
        if !x.nil() {
            g = g.gcd(x);
            if g.is_unit() {
                break;
            }
        }
    }
    let lead_negative = row.iter().find(|x| !x.nil()).is_some_and(|x| x.is_negative());
    if g.nil() {
        return;
    }
    let g = if lead_negative { g.neg() } else { g };
    if g.is_unit() && !lead_negative {
        return;
    }
    for x in row.iter_mut() {
        if !x.nil() {
            *x = x.div_exact(&g);
        }
    }
}

/// Gauss-Jordan in place. Returns pivot columns; `rows` is truncated to the rank.
fn gauss_jordan<T: Ring>(rows: &mut Vec<Vec<T>>, ncols: usize) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let best = (rank..rows.len())
            .filter(|&r| !rows[r][col].nil())
            .min_by_key(|&r| rows[r][col].abs_key());
        let Some(best) = best else { continue };
        rows.swap(rank, best);
        make_primitive(&mut rows[rank]);
        let prow = rows[rank].clone();
        let p = prow[col].clone();
        let support: Vec<usize> = (0..ncols).filter(|&j| !prow[j].nil()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].nil() {
                continue;
            }
            let f = row[col].clone();
            let g = p.gcd(&f);
            let pa = p.div_exact(&g);
            let fa = f.div_exact(&g);
            if pa.is_unit() && !pa.is_negative() {
                let one = pa;
                for &j in &support {
                    row[j] = row[j].mul_sub(&one, &fa, &prow[j])?;
                }
            } else {
                for j in 0..ncols {
                    if row[j].nil() && prow[j].nil() {
                        continue;
                    }
                    row[j] = row[j].mul_sub(&pa, &fa, &prow[j])?;
                }
                make_primitive(row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    for row in rows.iter_mut() {
        make_primitive(row);
    }
    Some(pivots)
}

fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 100))).collect())
        .collect()
}

/// Reduced row echelon form of an integer matrix with primitive rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Echelon {
    /// Row-reduces `rows`, each of length `ncols`.
    pub fn new(rows: &[Vec<BigInt>], ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        if let Some(mut small) = to_i128_rows(rows) {
            if let Some(pivots) = gauss_jordan(&mut small, ncols) {
                let rows = small
                    .into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect())
                    .collect();
                return Echelon { rows, pivots, ncols };
            }
        }
        let mut big = rows.to_vec();
        let pivots = gauss_jordan(&mut big, ncols).expect("BigInt elimination cannot overflow");
        Echelon { rows: big, pivots, ncols }
    }

    /// Convenience constructor for machine-integer input.
    pub fn from_i64(rows: &[Vec<i64>], ncols: usize) -> Self {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::new(&big, ncols)
    }

    pub fn empty(ncols: usize) -> Self {
        Echelon { rows: Vec::new(), pivots: Vec::new(), ncols }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies in the row space.
    pub fn residual(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let p = &row[pc];
            let f = v[pc].clone();
            let g = Integer::gcd(p, &f);
            let pa = p / &g;
            let fa = f / &g;
            for j in 0..self.ncols {
                if v[j].is_zero() && row[j].is_zero() {
                    continue;
                }
                v[j] = &v[j] * &pa - &fa * &row[j];
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.residual(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current rows. The stored rows then
    /// stay echelon in insertion order but are no longer fully reduced.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let mut r = self.residual(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut r);
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }

    /// Integer basis of the right kernel, one primitive vector per free column
    /// in increasing column order. Requires the form produced by [`Echelon::new`].
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut scale = BigInt::one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    scale = scale.lcm(&row[pc]);
                }
            }
            let mut v = vec![BigInt::zero(); self.ncols];
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                if !row[free].is_zero() {
                    v[pc] = -(&row[free] * (&scale / &row[pc]));
                }
            }
            v[free] = scale;
            make_primitive(&mut v);
            basis.push(v);
        }
        basis
    }
}

/// Rank of an integer matrix.
pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
