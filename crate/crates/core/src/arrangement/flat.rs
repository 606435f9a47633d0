//! Affine subspaces stored as canonical reduced row-echelon systems.

use super::Hyperplane;
use num_integer::Integer;

/// A nonempty affine subspace of `ℚ^dim`, given by the reduced row-echelon
/// form of its defining equations. Each row is the augmented vector
/// `[coeffs | constant]`, primitive over ℤ, with a positive pivot; rows are
/// ordered by pivot column. This form is unique, so equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    dim: usize,
    rows: Vec<Vec<i64>>,
}

/// Result of intersecting a flat with a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    /// The flat already lies in the hyperplane.
    Contained,
    /// The intersection is empty.
    Empty,
    /// A flat of one higher rank.
    Proper(Flat),
}

fn primitive(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return;
    }
    let lead = row.iter().find(|&&x| x != 0).copied().unwrap_or(1);
    let g = if lead < 0 { -g } else { g };
    if g != 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

fn combine(target: &mut [i128], target_scale: i128, source: &[i64], source_scale: i128) {
    for (t, &s) in target.iter_mut().zip(source) {
        *t = t
            .checked_mul(target_scale)
            .and_then(|x| x.checked_sub((s as i128).checked_mul(source_scale)?))
            .expect("flat coefficients exceed i128");
    }
    primitive(target);
}

fn narrow(row: Vec<i128>) -> Vec<i64> {
    row.into_iter()
        .map(|x| i64::try_from(x).expect("flat coefficients exceed i64"))
        .collect()
}

impl Flat {
    /// The whole space `ℚ^dim`.
    pub fn ambient(dim: usize) -> Self {
        Flat { dim, rows: Vec::new() }
    }

    /// Intersection of the given hyperplanes, or `None` if it is empty.
    pub fn from_hyperplanes<'a>(dim: usize, hs: impl IntoIterator<Item = &'a Hyperplane>) -> Option<Self> {
        let mut x = Flat::ambient(dim);
        for h in hs {
            match x.intersect(h) {
                Intersection::Contained => {}
                Intersection::Empty => return None,
                Intersection::Proper(y) => x = y,
            }
        }
        Some(x)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Codimension.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the flat itself.
    pub fn dim(&self) -> usize {
        self.dim - self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn pivot(row: &[i64]) -> usize {
        row.iter().position(|&x| x != 0).expect("rows are nonzero")
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| Self::pivot(r)).collect()
    }

    /// Non-pivot coordinates in increasing order; these parameterize the flat.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.dim).filter(|c| !pivots.contains(c)).collect()
    }

    fn reduce(&self, h: &Hyperplane) -> Vec<i128> {
        let mut r: Vec<i128> = h.row().into_iter().map(i128::from).collect();
        for row in &self.rows {
            let pc = Self::pivot(row);
            if r[pc] == 0 {
                continue;
            }
            let p = row[pc] as i128;
            let f = r[pc];
            let g = p.gcd(&f);
            combine(&mut r, p / g, row, f / g);
        }
        r
    }

    /// True iff the flat is contained in `h`.
    pub fn lies_in(&self, h: &Hyperplane) -> bool {
        self.reduce(h).iter().all(|&x| x == 0)
    }

    pub fn intersect(&self, h: &Hyperplane) -> Intersection {
        assert_eq!(h.dim(), self.dim, "hyperplane dimension mismatch");
        let r = self.reduce(h);
        let Some(pc) = r[..self.dim].iter().position(|&x| x != 0) else {
            return if r[self.dim] == 0 { Intersection::Contained } else { Intersection::Empty };
        };
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        for row in &self.rows {
            if row[pc] == 0 {
                rows.push(row.clone());
                continue;
            }
            let mut acc: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            let g = r[pc].gcd(&(row[pc] as i128));
            let scale_self = r[pc] / g;
            let scale_new = row[pc] as i128 / g;
            for (t, &s) in acc.iter_mut().zip(&r) {
                *t = t
                    .checked_mul(scale_self)
                    .and_then(|x| x.checked_sub(s.checked_mul(scale_new)?))
                    .expect("flat coefficients exceed i128");
            }
            primitive(&mut acc);
            rows.push(narrow(acc));
        }
        let new_row = narrow(r);
        let at = rows.partition_point(|row| Self::pivot(row) < pc);
        rows.insert(at, new_row);
        Intersection::Proper(Flat { dim: self.dim, rows })
    }

    /// `K ∩ X` written in the free coordinates of `X`; `None` when `X ⊆ K` or
    /// `K ∩ X = ∅`.
    pub fn restrict(&self, k: &Hyperplane) -> Option<Hyperplane> {
        let free = self.free_coordinates();
        let pivots = self.pivots();
        let lcm = self.rows.iter().zip(&pivots).fold(1i128, |l, (row, &pc)| l.lcm(&(row[pc] as i128)));
        let a = k.coeffs();
        let mut coeffs: Vec<i128> = free.iter().map(|&f| lcm * a[f] as i128).collect();
        let mut constant = lcm * k.constant() as i128;
        for (row, &pc) in self.rows.iter().zip(&pivots) {
            if a[pc] == 0 {
                continue;
            }
            let factor = a[pc] as i128 * (lcm / row[pc] as i128);
            for (slot, &f) in coeffs.iter_mut().zip(&free) {
                *slot -= factor * row[f] as i128;
            }
            constant -= factor * row[self.dim] as i128;
        }
        if coeffs.iter().all(|&c| c == 0) {
            return None;
        }
        let mut full = coeffs;
        full.push(constant);
        primitive(&mut full);
        let constant = full.pop().expect("nonempty");
        Hyperplane::new(narrow(full), i64::try_from(constant).expect("fits i64")).ok()
    }

    /// A point of the flat (free coordinates set to zero), as rationals `(num, den)`.
    pub fn base_point(&self) -> Vec<(i64, i64)> {
        let mut pt = vec![(0i64, 1i64); self.dim];
        for row in &self.rows {
            let pc = Self::pivot(row);
            let (n, d) = (row[self.dim], row[pc]);
            let g = n.gcd(&d).max(1);
            pt[pc] = (n / g, d / g);
        }
        pt
    }
}
