//! Intersection posets, Möbius functions and characteristic polynomials.

use super::{Arrangement, ArrangementError, Flat, Intersection};
use crate::poly::IntegerPolynomial;
use std::collections::HashMap;

/// Hyperplane index sets are stored as 128-bit masks.
pub const MAX_HYPERPLANES: usize = 128;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneSet(u128);

impl HyperplaneSet {
    pub fn empty() -> Self {
        HyperplaneSet(0)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty();
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(&self, other: &Self) -> Self {
        HyperplaneSet(self.0 | other.0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        HyperplaneSet(self.0 & !other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..MAX_HYPERPLANES).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// `L(A)` ordered by reverse inclusion, with ranks and Möbius values.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    dim: usize,
    hyperplane_count: usize,
    flats: Vec<Flat>,
    members: Vec<HyperplaneSet>,
    levels: Vec<Vec<usize>>,
    mobius: Vec<i64>,
    index: HashMap<Flat, usize>,
}

impl IntersectionPoset {
    pub fn new(a: &Arrangement) -> Result<Self, ArrangementError> {
        Self::build(a, usize::MAX)
    }

    /// Only the flats of rank `≤ max_rank`; Möbius values are exact on them.
    pub fn truncated(a: &Arrangement, max_rank: usize) -> Result<Self, ArrangementError> {
        Self::build(a, max_rank)
    }

    fn build(a: &Arrangement, max_rank: usize) -> Result<Self, ArrangementError> {
        if a.len() > MAX_HYPERPLANES {
            return Err(ArrangementError::TooManyHyperplanes { len: a.len(), max: MAX_HYPERPLANES });
        }
        let hs = a.hyperplanes();
        let mut flats = vec![Flat::ambient(a.dim())];
        let mut members = vec![HyperplaneSet::empty()];
        let mut index = HashMap::from([(Flat::ambient(a.dim()), 0usize)]);
        let mut levels = vec![vec![0usize]];
        while levels.len() <= max_rank {
            let mut next = Vec::new();
            for &x in levels.last().expect("nonempty") {
                let mx = members[x];
                for (i, h) in hs.iter().enumerate() {
                    if mx.contains(i) {
                        continue;
                    }
                    let Intersection::Proper(y) = flats[x].intersect(h) else { continue };
                    if index.contains_key(&y) {
                        continue;
                    }
                    let mut my = mx;
                    for (j, k) in hs.iter().enumerate() {
                        if !my.contains(j) && (j == i || y.lies_in(k)) {
                            my.insert(j);
                        }
                    }
                    index.insert(y.clone(), flats.len());
                    next.push(flats.len());
                    flats.push(y);
                    members.push(my);
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        let mut poset = IntersectionPoset {
            dim: a.dim(),
            hyperplane_count: a.len(),
            flats,
            members,
            levels,
            mobius: Vec::new(),
            index,
        };
        poset.mobius = poset.compute_mobius();
        Ok(poset)
    }

    fn compute_mobius(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.flats.len()];
        mu[0] = 1;
        for r in 1..self.levels.len() {
            for &x in &self.levels[r] {
                let mx = self.members[x];
                let mut s = 0i64;
                for lower in &self.levels[..r] {
                    for &y in lower {
                        if self.members[y].is_subset(&mx) {
                            s += mu[y];
                        }
                    }
                }
                mu[x] = -s;
            }
        }
        mu
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplane_count(&self) -> usize {
        self.hyperplane_count
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Rank of the arrangement: the largest rank of a flat.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn flat(&self, id: usize) -> &Flat {
        &self.flats[id]
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn members(&self, id: usize) -> HyperplaneSet {
        self.members[id]
    }

    pub fn mobius(&self, id: usize) -> i64 {
        self.mobius[id]
    }

    pub fn flat_rank(&self, id: usize) -> usize {
        self.flats[id].rank()
    }

    /// Flat ids of the given rank.
    pub fn level(&self, rank: usize) -> &[usize] {
        self.levels.get(rank).map_or(&[], Vec::as_slice)
    }

    pub fn id_of(&self, x: &Flat) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `χ(t) = Σ μ(X) t^{dim X}`.
    pub fn char_poly(&self) -> IntegerPolynomial {
        let mut c = vec![0i64; self.dim + 1];
        for (x, f) in self.flats.iter().enumerate() {
            c[f.dim()] += self.mobius[x];
        }
        IntegerPolynomial::new(c)
    }

    /// Number of flats of each rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Id of the flat spanned by the given hyperplanes, if it is nonempty.
    pub fn join_of(&self, hs: &[usize]) -> Option<usize> {
        // The smallest flat whose members contain all of `hs` and whose rank is
        // minimal is their intersection.
        let want = HyperplaneSet::from_indices(hs.iter().copied());
        self.levels
            .iter()
            .flatten()
            .copied()
            .find(|&x| want.is_subset(&self.members[x]))
    }
}

/// Codimension-3 flats of a central arrangement lying inside the hyperplane
/// at `infinity`.
pub fn codim3_flats_along(poset: &IntersectionPoset, infinity: usize) -> Vec<usize> {
    poset
        .level(3)
        .iter()
        .copied()
        .filter(|&x| poset.members(x).contains(infinity))
        .collect()
}
