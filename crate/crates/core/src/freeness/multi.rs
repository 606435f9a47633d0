//! Multiarrangements and Ziegler restrictions.

use crate::arrangement::{Arrangement, ArrangementError, Hyperplane};
use serde::{Deserialize, Serialize};

/// A central arrangement with a multiplicity on each hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiarrangement {
    arrangement: Arrangement,
    mult: Vec<usize>,
}

impl Multiarrangement {
    pub fn new(arrangement: Arrangement, mult: Vec<usize>) -> Result<Self, ArrangementError> {
        if !arrangement.is_central() {
            return Err(ArrangementError::NotCentral);
        }
        if mult.len() != arrangement.len() {
            return Err(ArrangementError::DimensionMismatch { dim: arrangement.len(), got: mult.len() });
        }
        Ok(Multiarrangement { arrangement, mult })
    }

    /// Every hyperplane with multiplicity one.
    pub fn simple(arrangement: Arrangement) -> Result<Self, ArrangementError> {
        let n = arrangement.len();
        Self::new(arrangement, vec![1; n])
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn multiplicity_of(&self, h: &Hyperplane) -> usize {
        self.arrangement.index_of(h).map_or(0, |i| self.mult[i])
    }

    /// `Σ m(H)`, the degree of `Q(A, m)`.
    pub fn total(&self) -> usize {
        self.mult.iter().sum()
    }

    /// Indices of hyperplanes with multiplicity zero.
    pub fn zero_multiplicities(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&i| self.mult[i] == 0).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }
}

/// `(A^H, m^H)` with `m^H(X) = |A_X| − 1`, written in the free coordinates of `H`.
pub fn ziegler_restriction(cone: &Arrangement, h: usize) -> Result<Multiarrangement, ArrangementError> {
    if !cone.is_central() {
        return Err(ArrangementError::NotCentral);
    }
    let flat = cone.hyperplane_flat(h)?;
    let mut hs: Vec<Hyperplane> = Vec::new();
    let mut mult: Vec<usize> = Vec::new();
    for (i, k) in cone.hyperplanes().iter().enumerate() {
        if i == h {
            continue;
        }
        let r = flat.restrict(k).expect("distinct central hyperplanes meet properly");
        match hs.iter().position(|x| *x == r) {
            Some(pos) => mult[pos] += 1,
            None => {
                hs.push(r);
                mult.push(1);
            }
        }
    }
    let arrangement = Arrangement::new(flat.dim(), hs)?;
    Multiarrangement::new(arrangement, mult)
}
