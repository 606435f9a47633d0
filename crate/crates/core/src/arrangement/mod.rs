//! Integral affine hyperplane arrangements over ℚ.

mod bijection;
mod finite_field;
mod flat;
mod named;
mod poset;

pub use bijection::{verify_ceo_bijection, BijectionReport};
pub use finite_field::{
    admissibility_bound, char_poly_ff, char_poly_ff_from, count_complement, is_prime, next_prime, MAX_PRIME_WINDOWS,
};
pub use flat::{Flat, Intersection};
pub use named::{catalan, coxeter, empty, ish, shi, shi_ish_arrangement};
pub use poset::{codim3_flats_along, HyperplaneSet, IntersectionPoset, MAX_HYPERPLANES};

use crate::digraph::{DigraphError, VertexWeightedDigraph};
use crate::poly::IntegerPolynomial;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("hyperplane has all coefficients zero")]
    ZeroNormal,
    #[error("hyperplane has {got} coefficients, ambient dimension is {dim}")]
    DimensionMismatch { dim: usize, got: usize },
    #[error("prime {p} is not above the admissibility bound {bound}")]
    PrimeTooSmall { p: u64, bound: u64 },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("interpolated polynomial disagrees with the count at validation prime {p}")]
    InconsistentInterpolation { p: u64 },
    #[error("flat is not an element of the intersection poset")]
    FlatNotInPoset,
    #[error("hyperplane index {index} out of range for {len} hyperplanes")]
    NoSuchHyperplane { index: usize, len: usize },
    #[error("arrangement has {len} hyperplanes; at most {max} are supported")]
    TooManyHyperplanes { len: usize, max: usize },
    #[error("condition (C) fails at vertex {v}")]
    ConditionCViolated { v: usize },
    #[error("arrangement is not central")]
    NotCentral,
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// The hyperplane `Σ coeffs[i]·x_i = constant`, stored in canonical form:
/// `gcd(coeffs, constant) = 1` and the first nonzero coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "HyperplaneJson")]
pub struct Hyperplane {
    coeffs: Vec<i64>,
    constant: i64,
}

#[derive(Deserialize)]
struct HyperplaneJson {
    coeffs: Vec<i64>,
    constant: i64,
}

impl TryFrom<HyperplaneJson> for Hyperplane {
    type Error = ArrangementError;
    fn try_from(j: HyperplaneJson) -> Result<Self, ArrangementError> {
        Hyperplane::new(j.coeffs, j.constant)
    }
}

impl Hyperplane {
    pub fn new(mut coeffs: Vec<i64>, mut constant: i64) -> Result<Self, ArrangementError> {
        let Some(&lead) = coeffs.iter().find(|&&c| c != 0) else {
            return Err(ArrangementError::ZeroNormal);
        };
        let g = coeffs.iter().fold(constant.abs(), |g, c| g.gcd(c));
        let g = if lead < 0 { -g } else { g };
        for c in coeffs.iter_mut() {
            *c /= g;
        }
        constant /= g;
        Ok(Hyperplane { coeffs, constant })
    }

    /// `x_i − x_j = c` in dimension `dim` (1-based indices).
    pub fn difference(dim: usize, i: usize, j: usize, c: i64) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] = 1;
        coeffs[j - 1] = -1;
        Self::new(coeffs, c).expect("i ≠ j")
    }

    /// `x_i = c` in dimension `dim` (1-based index).
    pub fn coordinate(dim: usize, i: usize, c: i64) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] = 1;
        Self::new(coeffs, c).expect("nonzero")
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_linear(&self) -> bool {
        self.constant == 0
    }

    /// `a·x − c·z = 0` in one more dimension.
    pub fn homogenize(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(-self.constant);
        Self::new(coeffs, 0).expect("nonzero")
    }

    /// Embeds into `ℚ^dim` starting at coordinate `offset` (0-based).
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[offset..offset + self.dim()].copy_from_slice(&self.coeffs);
        Self::new(coeffs, self.constant).expect("nonzero")
    }

    /// Augmented row `[coeffs | constant]`.
    pub fn row(&self) -> Vec<i64> {
        let mut r = self.coeffs.clone();
        r.push(self.constant);
        r
    }

    /// `|constant| + Σ|coeffs|`.
    pub fn height(&self) -> u64 {
        self.constant.unsigned_abs() + self.coeffs.iter().map(|c| c.unsigned_abs()).sum::<u64>()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let var = |i: usize| format!("x{}", i + 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{}", var(i))?;
        }
        write!(f, " = {}", self.constant)
    }
}

/// A finite set of hyperplanes in `ℚ^dim`, in a fixed order. When the
/// arrangement is a cone, `infinity` records the index of `z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArrangementJson", into = "ArrangementJson")]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    infinity: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cone_infinity_index: Option<usize>,
}

impl TryFrom<ArrangementJson> for Arrangement {
    type Error = ArrangementError;
    fn try_from(j: ArrangementJson) -> Result<Self, ArrangementError> {
        let mut a = Arrangement::new(j.dim, j.hyperplanes)?;
        if let Some(i) = j.cone_infinity_index {
            if i >= a.len() {
                return Err(ArrangementError::NoSuchHyperplane { index: i, len: a.len() });
            }
            a.infinity = Some(i);
        }
        Ok(a)
    }
}

impl From<Arrangement> for ArrangementJson {
    fn from(a: Arrangement) -> Self {
        ArrangementJson { dim: a.dim, hyperplanes: a.hyperplanes, cone_infinity_index: a.infinity }
    }
}

impl Arrangement {
    /// Builds an arrangement, dropping repeated hyperplanes (first occurrence wins).
    pub fn new(dim: usize, hyperplanes: impl IntoIterator<Item = Hyperplane>) -> Result<Self, ArrangementError> {
        let mut seen = HashSet::new();
        let mut hs = Vec::new();
        for h in hyperplanes {
            if h.dim() != dim {
                return Err(ArrangementError::DimensionMismatch { dim, got: h.dim() });
            }
            if seen.insert(h.clone()) {
                hs.push(h);
            }
        }
        Ok(Arrangement { dim, hyperplanes: hs, infinity: None })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_linear)
    }

    pub fn infinity(&self) -> Option<usize> {
        self.infinity
    }

    pub fn index_of(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.iter().position(|k| k == h)
    }

    /// Cone: homogenize with a new last coordinate `z` and adjoin `z = 0`.
    pub fn cone(&self) -> Arrangement {
        let dim = self.dim + 1;
        let mut hs: Vec<Hyperplane> = self.hyperplanes.iter().map(Hyperplane::homogenize).collect();
        hs.push(Hyperplane::coordinate(dim, dim, 0));
        let mut a = Arrangement::new(dim, hs).expect("homogenization preserves dimension");
        a.infinity = a.index_of(&Hyperplane::coordinate(dim, dim, 0));
        a
    }

    /// `A₁ × A₂` on disjoint coordinate blocks.
    pub fn product(&self, other: &Arrangement) -> Arrangement {
        let dim = self.dim + other.dim;
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| h.embed(dim, 0))
            .chain(other.hyperplanes.iter().map(|h| h.embed(dim, self.dim)));
        Arrangement::new(dim, hs).expect("embedding preserves dimension")
    }

    /// Removes the hyperplane at `index`.
    pub fn deletion(&self, index: usize) -> Result<Arrangement, ArrangementError> {
        if index >= self.len() {
            return Err(ArrangementError::NoSuchHyperplane { index, len: self.len() });
        }
        let mut hs = self.hyperplanes.clone();
        hs.remove(index);
        let infinity = match self.infinity {
            Some(i) if i == index => None,
            Some(i) if i > index => Some(i - 1),
            other => other,
        };
        Ok(Arrangement { dim: self.dim, hyperplanes: hs, infinity })
    }

    /// Sub-arrangement on the given indices, in the given order.
    pub fn subarrangement(&self, indices: &[usize]) -> Arrangement {
        let hs: Vec<Hyperplane> = indices.iter().map(|&i| self.hyperplanes[i].clone()).collect();
        let infinity = self.infinity.and_then(|inf| indices.iter().position(|&i| i == inf));
        Arrangement { dim: self.dim, hyperplanes: hs, infinity }
    }

    pub fn intersection_poset(&self) -> Result<IntersectionPoset, ArrangementError> {
        IntersectionPoset::new(self)
    }

    /// Characteristic polynomial via the Möbius function of the intersection poset.
    pub fn char_poly(&self) -> Result<IntegerPolynomial, ArrangementError> {
        Ok(self.intersection_poset()?.char_poly())
    }

    /// Rank of the linear span of the normals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.hyperplanes.iter().map(|h| h.coeffs.clone()).collect();
        crate::linalg::Echelon::from_i64(&rows, self.dim).rank()
    }

    /// Localization `A_X`: the hyperplanes containing `X`, in ambient coordinates.
    pub fn localization(&self, x: &Flat) -> Result<Arrangement, ArrangementError> {
        let members = self.members_checked(x)?;
        Ok(self.subarrangement(&members))
    }

    /// Restriction `A^X = {K ∩ X ≠ ∅ : K ∉ A_X}`, written in the coordinates of
    /// `X` given by its non-pivot variables in increasing index order.
    pub fn restriction(&self, x: &Flat) -> Result<Arrangement, ArrangementError> {
        let members = self.members_checked(x)?;
        let hs = (0..self.len())
            .filter(|i| !members.contains(i))
            .filter_map(|i| x.restrict(&self.hyperplanes[i]));
        Arrangement::new(x.dim(), hs)
    }

    /// Indices of hyperplanes containing `x`, after checking `x ∈ L(A)`.
    pub fn members_checked(&self, x: &Flat) -> Result<Vec<usize>, ArrangementError> {
        if x.ambient_dim() != self.dim {
            return Err(ArrangementError::FlatNotInPoset);
        }
        let members: Vec<usize> = (0..self.len()).filter(|&i| x.lies_in(&self.hyperplanes[i])).collect();
        let spanned = Flat::from_hyperplanes(self.dim, members.iter().map(|&i| &self.hyperplanes[i]));
        if spanned.as_ref() != Some(x) {
            return Err(ArrangementError::FlatNotInPoset);
        }
        Ok(members)
    }

    /// The flat cut out by a single member hyperplane.
    pub fn hyperplane_flat(&self, index: usize) -> Result<Flat, ArrangementError> {
        let h = self
            .hyperplanes
            .get(index)
            .ok_or(ArrangementError::NoSuchHyperplane { index, len: self.len() })?;
        Ok(Flat::from_hyperplanes(self.dim, [h]).expect("a hyperplane is nonempty"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("arrangement serializes")
    }
}

/// Where a hyperplane of a ψ-digraphical arrangement (or its cone) comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    /// `x_i − x_j = 0`, `i < j`.
    Braid(usize, usize),
    /// `x_i − x_j = 1` for the arc `(i, j)`.
    Arc(usize, usize),
    /// `x_i = c` for `c ∈ ψ(i)`.
    Weight(usize, i64),
    /// `z = 0` of a cone.
    Infinity,
}

/// `A(G, ψ)` together with the origin of every hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigraphArrangement {
    pub arrangement: Arrangement,
    pub origins: Vec<Origin>,
}

impl DigraphArrangement {
    pub fn new(g: &VertexWeightedDigraph) -> Self {
        let n = g.n();
        let mut hs = Vec::new();
        let mut origins = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                hs.push(Hyperplane::difference(n, i, j, 0));
                origins.push(Origin::Braid(i, j));
            }
        }
        for &(i, j) in g.arcs() {
            hs.push(Hyperplane::difference(n, i, j, 1));
            origins.push(Origin::Arc(i, j));
        }
        for i in 1..=n {
            for c in g.weight(i).values() {
                hs.push(Hyperplane::coordinate(n, i, c));
                origins.push(Origin::Weight(i, c));
            }
        }
        let arrangement = Arrangement::new(n, hs).expect("dimensions agree");
        debug_assert_eq!(arrangement.len(), origins.len(), "digraph hyperplanes are distinct");
        DigraphArrangement { arrangement, origins }
    }

    /// Cone, with `Origin::Infinity` appended for `z = 0`.
    pub fn cone(&self) -> DigraphArrangement {
        let arrangement = self.arrangement.cone();
        let mut origins = self.origins.clone();
        origins.push(Origin::Infinity);
        debug_assert_eq!(arrangement.infinity(), Some(origins.len() - 1));
        DigraphArrangement { arrangement, origins }
    }
}

/// `A(G, ψ)`: braid hyperplanes, `x_i − x_j = 1` per arc, `x_i = c` per weight value.
pub fn from_digraph(g: &VertexWeightedDigraph) -> Arrangement {
    DigraphArrangement::new(g).arrangement
}
