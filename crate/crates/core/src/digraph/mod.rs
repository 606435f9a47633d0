//! Vertex-weighted digraphs `(G, ψ)` on the vertex set `1..=n`, the coking and
//! king elimination operations, and the weight conditions attached to them.

mod family;
mod iso;

pub use family::{catalan_c, catalan_d, complete, edgeless, shi_ish, transitive_tournament};
pub use iso::{digraph_isomorphic, ISOMORPHISM_LIMIT};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {v} is not a coking")]
    NotACoking { v: usize },
    #[error("vertex {v} is not a king")]
    NotAKing { v: usize },
    #[error("vertex {v} has empty weight; its endpoints are undefined")]
    EmptyWeight { v: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("interval [{lo}, {hi}] has lo > hi")]
    InvalidInterval { lo: i64, hi: i64 },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("digraph on {n} vertices exceeds the enumeration bound of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex set {support:?} has arcs leaving it")]
    SupportNotClosed { support: Vec<usize> },
    #[error("malformed digraph JSON: {0}")]
    Malformed(String),
}

/// A contiguous integer interval `[lo, hi]`, or the empty weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum WeightInterval {
    #[default]
    Empty,
    Closed { lo: i64, hi: i64 },
}

impl WeightInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self, DigraphError> {
        if lo > hi {
            return Err(DigraphError::InvalidInterval { lo, hi });
        }
        Ok(WeightInterval::Closed { lo, hi })
    }

    /// Like [`WeightInterval::new`] but `lo > hi` yields `Empty`.
    pub fn span(lo: i64, hi: i64) -> Self {
        if lo > hi {
            WeightInterval::Empty
        } else {
            WeightInterval::Closed { lo, hi }
        }
    }

    pub fn bounds(&self) -> Option<(i64, i64)> {
        match *self {
            WeightInterval::Empty => None,
            WeightInterval::Closed { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, WeightInterval::Empty)
    }

    pub fn size(&self) -> usize {
        self.bounds().map_or(0, |(lo, hi)| (hi - lo + 1) as usize)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.bounds().is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        let (lo, hi) = self.bounds().unwrap_or((1, 0));
        lo..=hi
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        match (self.bounds(), other.bounds()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        match (self.bounds(), other.bounds()) {
            (Some((a, b)), Some((c, d))) => Self::span(a.max(c), b.min(d)),
            _ => WeightInterval::Empty,
        }
    }

    /// `ψ + s`.
    pub fn shift(&self, s: i64) -> Self {
        match *self {
            WeightInterval::Empty => WeightInterval::Empty,
            WeightInterval::Closed { lo, hi } => WeightInterval::Closed { lo: lo + s, hi: hi + s },
        }
    }

    /// `[a, b] ↦ [−b, −a]`.
    pub fn negate(&self) -> Self {
        match *self {
            WeightInterval::Empty => WeightInterval::Empty,
            WeightInterval::Closed { lo, hi } => WeightInterval::Closed { lo: -hi, hi: -lo },
        }
    }
}

impl fmt::Display for WeightInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightInterval::Empty => write!(f, "∅"),
            WeightInterval::Closed { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

impl Serialize for WeightInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.bounds().map(|(lo, hi)| [lo, hi]).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Option::<Vec<i64>>::deserialize(d)? {
            None => Ok(WeightInterval::Empty),
            Some(v) if v.len() == 2 => WeightInterval::new(v[0], v[1]).map_err(serde::de::Error::custom),
            Some(v) => Err(serde::de::Error::custom(format!(
                "weight must be [lo, hi] or null, got {} values (only intervals are supported)",
                v.len()
            ))),
        }
    }
}

/// The three weight conditions attached to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    C,
    K,
    Z,
}

/// Outcome of [`VertexWeightedDigraph::check_condition`]; `n0` is only
/// populated for [`Condition::Z`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    pub n0: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DigraphJson", into = "DigraphJson")]
pub struct VertexWeightedDigraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    weights: Vec<WeightInterval>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default)]
    weights: BTreeMap<String, WeightInterval>,
}

impl TryFrom<DigraphJson> for VertexWeightedDigraph {
    type Error = DigraphError;

    fn try_from(j: DigraphJson) -> Result<Self, DigraphError> {
        let mut weights = vec![WeightInterval::Empty; j.n];
        for (key, w) in j.weights {
            let v: usize = key
                .trim()
                .parse()
                .map_err(|_| DigraphError::Malformed(format!("weight key {key:?} is not a vertex")))?;
            if v == 0 || v > j.n {
                return Err(DigraphError::VertexOutOfRange { v, n: j.n });
            }
            weights[v - 1] = w;
        }
        VertexWeightedDigraph::new(j.n, j.arcs.into_iter().map(|[a, b]| (a, b)), weights)
    }
}

impl From<VertexWeightedDigraph> for DigraphJson {
    fn from(g: VertexWeightedDigraph) -> Self {
        DigraphJson {
            n: g.n,
            arcs: g.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            weights: (1..=g.n).map(|v| (v.to_string(), g.weight(v))).collect(),
        }
    }
}

impl VertexWeightedDigraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        weights: Vec<WeightInterval>,
    ) -> Result<Self, DigraphError> {
        if weights.len() != n {
            return Err(DigraphError::Malformed(format!("{} weights for {n} vertices", weights.len())));
        }
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(DigraphError::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(DigraphError::SelfLoop { v: a });
            }
            set.insert((a, b));
        }
        Ok(VertexWeightedDigraph { n, arcs: set, weights })
    }

    /// Every vertex gets the same weight.
    pub fn uniform(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        weight: WeightInterval,
    ) -> Result<Self, DigraphError> {
        Self::new(n, arcs, vec![weight; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn weight(&self, v: usize) -> WeightInterval {
        self.weights[v - 1]
    }

    pub fn weights(&self) -> &[WeightInterval] {
        &self.weights
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn with_weights(&self, weights: Vec<WeightInterval>) -> Result<Self, DigraphError> {
        Self::new(self.n, self.arcs.iter().copied(), weights)
    }

    fn check_vertex(&self, v: usize) -> Result<(), DigraphError> {
        if v == 0 || v > self.n {
            return Err(DigraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, b)| b == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(a, _)| a == v).count()
    }

    pub fn is_king(&self, v: usize) -> bool {
        self.vertices().all(|u| u == v || self.has_arc(v, u))
    }

    pub fn is_coking(&self, v: usize) -> bool {
        self.vertices().all(|u| u == v || self.has_arc(u, v))
    }

    pub fn kings(&self) -> BTreeSet<usize> {
        self.vertices().filter(|&v| self.is_king(v)).collect()
    }

    pub fn cokings(&self) -> BTreeSet<usize> {
        self.vertices().filter(|&v| self.is_coking(v)).collect()
    }

    fn require_nonempty_weights(&self) -> Result<(), DigraphError> {
        match self.vertices().find(|&v| self.weight(v).is_empty()) {
            Some(v) => Err(DigraphError::EmptyWeight { v }),
            None => Ok(()),
        }
    }

    /// Coking elimination at `v`: drop the arcs into `v` and extend every other
    /// weight one step to the left.
    pub fn ceo(&self, v: usize) -> Result<Self, DigraphError> {
        self.check_vertex(v)?;
        if !self.is_coking(v) {
            return Err(DigraphError::NotACoking { v });
        }
        self.require_nonempty_weights()?;
        let arcs = self.arcs.iter().copied().filter(|&(_, b)| b != v);
        let weights = self
            .vertices()
            .map(|i| {
                let w = self.weight(i);
                if i == v {
                    w
                } else {
                    let (lo, hi) = w.bounds().expect("checked nonempty");
                    WeightInterval::Closed { lo: lo - 1, hi }
                }
            })
            .collect();
        Self::new(self.n, arcs, weights)
    }

    /// King elimination at `v`: drop the arcs out of `v` and extend every other
    /// weight one step to the right.
    pub fn keo(&self, v: usize) -> Result<Self, DigraphError> {
        self.check_vertex(v)?;
        if !self.is_king(v) {
            return Err(DigraphError::NotAKing { v });
        }
        self.require_nonempty_weights()?;
        let arcs = self.arcs.iter().copied().filter(|&(a, _)| a != v);
        let weights = self
            .vertices()
            .map(|i| {
                let w = self.weight(i);
                if i == v {
                    w
                } else {
                    let (lo, hi) = w.bounds().expect("checked nonempty");
                    WeightInterval::Closed { lo, hi: hi + 1 }
                }
            })
            .collect();
        Self::new(self.n, arcs, weights)
    }

    /// Reverses every arc and negates every weight.
    pub fn converse(&self) -> Self {
        let arcs = self.arcs.iter().map(|&(a, b)| (b, a));
        let weights = self.weights.iter().map(WeightInterval::negate).collect();
        Self::new(self.n, arcs, weights).expect("converse of a valid digraph is valid")
    }

    /// Induced sub-digraph on `w`, relabelled `1..=|w|` in increasing order of
    /// the original labels (`w[k]` becomes vertex `k + 1` after sorting).
    pub fn induced(&self, w: &[usize]) -> Result<Self, DigraphError> {
        let mut sorted: Vec<usize> = w.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let pos: BTreeMap<usize, usize> = sorted.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
        let arcs = self
            .arcs
            .iter()
            .filter_map(|(a, b)| Some((*pos.get(a)?, *pos.get(b)?)))
            .collect::<Vec<_>>();
        let weights = sorted.iter().map(|&v| self.weight(v)).collect();
        Self::new(sorted.len(), arcs, weights)
    }

    /// True iff `v` has no incident arcs and `ψ(v) ⊆ ψ(i)` for every vertex `i`.
    pub fn isolated_min_weight(&self, v: usize) -> bool {
        if v == 0 || v > self.n {
            return false;
        }
        let isolated = self.arcs.iter().all(|&(a, b)| a != v && b != v);
        isolated && self.vertices().all(|i| self.weight(v).is_subset(&self.weight(i)))
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.arcs.iter().all(|&(a, b)| a != v && b != v)
    }

    /// Vertices with at least one incident arc, together with `v`.
    pub fn active_support(&self, v: usize) -> Vec<usize> {
        self.vertices().filter(|&u| u == v || !self.is_isolated(u)).collect()
    }

    fn splice(&self, support: &[usize], sub: &Self) -> Result<Self, DigraphError> {
        let mut sorted = support.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut weights = self.weights.clone();
        for (k, &v) in sorted.iter().enumerate() {
            weights[v - 1] = sub.weight(k + 1);
        }
        let inside: BTreeSet<usize> = sorted.iter().copied().collect();
        let mut arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .copied()
            .filter(|(a, b)| !inside.contains(a) && !inside.contains(b))
            .collect();
        arcs.extend(sub.arcs.iter().map(|&(a, b)| (sorted[a - 1], sorted[b - 1])));
        Self::new(self.n, arcs, weights)
    }

    fn check_closed(&self, support: &[usize]) -> Result<Vec<usize>, DigraphError> {
        let mut sorted = support.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let inside: BTreeSet<usize> = sorted.iter().copied().collect();
        if self.arcs.iter().any(|(a, b)| inside.contains(a) != inside.contains(b)) {
            return Err(DigraphError::SupportNotClosed { support: sorted });
        }
        Ok(sorted)
    }

    /// Applies the CEO at `v` to the induced sub-digraph on `support` and puts
    /// the result back, leaving all other vertices untouched. No arc may join
    /// `support` to its complement.
    pub fn ceo_within(&self, support: &[usize], v: usize) -> Result<Self, DigraphError> {
        let sorted = self.check_closed(support)?;
        let local = sorted
            .iter()
            .position(|&u| u == v)
            .ok_or_else(|| DigraphError::ParamOutOfRange(format!("vertex {v} not in {sorted:?}")))?;
        let sub = self.induced(&sorted)?.ceo(local + 1).map_err(|e| relabel_error(e, &sorted))?;
        self.splice(&sorted, &sub)
    }

    /// KEO counterpart of [`VertexWeightedDigraph::ceo_within`].
    pub fn keo_within(&self, support: &[usize], v: usize) -> Result<Self, DigraphError> {
        let sorted = self.check_closed(support)?;
        let local = sorted
            .iter()
            .position(|&u| u == v)
            .ok_or_else(|| DigraphError::ParamOutOfRange(format!("vertex {v} not in {sorted:?}")))?;
        let sub = self.induced(&sorted)?.keo(local + 1).map_err(|e| relabel_error(e, &sorted))?;
        self.splice(&sorted, &sub)
    }

    pub fn condition_c(&self, v: usize) -> bool {
        self.zero_everywhere()
            && self.vertices().filter(|&i| i != v).all(|i| {
                let (a, b) = self.weight(i).bounds().expect("nonempty since 0 ∈ ψ(i)");
                WeightInterval::span(a, b - 1).is_subset(&self.weight(v))
            })
    }

    pub fn condition_k(&self, v: usize) -> bool {
        self.zero_everywhere()
            && self.vertices().filter(|&i| i != v).all(|i| {
                let (a, b) = self.weight(i).bounds().expect("nonempty since 0 ∈ ψ(i)");
                WeightInterval::span(a + 1, b).is_subset(&self.weight(v))
            })
    }

    /// All `n0 ≥ 0` with `n0+2 ≤ |ψ(v)| ≤ n0+3` and `n0+1 ≤ |ψ(i)| ≤ n0+3` for `i ≠ v`.
    pub fn condition_z(&self, v: usize) -> Vec<usize> {
        let sv = self.weight(v).size();
        (0..=sv)
            .filter(|&n0| {
                n0 + 2 <= sv
                    && sv <= n0 + 3
                    && self.vertices().filter(|&i| i != v).all(|i| {
                        let s = self.weight(i).size();
                        n0 + 1 <= s && s <= n0 + 3
                    })
            })
            .collect()
    }

    pub fn check_condition(&self, v: usize, which: Condition) -> Result<ConditionOutcome, DigraphError> {
        self.check_vertex(v)?;
        Ok(match which {
            Condition::C => ConditionOutcome { holds: self.condition_c(v), n0: Vec::new() },
            Condition::K => ConditionOutcome { holds: self.condition_k(v), n0: Vec::new() },
            Condition::Z => {
                let n0 = self.condition_z(v);
                ConditionOutcome { holds: !n0.is_empty(), n0 }
            }
        })
    }

    fn zero_everywhere(&self) -> bool {
        self.weights.iter().all(|w| w.contains(0))
    }

    /// Applies a vertex permutation: vertex `i` becomes `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, DigraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true)) {
            return Err(DigraphError::ParamOutOfRange(format!("{perm:?} is not a permutation of 1..={}", self.n)));
        }
        let arcs = self.arcs.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1]));
        let mut weights = vec![WeightInterval::Empty; self.n];
        for v in self.vertices() {
            weights[perm[v - 1] - 1] = self.weight(v);
        }
        Self::new(self.n, arcs, weights)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, DigraphError> {
        serde_json::from_str(s).map_err(|e| DigraphError::Malformed(e.to_string()))
    }
}

fn relabel_error(e: DigraphError, sorted: &[usize]) -> DigraphError {
    match e {
        DigraphError::NotACoking { v } => DigraphError::NotACoking { v: sorted[v - 1] },
        DigraphError::NotAKing { v } => DigraphError::NotAKing { v: sorted[v - 1] },
        DigraphError::EmptyWeight { v } => DigraphError::EmptyWeight { v: sorted[v - 1] },
        other => other,
    }
}

impl fmt::Display for VertexWeightedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} arcs={{", self.n)?;
        for (k, (a, b)) in self.arcs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}} ψ=[")?;
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> WeightInterval {
        WeightInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn kings_and_cokings() {
        let t4 = transitive_tournament(4, WeightInterval::Empty);
        assert_eq!(t4.kings(), BTreeSet::from([1]));
        assert_eq!(t4.cokings(), BTreeSet::from([4]));
        let k3 = complete(3, WeightInterval::Empty);
        assert_eq!(k3.kings(), BTreeSet::from([1, 2, 3]));
        assert_eq!(k3.cokings(), BTreeSet::from([1, 2, 3]));
        let e = edgeless(3, WeightInterval::Empty);
        assert!(e.kings().is_empty() && e.cokings().is_empty());
    }

    #[test]
    fn ceo_on_tournament() {
        let g = transitive_tournament(4, iv(-1, 0));
        let h = g.ceo(4).unwrap();
        assert_eq!(h.arcs(), &BTreeSet::from([(1, 2), (1, 3), (2, 3)]));
        for v in 1..=3 {
            assert_eq!(h.weight(v), iv(-2, 0));
        }
        assert_eq!(h.weight(4), iv(-1, 0));
        assert_eq!(g.ceo(3), Err(DigraphError::NotACoking { v: 3 }));
        let single = VertexWeightedDigraph::new(1, [], vec![iv(0, 2)]).unwrap();
        assert_eq!(single.ceo(1).unwrap(), single);
        assert_eq!(single.keo(1).unwrap(), single);
    }

    #[test]
    fn ceo_refuses_empty_weight() {
        let g = transitive_tournament(2, WeightInterval::Empty);
        assert_eq!(g.ceo(2), Err(DigraphError::EmptyWeight { v: 1 }));
    }

    #[test]
    fn keo_on_catalan_d() {
        let d = VertexWeightedDigraph::new(3, [(1, 2), (1, 3), (2, 3), (3, 2)], vec![iv(-1, 1), iv(-2, 1), iv(-2, 1)]).unwrap();
        let c = d.keo(1).unwrap();
        assert_eq!(c.arcs(), &BTreeSet::from([(2, 3), (3, 2)]));
        assert_eq!(c.weights(), &[iv(-1, 1), iv(-2, 2), iv(-2, 2)]);
        assert_eq!(c, catalan_c(3, 2).unwrap());
    }

    #[test]
    fn keo_is_ceo_through_converse() {
        let g = transitive_tournament(3, iv(-1, 0));
        let left = g.converse().keo(3).unwrap();
        let right = g.ceo(3).unwrap().converse();
        assert_eq!(left, right);
    }

    #[test]
    fn conditions() {
        let g = transitive_tournament(4, iv(-1, 0));
        assert!(g.condition_c(4));
        assert_eq!(g.condition_z(4), vec![0]);
        let h = VertexWeightedDigraph::new(2, [(1, 2)], vec![iv(-2, 0), iv(0, 0)]).unwrap();
        assert!(!h.condition_c(2));
        let e = transitive_tournament(3, WeightInterval::Empty);
        assert!(!e.condition_c(3) && !e.condition_k(3));
        let out = e.check_condition(3, Condition::Z).unwrap();
        assert!(!out.holds && out.n0.is_empty());
    }

    #[test]
    fn converse_and_induced() {
        let t3 = transitive_tournament(3, WeightInterval::Empty);
        assert_eq!(t3.converse().arcs(), &BTreeSet::from([(2, 1), (3, 1), (3, 2)]));
        let t = shi_ish(5, 2).unwrap();
        let sub = t.induced(&[1, 2, 3, 4]).unwrap();
        let expected: BTreeSet<(usize, usize)> =
            (1..=4).flat_map(|i| (i + 1..=4).map(move |j| (i, j))).collect();
        assert_eq!(sub.arcs(), &expected);
        assert_eq!(sub.weights(), &t.weights()[..4]);
    }

    #[test]
    fn isolated_minimal_weight() {
        for l in 1..=5 {
            let g = shi_ish(l, l).unwrap();
            assert!(g.isolated_min_weight(l));
            assert_eq!(g.weight(l), iv(-1, 0));
        }
        let g = shi_ish(4, 1).unwrap();
        assert!(!g.isolated_min_weight(4));
    }

    #[test]
    fn json_roundtrip_and_canonical_order() {
        let s = r#"{"n": 3, "arcs": [[2,3],[1,2]], "weights": {"1": [-1,0], "2": null}}"#;
        let g = VertexWeightedDigraph::from_json(s).unwrap();
        assert_eq!(g.weight(2), WeightInterval::Empty);
        assert_eq!(g.weight(3), WeightInterval::Empty);
        assert_eq!(g.to_json(), r#"{"n":3,"arcs":[[1,2],[2,3]],"weights":{"1":[-1,0],"2":null,"3":null}}"#);
        assert_eq!(VertexWeightedDigraph::from_json(&g.to_json()).unwrap(), g);
        assert!(VertexWeightedDigraph::from_json(r#"{"n":2,"arcs":[[1,1]]}"#).is_err());
        assert!(VertexWeightedDigraph::from_json(r#"{"n":2,"arcs":[],"weights":{"1":[0,1,3]}}"#).is_err());
        assert!(VertexWeightedDigraph::from_json(r#"{"n":2,"arcs":[],"weights":{"1":[2,1]}}"#).is_err());
    }

    #[test]
    fn within_operations_leave_the_rest_alone() {
        let g = shi_ish(4, 2).unwrap();
        assert!(g.ceo(3).is_err());
        let h = g.ceo_within(&g.active_support(3), 3).unwrap();
        assert_eq!(h, shi_ish(4, 3).unwrap());
        assert!(matches!(g.ceo_within(&[2, 3], 3), Err(DigraphError::SupportNotClosed { .. })));
    }

    #[test]
    fn relabel_roundtrip() {
        let g = shi_ish(3, 1).unwrap();
        let h = g.relabel(&[2, 3, 1]).unwrap();
        assert_eq!(h.relabel(&[3, 1, 2]).unwrap(), g);
        assert!(g.relabel(&[1, 1, 2]).is_err());
    }
}
