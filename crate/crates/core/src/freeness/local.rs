//! Freeness of the rank-3 localizations of `cA(G, ψ)` along the hyperplane at
//! infinity, and the rank-two exponent formula used to derive it.

use crate::arrangement::{codim3_flats_along, DigraphArrangement, IntersectionPoset, Origin};
use crate::digraph::{digraph_isomorphic, VertexWeightedDigraph, WeightInterval};
use crate::ArrangementError;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("expected a digraph on {expected} vertices, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("both weights are empty; the cone has rank 2 and is not a rank-3 localization")]
    MalformedL1,
    #[error("codimension-3 flat with hyperplanes {members:?} fits none of the four localization types")]
    UnclassifiableFlat { members: Vec<usize> },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// Exponents of three lines in the plane with multiplicities `k1, k2, k3`.
pub fn wakamiko_exponents(k1: usize, k2: usize, k3: usize) -> [usize; 2] {
    let mut k = [k1, k2, k3];
    k.sort_unstable();
    let [a, b, c] = k;
    if a + b <= c + 1 {
        [c.min(a + b), c.max(a + b)]
    } else {
        let s = a + b + c;
        [s / 2, s.div_ceil(2)]
    }
}

/// Freeness and supersolvability of the cone over a two-vertex weighted digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct L1Verdict {
    pub free: bool,
    pub supersolvable: bool,
    /// Which case of the two-vertex classification applied.
    pub case: L1Case,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum L1Case {
    /// No arcs: free iff the weights are nested.
    NoArc,
    /// One arc, weights of equal size.
    OneArcEqual,
    /// One arc from the smaller weight to the larger.
    OneArcTailSmaller,
    /// One arc from the larger weight to the smaller.
    OneArcTailLarger,
    /// Both arcs, weights of equal size.
    TwoArcsEqual,
    /// Both arcs, sizes differing by one.
    TwoArcsGapOne,
    /// Both arcs, sizes differing by at least two.
    TwoArcsGapTwo,
}

fn eq(a: WeightInterval, b: WeightInterval) -> bool {
    a == b
}

/// Decides the cone over a two-vertex vertex-weighted digraph.
pub fn l1_free(g: &VertexWeightedDigraph) -> Result<L1Verdict, LocalError> {
    if g.n() != 2 {
        return Err(LocalError::WrongSize { expected: 2, got: g.n() });
    }
    let (w1, w2) = (g.weight(1), g.weight(2));
    if w1.is_empty() && w2.is_empty() {
        return Err(LocalError::MalformedL1);
    }
    let verdict = |free: bool, supersolvable: bool, case| L1Verdict { free, supersolvable, case };
    Ok(match (g.has_arc(1, 2), g.has_arc(2, 1)) {
        (false, false) => {
            let free = w1.is_subset(&w2) || w2.is_subset(&w1);
            verdict(free, free, L1Case::NoArc)
        }
        (true, true) => {
            let (small, big) = if w1.size() <= w2.size() { (w1, w2) } else { (w2, w1) };
            let m = small.size();
            match big.size() - m {
                0 => {
                    let free = eq(w1, w2) || (m == 1 && (eq(w1, w2.shift(1)) || eq(w1, w2.shift(-1))));
                    verdict(free, free && (1..=2).contains(&m), L1Case::TwoArcsEqual)
                }
                1 => {
                    let free = eq(small, big.intersect(&big.shift(1))) || eq(small, big.intersect(&big.shift(-1)));
                    verdict(free, free && m <= 1, L1Case::TwoArcsGapOne)
                }
                _ => {
                    let core = big.shift(-1).intersect(&big).intersect(&big.shift(1));
                    let free = small.is_subset(&core);
                    verdict(free, free, L1Case::TwoArcsGapTwo)
                }
            }
        }
        (tail_is_one, _) => {
            // Orient so that the arc is (1, 2).
            let (p1, p2) = if tail_is_one { (w1, w2) } else { (w2, w1) };
            match p1.size().cmp(&p2.size()) {
                std::cmp::Ordering::Equal => {
                    let free = eq(p1, p2) || eq(p1, p2.shift(1));
                    verdict(free, free && p1.size() == 1, L1Case::OneArcEqual)
                }
                std::cmp::Ordering::Less => {
                    let free = p1.is_subset(&p2.intersect(&p2.shift(1)));
                    verdict(free, free, L1Case::OneArcTailSmaller)
                }
                std::cmp::Ordering::Greater => {
                    let free = p2.is_subset(&p1.intersect(&p1.shift(-1)));
                    verdict(free, free, L1Case::OneArcTailLarger)
                }
            }
        }
    })
}

/// Arc sets, on vertices 1, 2, 3, of the three-vertex digraphs whose cone with
/// empty weights is free. One representative per isomorphism class.
pub const L2_CATALOGUE: [&[(usize, usize)]; 13] = [
    &[(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)],
    &[(1, 2), (1, 3), (2, 1), (2, 3), (3, 1)],
    &[(1, 2), (1, 3), (2, 1), (3, 1)],
    &[(2, 1), (2, 3), (3, 1), (3, 2)],
    &[(1, 2), (1, 3), (2, 3), (3, 2)],
    &[(1, 2), (2, 3), (3, 2)],
    &[(2, 3), (3, 1), (3, 2)],
    &[(2, 1), (2, 3), (3, 1)],
    &[(1, 2), (1, 3)],
    &[(2, 1), (3, 1)],
    &[(2, 3), (3, 2)],
    &[(2, 3)],
    &[],
];

pub fn l2_catalogue() -> Vec<VertexWeightedDigraph> {
    L2_CATALOGUE
        .iter()
        .map(|arcs| VertexWeightedDigraph::uniform(3, arcs.iter().copied(), WeightInterval::Empty).expect("valid arcs"))
        .collect()
}

/// Whether `cA(G, ∅)` is free for a three-vertex digraph; weights are ignored.
pub fn l2_free(g: &VertexWeightedDigraph) -> Result<bool, LocalError> {
    if g.n() != 3 {
        return Err(LocalError::WrongSize { expected: 3, got: g.n() });
    }
    Ok(l2_catalogue().iter().any(|c| digraph_isomorphic(g, c).expect("three vertices")))
}

/// The four shapes a rank-3 localization along infinity can take.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LocalizationType {
    /// Two vertices and their weights.
    L1 { i: usize, j: usize },
    /// Three vertices, no weights.
    L2 { i: usize, j: usize, k: usize },
    /// A pair of vertices plus the weights of a third.
    L3 { pair: (usize, usize), k: usize },
    /// Two disjoint pairs of vertices.
    L4 { first: (usize, usize), second: (usize, usize) },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatReport {
    pub kind: LocalizationType,
    pub hyperplanes: usize,
    pub free: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalFreeness {
    pub flats: Vec<FlatReport>,
}

impl LocalFreeness {
    pub fn all_free(&self) -> bool {
        self.flats.iter().all(|f| f.free)
    }

    pub fn first_failure(&self) -> Option<&FlatReport> {
        self.flats.iter().find(|f| !f.free)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Classifies a codimension-3 flat of `cA(G, ψ)` lying in `z = 0` by which
/// vertices (0 standing for the weights) its hyperplanes tie together.
pub fn classify(n: usize, origins: &[Origin], members: &[usize]) -> Result<LocalizationType, LocalError> {
    let mut parent: Vec<usize> = (0..=n).collect();
    for &h in members {
        let (a, b) = match origins[h] {
            Origin::Braid(i, j) | Origin::Arc(i, j) => (i, j),
            Origin::Weight(i, _) => (0, i),
            Origin::Infinity => continue,
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..=n {
        by_root.entry(find(&mut parent, v)).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
    blocks.sort();
    blocks.retain(|b| b.len() > 1);
    let bad = || LocalError::UnclassifiableFlat { members: members.to_vec() };
    match blocks.as_slice() {
        [b] if b.len() == 3 && b[0] == 0 => Ok(LocalizationType::L1 { i: b[1], j: b[2] }),
        [b] if b.len() == 3 => Ok(LocalizationType::L2 { i: b[0], j: b[1], k: b[2] }),
        [x, y] if x.len() == 2 && y.len() == 2 => {
            if x[0] == 0 {
                Ok(LocalizationType::L3 { pair: (y[0], y[1]), k: x[1] })
            } else {
                Ok(LocalizationType::L4 { first: (x[0], x[1]), second: (y[0], y[1]) })
            }
        }
        _ => Err(bad()),
    }
}

fn expected_size(g: &VertexWeightedDigraph, kind: &LocalizationType) -> usize {
    let arcs = |i: usize, j: usize| g.has_arc(i, j) as usize + g.has_arc(j, i) as usize;
    let pair = |i: usize, j: usize| 1 + arcs(i, j);
    1 + match *kind {
        LocalizationType::L1 { i, j } => pair(i, j) + g.weight(i).size() + g.weight(j).size(),
        LocalizationType::L2 { i, j, k } => pair(i, j) + pair(i, k) + pair(j, k),
        LocalizationType::L3 { pair: (i, j), k } => pair(i, j) + g.weight(k).size(),
        LocalizationType::L4 { first: (i, j), second: (u, v) } => pair(i, j) + pair(u, v),
    }
}

/// Checks every codimension-3 localization of `cA(G, ψ)` contained in `z = 0`.
pub fn locally_free_codim3(g: &VertexWeightedDigraph) -> Result<LocalFreeness, LocalError> {
    let cone = DigraphArrangement::new(g).cone();
    let infinity = cone.arrangement.infinity().expect("cone has infinity");
    let poset = IntersectionPoset::truncated(&cone.arrangement, 3)?;
    let flats = codim3_flats_along(&poset, infinity);
    let reports: Result<Vec<FlatReport>, LocalError> = flats
        .par_iter()
        .map(|&x| {
            let members = poset.members(x).to_vec();
            let kind = classify(g.n(), &cone.origins, &members)?;
            let expected = expected_size(g, &kind);
            if expected != members.len() {
                return Err(LocalError::UnclassifiableFlat { members });
            }
            let (free, note) = match kind {
                LocalizationType::L1 { i, j } => {
                    let v = l1_free(&g.induced(&[i, j]).expect("vertices exist"))?;
                    (v.free, format!("two-vertex case {:?}", v.case))
                }
                LocalizationType::L2 { i, j, k } => {
                    let free = l2_free(&g.induced(&[i, j, k]).expect("vertices exist"))?;
                    let note = if free { "in the three-vertex catalogue" } else { "absent from the three-vertex catalogue" };
                    (free, note.to_string())
                }
                _ => (true, "product of smaller arrangements, supersolvable".to_string()),
            };
            Ok(FlatReport { kind, hyperplanes: members.len(), free, note })
        })
        .collect();
    Ok(LocalFreeness { flats: reports? })
}
