//! Signed graphs attached to Ziegler restrictions and the signed-eliminable
//! ordering test.

use crate::digraph::VertexWeightedDigraph;
use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// Largest vertex count for which [`signed_eliminable_brute_force`] runs.
pub const ORDERING_LIMIT: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignedGraphError {
    #[error("vertex {v}: |ψ(v)| − 2 − n0 = {tau} is not in {{−1, 0, 1}}")]
    NotRepresentable { v: usize, tau: i64 },
}

/// A signature `ε` on unordered pairs of `0..size`. When built from a
/// vertex-weighted digraph with an origin, index 0 is the extra vertex and index
/// `i` is digraph vertex `i`; without an origin, index `i` is digraph vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedGraph {
    size: usize,
    eps: Vec<i8>,
    n0: Option<usize>,
    origin: bool,
}

/// Why no elimination ordering exists: after removing `eliminated` (last
/// first), every remaining vertex `k` sits in a failing triple `(i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub remaining: Vec<usize>,
    pub triple: (usize, usize, usize),
}

impl SignedGraph {
    /// All pairs unsigned.
    pub fn zero(size: usize) -> Self {
        SignedGraph { size, eps: vec![0; size * size], n0: None, origin: false }
    }

    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = ((usize, usize), i8)>) -> Self {
        let mut g = Self::zero(size);
        for ((i, j), e) in pairs {
            g.set(i, j, e);
        }
        g
    }

    pub fn set(&mut self, i: usize, j: usize, e: i8) {
        assert!(i != j && (-1..=1).contains(&e), "invalid signed edge");
        self.eps[i * self.size + j] = e;
        self.eps[j * self.size + i] = e;
    }

    pub fn eps(&self, i: usize, j: usize) -> i8 {
        self.eps[i * self.size + j]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n0(&self) -> Option<usize> {
        self.n0
    }

    pub fn has_origin(&self) -> bool {
        self.origin
    }

    /// Digraph vertex for an index (0 is the origin when present).
    pub fn label(&self, i: usize) -> usize {
        if self.origin {
            i
        } else {
            i + 1
        }
    }

    /// True iff the triple with `k` last satisfies both triangle conditions.
    pub fn triple_ok(&self, i: usize, j: usize, k: usize) -> bool {
        let (ik, jk, ij) = (self.eps(i, k), self.eps(j, k), self.eps(i, j));
        // Two equal nonzero signs at k force the same sign on {i, j}.
        if ik != 0 && ik == jk && ij != ik {
            return false;
        }
        // A sign σ on {k, i} and −σ on {i, j} force −σ on {k, j}; both orientations.
        for (ki, kj, ij) in [(ik, jk, ij), (jk, ik, ij)] {
            if ki != 0 && ij == -ki && kj != -ki {
                return false;
            }
        }
        true
    }

    fn failing_triple(&self, k: usize, alive: &[bool]) -> Option<(usize, usize, usize)> {
        let others: Vec<usize> = (0..self.size).filter(|&u| u != k && alive[u]).collect();
        others
            .iter()
            .tuple_combinations()
            .find(|&(&i, &j)| !self.triple_ok(i, j, k))
            .map(|(&i, &j)| (i, j, k))
    }
}

/// Signed graph of the Ziegler restriction of `cA(G, ψ)` for a given `n0`:
/// `ε(i, j)` is `+1` for a double arc, `−1` for no arc, `0` for one arc, and
/// `ε(0, i) = |ψ(i)| − 2 − n0`.
pub fn signed_graph_from(g: &VertexWeightedDigraph, n0: usize) -> Result<SignedGraph, SignedGraphError> {
    let n = g.n();
    let mut s = SignedGraph::zero(n + 1);
    s.n0 = Some(n0);
    s.origin = true;
    for i in 1..=n {
        let tau = g.weight(i).size() as i64 - 2 - n0 as i64;
        if !(-1..=1).contains(&tau) {
            return Err(SignedGraphError::NotRepresentable { v: i, tau });
        }
        s.set(0, i, tau as i8);
        for j in i + 1..=n {
            s.set(i, j, arc_sign(g, i, j));
        }
    }
    Ok(s)
}

/// Signed graph on the digraph vertices alone, for `ψ ≡ ∅`: the Ziegler
/// restriction is then `Cox(ℓ)` with multiplicity `2 + ε`.
pub fn signed_graph_without_weights(g: &VertexWeightedDigraph) -> SignedGraph {
    let n = g.n();
    let mut s = SignedGraph::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            s.set(i - 1, j - 1, arc_sign(g, i, j));
        }
    }
    s
}

fn arc_sign(g: &VertexWeightedDigraph, i: usize, j: usize) -> i8 {
    match (g.has_arc(i, j), g.has_arc(j, i)) {
        (true, true) => 1,
        (false, false) => -1,
        _ => 0,
    }
}

/// Checks the triangle conditions for the numbering given by `ordering`
/// (first element is the smallest vertex).
pub fn signed_eliminable(s: &SignedGraph, ordering: &[usize]) -> bool {
    let mut check = ordering.to_vec();
    check.sort_unstable();
    assert_eq!(check, (0..s.size).collect::<Vec<_>>(), "ordering must be a permutation");
    (2..ordering.len()).all(|pos| {
        let k = ordering[pos];
        ordering[..pos].iter().tuple_combinations().all(|(&i, &j)| s.triple_ok(i, j, k))
    })
}

/// Whether some numbering makes `s` signed-eliminable. Returns the ordering
/// found, or the obstruction.
///
/// A vertex may be placed last exactly when every triple it closes is fine,
/// and the conditions restrict to induced subgraphs, so peeling off any such
/// vertex never loses a solution.
pub fn signed_eliminable_any(s: &SignedGraph) -> Result<Vec<usize>, Obstruction> {
    let mut alive = vec![true; s.size];
    let mut reversed = Vec::with_capacity(s.size);
    for _ in 0..s.size {
        let remaining: Vec<usize> = (0..s.size).filter(|&u| alive[u]).collect();
        match remaining.iter().copied().find(|&k| s.failing_triple(k, &alive).is_none()) {
            Some(k) => {
                alive[k] = false;
                reversed.push(k);
            }
            None => {
                let triple = s.failing_triple(remaining[0], &alive).expect("stuck vertices have a failing triple");
                return Err(Obstruction { remaining, triple });
            }
        }
    }
    reversed.reverse();
    Ok(reversed)
}

/// Exhaustive search over all orderings; only for cross-checking.
pub fn signed_eliminable_brute_force(s: &SignedGraph) -> Option<Vec<usize>> {
    assert!(s.size <= ORDERING_LIMIT, "too many vertices for exhaustive search");
    (0..s.size).permutations(s.size).find(|o| signed_eliminable(s, o))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{complete, edgeless, transitive_tournament, WeightInterval};

    #[test]
    fn tournament_gives_zero_signature() {
        let g = transitive_tournament(2, WeightInterval::span(-1, 0));
        let s = signed_graph_from(&g, 0).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(s.eps(i, j), 0);
        }
        assert!(signed_eliminable(&s, &[0, 1, 2]));
    }

    #[test]
    fn complete_and_edgeless_signatures() {
        let s = signed_graph_from(&complete(2, WeightInterval::span(-1, 1)), 1).unwrap();
        assert_eq!((s.eps(1, 2), s.eps(0, 1), s.eps(0, 2)), (1, 0, 0));
        assert!(signed_eliminable_any(&s).is_ok());
        let s = signed_graph_from(&edgeless(2, WeightInterval::span(0, 0)), 0).unwrap();
        assert_eq!((s.eps(1, 2), s.eps(0, 1), s.eps(0, 2)), (-1, -1, -1));
        assert_eq!(
            signed_graph_from(&edgeless(2, WeightInterval::span(0, 0)), 1),
            Err(SignedGraphError::NotRepresentable { v: 1, tau: -2 })
        );
    }

    #[test]
    fn condition_one_violation() {
        let s = SignedGraph::from_pairs(3, [((0, 2), 1), ((1, 2), 1)]);
        assert!(!signed_eliminable(&s, &[0, 1, 2]));
        assert!(signed_eliminable_any(&s).is_ok());
    }

    #[test]
    fn greedy_agrees_with_exhaustive_search_on_four_vertices() {
        let pairs: Vec<(usize, usize)> = (0..4).tuple_combinations().collect();
        for code in 0..3usize.pow(pairs.len() as u32) {
            let mut c = code;
            let s = SignedGraph::from_pairs(
                4,
                pairs.iter().map(|&p| {
                    let e = (c % 3) as i8 - 1;
                    c /= 3;
                    (p, e)
                }),
            );
            let greedy = signed_eliminable_any(&s);
            assert_eq!(greedy.is_ok(), signed_eliminable_brute_force(&s).is_some());
            if let Ok(o) = greedy {
                assert!(signed_eliminable(&s, &o));
            }
        }
    }

    #[test]
    fn every_three_vertex_signature_has_an_ordering() {
        for code in 0..27usize {
            let e = |k: u32| ((code / 3usize.pow(k)) % 3) as i8 - 1;
            let s = SignedGraph::from_pairs(3, [((0, 1), e(0)), ((0, 2), e(1)), ((1, 2), e(2))]);
            assert!(signed_eliminable_any(&s).is_ok());
        }
    }
}
