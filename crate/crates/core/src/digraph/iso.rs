//! Brute-force digraph isomorphism for small vertex counts.

use super::{DigraphError, VertexWeightedDigraph};
use itertools::Itertools;

/// Largest vertex count accepted by [`digraph_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 8;

fn degree_profile(g: &VertexWeightedDigraph) -> Vec<(usize, usize)> {
    let mut p: Vec<_> = g.vertices().map(|v| (g.out_degree(v), g.in_degree(v))).collect();
    p.sort_unstable();
    p
}

/// True iff some vertex bijection carries the arcs of `g1` onto those of `g2`.
/// Weights are ignored.
pub fn digraph_isomorphic(g1: &VertexWeightedDigraph, g2: &VertexWeightedDigraph) -> Result<bool, DigraphError> {
    for g in [g1, g2] {
        if g.n() > ISOMORPHISM_LIMIT {
            return Err(DigraphError::TooLarge { n: g.n(), limit: ISOMORPHISM_LIMIT });
        }
    }
    if g1.n() != g2.n() || g1.arcs().len() != g2.arcs().len() || degree_profile(g1) != degree_profile(g2) {
        return Ok(false);
    }
    let n = g1.n();
    let deg1: Vec<_> = g1.vertices().map(|v| (g1.out_degree(v), g1.in_degree(v))).collect();
    let deg2: Vec<_> = g2.vertices().map(|v| (g2.out_degree(v), g2.in_degree(v))).collect();
    Ok((1..=n).permutations(n).any(|perm| {
        (0..n).all(|i| deg1[i] == deg2[perm[i] - 1])
            && g1.arcs().iter().all(|&(a, b)| g2.has_arc(perm[a - 1], perm[b - 1]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{edgeless, transitive_tournament, WeightInterval};

    #[test]
    fn small_cases() {
        let t3 = transitive_tournament(3, WeightInterval::Empty);
        let relabelled = t3.relabel(&[2, 3, 1]).unwrap();
        assert!(digraph_isomorphic(&t3, &relabelled).unwrap());
        let cycle = VertexWeightedDigraph::uniform(3, [(1, 2), (2, 3), (3, 1)], WeightInterval::Empty).unwrap();
        assert!(!digraph_isomorphic(&cycle, &t3).unwrap());
        let e = edgeless(3, WeightInterval::Empty);
        assert!(digraph_isomorphic(&e, &e).unwrap());
        let big = edgeless(9, WeightInterval::Empty);
        assert!(matches!(digraph_isomorphic(&big, &big), Err(DigraphError::TooLarge { .. })));
    }
}
