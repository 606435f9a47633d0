//! Named digraph families.

use super::{DigraphError, VertexWeightedDigraph, WeightInterval};

/// `T_ℓ`: arcs `(i, j)` for `i < j`.
pub fn transitive_tournament(l: usize, weight: WeightInterval) -> VertexWeightedDigraph {
    let arcs = (1..=l).flat_map(|i| (i + 1..=l).map(move |j| (i, j)));
    VertexWeightedDigraph::uniform(l, arcs, weight).expect("valid arcs")
}

/// `K*_ℓ`: every ordered pair.
pub fn complete(l: usize, weight: WeightInterval) -> VertexWeightedDigraph {
    let arcs = (1..=l).flat_map(|i| (1..=l).filter(move |&j| j != i).map(move |j| (i, j)));
    VertexWeightedDigraph::uniform(l, arcs, weight).expect("valid arcs")
}

pub fn edgeless(l: usize, weight: WeightInterval) -> VertexWeightedDigraph {
    VertexWeightedDigraph::uniform(l, [], weight).expect("valid arcs")
}

fn check_range(l: usize, k: usize) -> Result<(), DigraphError> {
    if k == 0 || k > l {
        return Err(DigraphError::ParamOutOfRange(format!("need 1 ≤ k ≤ ℓ, got ℓ={l}, k={k}")));
    }
    Ok(())
}

/// `(T_ℓ^k, ψ_ℓ^k)`: arcs `(i, j)` with `1 ≤ i < j ≤ ℓ−k+1` and
/// `ψ(i) = [−min(ℓ−i+1, k), 0]`.
pub fn shi_ish(l: usize, k: usize) -> Result<VertexWeightedDigraph, DigraphError> {
    check_range(l, k)?;
    let top = l - k + 1;
    let arcs = (1..=top).flat_map(|i| (i + 1..=top).map(move |j| (i, j)));
    let weights = (1..=l)
        .map(|i| WeightInterval::Closed { lo: -((l - i + 1).min(k) as i64), hi: 0 })
        .collect();
    VertexWeightedDigraph::new(l, arcs, weights)
}

/// `(C_ℓ^k, ψ_ℓ^k)`: all arcs among `[k, ℓ]`, `ψ(i) = [−min(i,k), min(i,k)]`.
pub fn catalan_c(l: usize, k: usize) -> Result<VertexWeightedDigraph, DigraphError> {
    check_range(l, k)?;
    let arcs = (k..=l).flat_map(|i| (k..=l).filter(move |&j| j != i).map(move |j| (i, j)));
    let weights = (1..=l)
        .map(|i| {
            let m = i.min(k) as i64;
            WeightInterval::Closed { lo: -m, hi: m }
        })
        .collect();
    VertexWeightedDigraph::new(l, arcs, weights)
}

/// `(D_ℓ^k, φ_ℓ^k)`: arcs `(k, i)` for `i ∈ [k+1, ℓ]` and all arcs among
/// `[k+1, ℓ]`; `φ(i) = [−min(i,k), min(i,k)]` for `i ≤ k` and
/// `[−min(i,k)−1, min(i,k)]` for `i > k`.
pub fn catalan_d(l: usize, k: usize) -> Result<VertexWeightedDigraph, DigraphError> {
    check_range(l, k)?;
    let out_of_k = (k + 1..=l).map(move |i| (k, i));
    let inner = (k + 1..=l).flat_map(|i| (k + 1..=l).filter(move |&j| j != i).map(move |j| (i, j)));
    let weights = (1..=l)
        .map(|i| {
            let m = i.min(k) as i64;
            let lo = if i > k { -m - 1 } else { -m };
            WeightInterval::Closed { lo, hi: m }
        })
        .collect();
    VertexWeightedDigraph::new(l, out_of_k.chain(inner), weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> WeightInterval {
        WeightInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn shi_ish_endpoints() {
        assert_eq!(shi_ish(4, 1).unwrap(), transitive_tournament(4, iv(-1, 0)));
        let g = shi_ish(4, 4).unwrap();
        assert!(g.arcs().is_empty());
        assert_eq!(g.weights(), &[iv(-4, 0), iv(-3, 0), iv(-2, 0), iv(-1, 0)]);
        assert!(shi_ish(3, 0).is_err());
        assert!(shi_ish(3, 4).is_err());
    }

    #[test]
    fn catalan_endpoints() {
        assert_eq!(catalan_c(3, 1).unwrap(), complete(3, iv(-1, 1)));
        let c = catalan_c(3, 3).unwrap();
        assert!(c.arcs().is_empty());
        assert_eq!(c.weights(), &[iv(-1, 1), iv(-2, 2), iv(-3, 3)]);
        let d = catalan_d(3, 1).unwrap();
        assert_eq!(d.arcs().len(), 4);
        assert_eq!(d.weights(), &[iv(-1, 1), iv(-2, 1), iv(-2, 1)]);
        let d2 = catalan_d(3, 2).unwrap();
        assert_eq!(d2.arcs().iter().copied().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(d2.weights(), &[iv(-1, 1), iv(-2, 2), iv(-3, 2)]);
    }

    #[test]
    fn catalan_ceo_keo_chain() {
        for l in 1..=4 {
            for k in 1..=l {
                let support: Vec<usize> = (k..=l).collect();
                let c = catalan_c(l, k).unwrap();
                let d = c.ceo_within(&support, k).unwrap();
                assert_eq!(d, catalan_d(l, k).unwrap(), "ceo ℓ={l} k={k}");
                if k < l {
                    let next = d.keo_within(&support, k).unwrap();
                    assert_eq!(next, catalan_c(l, k + 1).unwrap(), "keo ℓ={l} k={k}");
                }
            }
        }
    }

    #[test]
    fn shi_ish_ceo_chain() {
        for l in 1..=6 {
            for k in 1..l {
                let v = l - k + 1;
                let g = shi_ish(l, k).unwrap();
                let support: Vec<usize> = (1..=v).collect();
                let sub = g.induced(&support).unwrap().ceo(v).unwrap();
                let mut weights = g.weights().to_vec();
                weights[..v].copy_from_slice(sub.weights());
                let rebuilt = VertexWeightedDigraph::new(l, sub.arcs().iter().copied(), weights).unwrap();
                assert_eq!(rebuilt, shi_ish(l, k + 1).unwrap(), "ℓ={l} k={k}");
            }
        }
    }
}
