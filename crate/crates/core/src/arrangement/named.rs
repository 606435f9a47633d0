//! Classical arrangements given directly by their defining equations.

use super::{from_digraph, Arrangement, Hyperplane};
use crate::digraph::{complete, edgeless, transitive_tournament, WeightInterval};

/// `Φ_ℓ`: no hyperplanes in `ℚ^ℓ`.
pub fn empty(dim: usize) -> Arrangement {
    Arrangement::new(dim, []).expect("empty arrangement")
}

/// `Cox(ℓ)`: `x_i − x_j = 0`.
pub fn coxeter(l: usize) -> Arrangement {
    from_digraph(&edgeless(l, WeightInterval::Empty))
}

/// `Shi(ℓ)`: `x_i − x_j ∈ {0, 1}` for `i < j`.
pub fn shi(l: usize) -> Arrangement {
    from_digraph(&transitive_tournament(l, WeightInterval::Empty))
}

/// `Cat(ℓ)`: `x_i − x_j ∈ {−1, 0, 1}`.
pub fn catalan(l: usize) -> Arrangement {
    from_digraph(&complete(l, WeightInterval::Empty))
}

/// `Ish(ℓ)`: `Cox(ℓ)` together with `x_1 − x_j = i` for `1 ≤ i < j ≤ ℓ`.
pub fn ish(l: usize) -> Arrangement {
    shi_ish_arrangement(l, l.max(1))
}

/// `A_ℓ^k = Cox(ℓ) ∪ {x_1 − x_j = i : i < j, i < k} ∪ {x_i − x_j = 1 : k ≤ i < j ≤ ℓ}`.
pub fn shi_ish_arrangement(l: usize, k: usize) -> Arrangement {
    let mut hs = Vec::new();
    for i in 1..=l {
        for j in i + 1..=l {
            hs.push(Hyperplane::difference(l, i, j, 0));
        }
    }
    for j in 2..=l {
        for i in 1..j.min(k) {
            hs.push(Hyperplane::difference(l, 1, j, i as i64));
        }
    }
    for i in k.max(1)..=l {
        for j in i + 1..=l {
            hs.push(Hyperplane::difference(l, i, j, 1));
        }
    }
    Arrangement::new(l, hs).expect("dimensions agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_of_the_shi_ish_family() {
        for l in 2..=5 {
            let s: std::collections::HashSet<_> = shi(l).hyperplanes().iter().cloned().collect();
            let a2: std::collections::HashSet<_> = shi_ish_arrangement(l, 2).hyperplanes().iter().cloned().collect();
            assert_eq!(s, a2);
            assert_eq!(ish(l).len(), l * (l - 1));
        }
    }
}
