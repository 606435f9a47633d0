//! Exhaustive check of the point bijection behind CEO stability of `χ`.

use super::{from_digraph, is_prime, Arrangement, ArrangementError};
use crate::digraph::{DigraphError, VertexWeightedDigraph};
use serde::Serialize;

/// Outcome of [`verify_ceo_bijection`] at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub p: u64,
    /// `|M ∖ M′|`, counted directly.
    pub removed: usize,
    /// `|M′ ∖ M|`, counted directly.
    pub added: usize,
    /// `f` sends every point of `M ∖ M′` into `M′ ∖ M`.
    pub f_maps_into: bool,
    /// `g` sends every point of `M′ ∖ M` into `M ∖ M′`.
    pub g_maps_into: bool,
    /// `g ∘ f` and `f ∘ g` are the identity.
    pub inverse: bool,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.f_maps_into && self.g_maps_into && self.inverse && self.removed == self.added
    }
}

fn avoids(a: &Arrangement, x: &[u64], p: u64) -> bool {
    let pi = p as i128;
    a.hyperplanes().iter().all(|h| {
        let lhs: i128 = h.coeffs().iter().zip(x).map(|(&c, &v)| c as i128 * v as i128).sum();
        (lhs - h.constant() as i128).rem_euclid(pi) != 0
    })
}

fn points(dim: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as usize).pow(dim as u32);
    (0..total).map(move |mut k| {
        let mut x = vec![0u64; dim];
        for slot in x.iter_mut() {
            *slot = (k % p as usize) as u64;
            k /= p as usize;
        }
        x
    })
}

/// Builds `M`, `M′` over `𝔽_p` for `A(G, ψ)` and the CEO at `v`, then checks
/// that the shift maps `f` and `g` are mutually inverse bijections between
/// `M ∖ M′` and `M′ ∖ M`. Coordinates are compared through their
/// representatives in `{0, …, p − 1}`. Any prime larger than every extended
/// weight interval is accepted, so small primes can be probed as well.
pub fn verify_ceo_bijection(g: &VertexWeightedDigraph, v: usize, p: u64) -> Result<BijectionReport, ArrangementError> {
    if v == 0 || v > g.n() {
        return Err(DigraphError::VertexOutOfRange { v, n: g.n() }.into());
    }
    if !g.is_coking(v) {
        return Err(DigraphError::NotACoking { v }.into());
    }
    if !g.condition_c(v) {
        return Err(ArrangementError::ConditionCViolated { v });
    }
    if !is_prime(p) {
        return Err(ArrangementError::NotPrime { p });
    }
    let after = g.ceo(v)?;
    let a = from_digraph(g);
    let a2 = from_digraph(&after);
    // The extended weights `[a_i − 1, b_i]` must not wrap around 𝔽_p.
    let bound = after.weights().iter().map(|w| w.size() as u64).max().unwrap_or(0);
    if p <= bound {
        return Err(ArrangementError::PrimeTooSmall { p, bound });
    }
    let n = g.n();
    let vi = v - 1;
    let rep = |x: i64| x.rem_euclid(p as i64) as u64;
    let lower: Vec<i64> = (1..=n).map(|i| g.weight(i).bounds().expect("condition (C) forces weights").0).collect();

    let mut removed = Vec::new();
    let mut added = Vec::new();
    for x in points(n, p) {
        match (avoids(&a, &x, p), avoids(&a2, &x, p)) {
            (true, false) => removed.push(x),
            (false, true) => added.push(x),
            _ => {}
        }
    }

    let f = |x: &[u64]| -> Option<Vec<u64>> {
        let xv = x[vi];
        let next = x.iter().copied().filter(|&xk| xk > xv).min()?;
        let d = next - xv;
        Some(x.iter().map(|&xi| if xi <= xv { xi } else { rep(xi as i64 - d as i64 + 1) }).collect())
    };
    let gmap = |y: &[u64]| -> Option<Vec<u64>> {
        let yv = y[vi];
        let c = (0..n).filter(|&k| y[k] > yv).map(|k| rep(lower[k] - y[k] as i64)).min()?;
        Some(y.iter().map(|&yi| if yi <= yv { yi } else { rep(yi as i64 + c as i64 - 1) }).collect())
    };
    let in_removed = |x: &[u64]| avoids(&a, x, p) && !avoids(&a2, x, p);
    let in_added = |y: &[u64]| avoids(&a2, y, p) && !avoids(&a, y, p);

    let mut f_maps_into = true;
    let mut g_maps_into = true;
    let mut inverse = true;
    for x in &removed {
        match f(x) {
            Some(y) if in_added(&y) => inverse &= gmap(&y).as_deref() == Some(x.as_slice()),
            _ => f_maps_into = false,
        }
    }
    for y in &added {
        match gmap(y) {
            Some(x) if in_removed(&x) => inverse &= f(&x).as_deref() == Some(y.as_slice()),
            _ => g_maps_into = false,
        }
    }
    Ok(BijectionReport { p, removed: removed.len(), added: added.len(), f_maps_into, g_maps_into, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{transitive_tournament, WeightInterval};

    #[test]
    fn tournament_two_vertices() {
        let g = transitive_tournament(2, WeightInterval::span(-1, 0));
        let r = verify_ceo_bijection(&g, 2, 11).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.removed > 0);
    }

    #[test]
    fn holds_at_small_and_large_primes() {
        let g = transitive_tournament(3, WeightInterval::span(-1, 0));
        for p in [5, 7, 11, 13, 17] {
            let r = verify_ceo_bijection(&g, 3, p).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        assert!(matches!(verify_ceo_bijection(&g, 3, 3), Err(ArrangementError::PrimeTooSmall { .. })));
    }

    #[test]
    fn rejects_non_coking() {
        let g = transitive_tournament(3, WeightInterval::span(-1, 0));
        assert!(matches!(
            verify_ceo_bijection(&g, 1, 11),
            Err(ArrangementError::Digraph(DigraphError::NotACoking { v: 1 }))
        ));
    }
}
