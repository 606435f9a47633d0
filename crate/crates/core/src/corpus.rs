//! Seeded random test corpora of small arrangements and digraphs.

use crate::arrangement::{catalan, coxeter, ish, shi, Arrangement, Hyperplane};
use crate::digraph::{VertexWeightedDigraph, WeightInterval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_611;

/// Shape of random arrangements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusShape {
    pub max_dim: usize,
    pub max_hyperplanes: usize,
    /// Bound on |coefficient| and |constant|.
    pub max_coeff: i64,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape { max_dim: 4, max_hyperplanes: 6, max_coeff: 5 }
    }
}

fn random_hyperplane(rng: &mut ChaCha8Rng, dim: usize, max_coeff: i64) -> Hyperplane {
    loop {
        // Mostly small entries, so the point counts stay cheap.
        let wide = rng.random_bool(0.2);
        let bound = if wide { max_coeff } else { max_coeff.min(1) };
        let coeffs: Vec<i64> = (0..dim).map(|_| rng.random_range(-bound..=bound)).collect();
        let constant = rng.random_range(-max_coeff.min(2)..=max_coeff.min(2));
        if let Ok(h) = Hyperplane::new(coeffs, constant) {
            return h;
        }
    }
}

/// One random arrangement.
pub fn random_arrangement(rng: &mut ChaCha8Rng, shape: &CorpusShape) -> Arrangement {
    let dim = rng.random_range(1..=shape.max_dim);
    let count = rng.random_range(1..=shape.max_hyperplanes);
    let hs: Vec<Hyperplane> = (0..count).map(|_| random_hyperplane(rng, dim, shape.max_coeff)).collect();
    Arrangement::new(dim, hs).expect("dimensions agree")
}

/// Named small arrangements followed by random ones; `count` in total.
pub fn arrangement_corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<Arrangement> {
    let mut out: Vec<Arrangement> = Vec::new();
    for l in 2..=shape.max_dim.min(3) {
        out.extend([coxeter(l), shi(l), ish(l), catalan(l)]);
    }
    out.truncate(count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        out.push(random_arrangement(&mut rng, shape));
    }
    out
}

/// Central arrangements: cones of corpus members.
pub fn central_corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<Arrangement> {
    let inner = CorpusShape { max_dim: shape.max_dim.saturating_sub(1).max(1), ..shape.clone() };
    arrangement_corpus(seed, count, &inner).iter().map(Arrangement::cone).collect()
}

/// Every interval inside `[lo, hi]`, and optionally the empty one.
pub fn intervals_within(lo: i64, hi: i64, with_empty: bool) -> Vec<WeightInterval> {
    let mut out: Vec<WeightInterval> = if with_empty { vec![WeightInterval::Empty] } else { Vec::new() };
    for a in lo..=hi {
        for b in a..=hi {
            out.push(WeightInterval::span(a, b));
        }
    }
    out
}

/// Random vertex-weighted digraphs on `1..=max_n` vertices with weights drawn
/// from the intervals inside `[lo, hi]` (empty included).
pub fn digraph_corpus(seed: u64, count: usize, max_n: usize, lo: i64, hi: i64) -> Vec<VertexWeightedDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = intervals_within(lo, hi, true);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let density: f64 = rng.random_range(0.0..=1.0);
            let arcs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|a| (1..=n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b)
                .filter(|_| rng.random_bool(density))
                .collect();
            let w = (0..n).map(|_| weights[rng.random_range(0..weights.len())]).collect();
            VertexWeightedDigraph::new(n, arcs, w).expect("valid")
        })
        .collect()
}

/// All digraphs on `n` labelled vertices with the given uniform weight.
pub fn all_digraphs(n: usize, weight: WeightInterval) -> Vec<VertexWeightedDigraph> {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).filter(|&(a, b)| a != b).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let arcs = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            VertexWeightedDigraph::uniform(n, arcs, weight).expect("valid")
        })
        .collect()
}
