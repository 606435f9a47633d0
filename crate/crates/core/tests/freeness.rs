use arrangement_core::corpus::{all_digraphs, digraph_corpus, intervals_within};
use arrangement_core::digraph::{catalan_c, shi_ish};
use arrangement_core::freeness::{
    admissible_n0, decide_freeness, decide_freeness_with, exponents_from_chi, l1_free, signed_eliminable_any,
    signed_graph_from, supersolvable, wakamiko_exponents, DecideOptions, Status,
};
use arrangement_core::oracle::{oracle_freeness_with, OracleLimits};
use arrangement_core::{from_digraph, VertexWeightedDigraph, WeightInterval};

fn small_corpus() -> Vec<VertexWeightedDigraph> {
    let mut out = Vec::new();
    let ws = intervals_within(-2, 1, true);
    for g in all_digraphs(2, WeightInterval::Empty) {
        for a in &ws {
            for b in &ws {
                out.push(g.with_weights(vec![*a, *b]).unwrap());
            }
        }
    }
    out.extend(digraph_corpus(5, 300, 3, -2, 1).into_iter().filter(|g| g.n() == 3));
    out
}

#[test]
fn pipeline_agrees_with_oracle_up_to_three_vertices() {
    let limits = OracleLimits { max_hyperplanes: 40, ..OracleLimits::default() };
    let with_oracle = DecideOptions { oracle: Some(limits.clone()) };
    let alone = DecideOptions { oracle: None };
    let corpus = small_corpus();
    assert!(corpus.len() > 500);
    let mut fallbacks = 0;
    for g in &corpus {
        let oracle = oracle_freeness_with(&from_digraph(g).cone(), &limits).unwrap();
        assert_ne!(oracle.status, Status::Inconclusive, "{}", g.to_json());
        let own = decide_freeness_with(g, &alone).unwrap();
        if own.status == Status::Inconclusive {
            fallbacks += 1;
        } else {
            assert_eq!(own.status, oracle.status, "{} {:?}", g.to_json(), own.evidence);
        }
        let full = decide_freeness_with(g, &with_oracle).unwrap();
        assert_eq!(full.status, oracle.status, "{}", g.to_json());
        if full.is_free() {
            assert_eq!(full.exponents, oracle.exponents);
        }
    }
    // Mixed empty and nonempty weights are outside the signed-graph criterion.
    assert!(fallbacks < corpus.len() / 10);
}

#[test]
fn signed_eliminability_does_not_depend_on_n0() {
    let mut multi = 0;
    for g in digraph_corpus(11, 400, 4, -2, 1) {
        let n0s = admissible_n0(&g);
        let verdicts: Vec<bool> =
            n0s.iter().map(|&n0| signed_eliminable_any(&signed_graph_from(&g, n0).unwrap()).is_ok()).collect();
        assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{} {:?}", g.to_json(), n0s);
        multi += (n0s.len() > 1) as usize;
    }
    assert!(multi > 0);
}

#[test]
fn shi_ish_family_is_free_along_the_chain() {
    for l in 1..=4 {
        for k in 1..=l {
            let v = decide_freeness(&shi_ish(l, k).unwrap()).unwrap();
            assert_eq!(v.status, Status::Free, "ℓ={l} k={k}");
            // The cone lives in ℓ+1 dimensions but the weights make it essential.
            let mut expected = vec![1];
            expected.extend(std::iter::repeat_n(l + 1, l));
            assert_eq!(v.exponents, Some(expected), "ℓ={l} k={k}");
        }
    }
}

#[test]
fn supersolvable_implies_free_and_is_local() {
    let mut seen = 0;
    for g in digraph_corpus(3, 150, 3, -1, 1) {
        let cone = from_digraph(&g).cone();
        let Some(chain) = supersolvable(&cone).unwrap() else { continue };
        seen += 1;
        let v = decide_freeness(&g).unwrap();
        assert_eq!(v.status, Status::Free, "{}", g.to_json());
        assert_eq!(v.exponents, Some(chain.exponents.clone()));
        let poset = cone.intersection_poset().unwrap();
        for x in poset.flats().iter().step_by(3) {
            let local = cone.localization(x).unwrap();
            assert!(supersolvable(&local).unwrap().is_some(), "{} at {:?}", g.to_json(), x);
        }
    }
    assert!(seen > 10);
}

#[test]
fn free_verdicts_carry_exponents_summing_to_the_size() {
    for g in digraph_corpus(17, 200, 4, -1, 1) {
        let v = decide_freeness(&g).unwrap();
        if v.is_free() {
            let cone = from_digraph(&g).cone();
            let e = exponents_from_chi(&cone).unwrap().expect("χ splits");
            assert_eq!(v.exponents.as_ref(), Some(&e));
            assert_eq!(e.iter().sum::<usize>(), cone.len());
        }
    }
}

#[test]
fn catalan_end_points() {
    // C_ℓ^ℓ has no arcs and ψ(i) = [−i, i]; its cone is the Catalan cone one
    // dimension up, with the zero exponent dropped.
    for l in 2..=4 {
        let v = decide_freeness(&catalan_c(l, l).unwrap()).unwrap();
        assert_eq!(v.status, Status::Free);
        let mut e: Vec<usize> = vec![1];
        e.extend(l + 2..=2 * l + 1);
        assert_eq!(v.exponents, Some(e));
    }
}

#[test]
fn two_vertex_examples() {
    let iv = |a, b| WeightInterval::span(a, b);
    let t2 = |w1, w2| VertexWeightedDigraph::new(2, [(1, 2)], vec![w1, w2]).unwrap();
    assert!(l1_free(&t2(iv(-1, 0), iv(-1, 0))).unwrap().free);
    // Equal sizes: free iff ψ(1) = ψ(2) or ψ(1) = ψ(2) + 1.
    assert!(l1_free(&t2(iv(0, 1), iv(-1, 0))).unwrap().free);
    assert_eq!(oracle_freeness_with(&from_digraph(&t2(iv(0, 1), iv(-1, 0))).cone(), &OracleLimits::default()).unwrap().status, Status::Free);
    assert!(!l1_free(&t2(iv(-1, 0), iv(0, 1))).unwrap().free);
    assert_eq!(decide_freeness(&t2(iv(-1, 0), iv(0, 1))).unwrap().status, Status::NotFree);
    assert_eq!(oracle_freeness_with(&from_digraph(&t2(iv(-1, 0), iv(0, 1))).cone(), &OracleLimits::default()).unwrap().status, Status::NotFree);
    assert_eq!(wakamiko_exponents(1, 1, 1), [1, 2]);
    assert_eq!(wakamiko_exponents(2, 2, 2), [3, 3]);
}
