use arrangement_core::arrangement::{
    admissibility_bound, catalan, char_poly_ff, count_complement, coxeter, is_prime, ish, shi, shi_ish_arrangement,
};
use arrangement_core::digraph::Condition;
use arrangement_core::linalg::determinant;
use arrangement_core::{from_digraph, Arrangement, Hyperplane, IntegerPolynomial, VertexWeightedDigraph, WeightInterval};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn arrangement(max_dim: usize, max_len: usize, max_coeff: i64) -> impl Strategy<Value = Arrangement> {
    (1..=max_dim).prop_flat_map(move |dim| {
        let row = (proptest::collection::vec(-max_coeff..=max_coeff, dim), -3i64..=3);
        proptest::collection::vec(row, 0..=max_len).prop_map(move |rows| {
            let hs = rows.into_iter().filter_map(|(c, k)| Hyperplane::new(c, k).ok());
            Arrangement::new(dim, hs).unwrap()
        })
    })
}

fn t_minus_one() -> IntegerPolynomial {
    IntegerPolynomial::new(vec![-1, 1])
}

/// True when `p` divides no nonzero minor of the augmented matrix, so that
/// every rank, and hence the intersection lattice, survives reduction mod `p`.
fn good_reduction(a: &Arrangement, p: u64) -> bool {
    let rows: Vec<Vec<i64>> = a.hyperplanes().iter().map(Hyperplane::row).collect();
    let ncols = a.dim() + 1;
    let p = BigInt::from(p);
    for k in 1..=ncols.min(rows.len()) {
        for rs in (0..rows.len()).combinations(k) {
            for cs in (0..ncols).combinations(k) {
                let m: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(rows[r][c])).collect()).collect();
                let d = determinant(&m);
                if !d.is_zero() && (d % &p).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poset_and_point_counts_agree(a in arrangement(4, 6, 5)) {
        prop_assert_eq!(a.char_poly().unwrap(), char_poly_ff(&a).unwrap());
    }

    #[test]
    fn whitney_evaluation_at_good_primes(a in arrangement(3, 5, 3)) {
        let chi = a.char_poly().unwrap();
        for p in (admissibility_bound(&a) + 1..=31).filter(|&p| is_prime(p)) {
            if good_reduction(&a, p) {
                prop_assert_eq!(count_complement(&a, p).unwrap() as i128, chi.eval(p as i64), "p = {}", p);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn coning_multiplies_by_t_minus_one(a in arrangement(4, 6, 5)) {
        let chi = a.char_poly().unwrap();
        prop_assert_eq!(a.cone().char_poly().unwrap(), chi.mul(&t_minus_one()));
    }

    #[test]
    fn products_multiply(a in arrangement(2, 4, 3), b in arrangement(2, 4, 3)) {
        let ab = a.product(&b);
        prop_assert_eq!(ab.char_poly().unwrap(), a.char_poly().unwrap().mul(&b.char_poly().unwrap()));
        // Rank-generating functions multiply as well.
        let (ra, rb) = (a.intersection_poset().unwrap().rank_counts(), b.intersection_poset().unwrap().rank_counts());
        let ga = IntegerPolynomial::new(ra.iter().map(|&x| x as i64).collect());
        let gb = IntegerPolynomial::new(rb.iter().map(|&x| x as i64).collect());
        let rab = ab.intersection_poset().unwrap().rank_counts();
        prop_assert_eq!(IntegerPolynomial::new(rab.iter().map(|&x| x as i64).collect()), ga.mul(&gb));
    }

    #[test]
    fn deletion_restriction(a in arrangement(4, 6, 3)) {
        let chi = a.char_poly().unwrap();
        for i in 0..a.len() {
            let deleted = a.deletion(i).unwrap().char_poly().unwrap();
            let restricted = a.restriction(&a.hyperplane_flat(i).unwrap()).unwrap().char_poly().unwrap();
            prop_assert_eq!(chi.clone(), deleted.sub(&restricted));
        }
    }

    #[test]
    fn mobius_sums_vanish_and_alternate(a in arrangement(4, 6, 3)) {
        let poset = a.intersection_poset().unwrap();
        prop_assert_eq!(poset.mobius(0), 1);
        for z in 1..poset.len() {
            let below: i64 = (0..poset.len())
                .filter(|&y| poset.members(y).is_subset(&poset.members(z)))
                .map(|y| poset.mobius(y))
                .sum();
            prop_assert_eq!(below, 0);
            let sign = if poset.flat_rank(z) % 2 == 0 { 1 } else { -1 };
            prop_assert!(sign * poset.mobius(z) > 0);
        }
    }
}

fn coking_digraph() -> impl Strategy<Value = (VertexWeightedDigraph, usize)> {
    (2usize..=4).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        let m = pairs.len();
        let w = (-2i64..=0, 0i64..=1).prop_map(|(lo, hi)| WeightInterval::span(lo, hi));
        (proptest::collection::vec(any::<bool>(), m), proptest::collection::vec(w, n), 1..=n).prop_map(
            move |(keep, ws, v)| {
                let mut arcs: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
                arcs.extend((1..=n).filter(|&u| u != v).map(|u| (u, v)));
                (VertexWeightedDigraph::new(n, arcs, ws).unwrap(), v)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn coking_elimination_keeps_chi_under_condition_c((g, v) in coking_digraph()) {
        prop_assume!(g.check_condition(v, Condition::C).unwrap().holds);
        let before = from_digraph(&g).char_poly().unwrap();
        let after = from_digraph(&g.ceo(v).unwrap()).char_poly().unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn king_elimination_keeps_chi_under_condition_k((g, v) in coking_digraph()) {
        let g = g.converse();
        prop_assume!(g.check_condition(v, Condition::K).unwrap().holds);
        let before = from_digraph(&g).char_poly().unwrap();
        let after = from_digraph(&g.keo(v).unwrap()).char_poly().unwrap();
        prop_assert_eq!(before, after);
    }
}

#[test]
fn named_characteristic_polynomials() {
    for l in 2..=4 {
        let target = IntegerPolynomial::from_roots(&[vec![0], vec![l as i64; l - 1]].concat());
        assert_eq!(shi(l).char_poly().unwrap(), target);
        assert_eq!(ish(l).char_poly().unwrap(), target);
        for k in 2..=l {
            assert_eq!(shi_ish_arrangement(l, k).char_poly().unwrap(), target);
        }
        let braid: Vec<i64> = (0..l as i64).collect();
        assert_eq!(coxeter(l).char_poly().unwrap(), IntegerPolynomial::from_roots(&braid));
    }
    // Catalan: t(t − ℓ − 1)(t − ℓ − 2)···(t − 2ℓ + 1).
    for l in 2..=4i64 {
        let roots: Vec<i64> = std::iter::once(0).chain(l + 1..=2 * l - 1).collect();
        assert_eq!(catalan(l as usize).char_poly().unwrap(), IntegerPolynomial::from_roots(&roots));
    }
}

#[test]
fn point_count_examples() {
    assert_eq!(count_complement(&shi(2), 5), Ok(15));
    assert_eq!(count_complement(&shi(3), 7), Ok(112));
    assert_eq!(char_poly_ff(&shi(3)).unwrap().factored().unwrap(), "t(t - 3)^2");
}
