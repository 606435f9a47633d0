//! End-to-end acceptance battery. Prints one line per criterion and exits
//! nonzero if any of them fails.

use arrangement_core::arrangement::{
    admissibility_bound, catalan, char_poly_ff, count_complement, ish, is_prime, shi, shi_ish_arrangement,
    verify_ceo_bijection,
};
use arrangement_core::corpus::{arrangement_corpus, digraph_corpus, CorpusShape, DEFAULT_SEED};
use arrangement_core::digraph::{catalan_c, catalan_d, complete, shi_ish, transitive_tournament};
use arrangement_core::freeness::{
    admissible_n0, decide_freeness, l1_free, l2_free, signed_eliminable_any, signed_graph_from, supersolvable,
    wakamiko_exponents, Multiarrangement, Status,
};
use arrangement_core::oracle::{
    derivation_space, oracle_freeness, oracle_freeness_with, rank2_multi_exponents, OracleLimits,
};
use arrangement_core::{from_digraph, Arrangement, Hyperplane, IntegerPolynomial, VertexWeightedDigraph, WeightInterval};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn shi_target(l: usize) -> IntegerPolynomial {
    let mut roots = vec![0i64];
    roots.extend(std::iter::repeat_n(l as i64, l - 1));
    IntegerPolynomial::from_roots(&roots)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn shi_ish_equality() -> Outcome {
    for l in 2..=5 {
        let target = shi_target(l);
        for (name, a) in [("Shi", shi(l)), ("Ish", ish(l))] {
            let poset = a.char_poly().map_err(err)?;
            let ff = char_poly_ff(&a).map_err(err)?;
            ensure!(poset == target, "{name}({l}) by poset: {poset}");
            ensure!(ff == target, "{name}({l}) by point counts: {ff}");
        }
    }
    Ok("ℓ = 2..5, both methods".into())
}

fn between_shi_and_ish() -> Outcome {
    for l in 3..=5 {
        for k in 2..=l {
            let chi = shi_ish_arrangement(l, k).char_poly().map_err(err)?;
            ensure!(chi == shi_target(l), "A_{l}^{k}: {chi}");
        }
    }
    let mut steps = 0;
    for l in 2..=6 {
        for k in 1..l {
            let g = shi_ish(l, k).map_err(err)?;
            let top = l - k + 1;
            let support: Vec<usize> = (1..=top).collect();
            let next = g.ceo_within(&support, top).map_err(err)?;
            let want = shi_ish(l, k + 1).map_err(err)?;
            ensure!(next.arcs() == want.arcs() && next.weights() == want.weights(), "ℓ={l} k={k}: {}", next.to_json());
            steps += 1;
        }
    }
    Ok(format!("χ for ℓ = 3..5, {steps} chain steps for ℓ ≤ 6"))
}

/// `A_ℓ^k` with `ℓ ≥ 2`, `k ≥ 2` as a digraph arrangement one dimension down.
fn shi_ish_digraph(l: usize, k: usize) -> Result<VertexWeightedDigraph, String> {
    shi_ish(l - 1, k - 1).map_err(err)
}

fn family_freeness() -> Outcome {
    let t = IntegerPolynomial::monomial(1);
    for l in 3..=5 {
        let mut want = vec![0, 1];
        want.extend(std::iter::repeat_n(l, l - 1));
        for k in 2..=l {
            let g = shi_ish_digraph(l, k)?;
            let cone = shi_ish_arrangement(l, k).cone();
            // The trivial factor contributes a factor t to χ of the cone.
            let chi = cone.char_poly().map_err(err)?;
            let chi_g = from_digraph(&g).cone().char_poly().map_err(err)?;
            ensure!(chi == chi_g.mul(&t), "ℓ={l} k={k}: {chi} vs t·({chi_g})");
            let v = decide_freeness(&g).map_err(err)?;
            ensure!(v.status == Status::Free, "ℓ={l} k={k}: {:?} {:?}", v.status, v.evidence);
            let mut e = v.exponents.unwrap_or_default();
            e.push(0);
            ensure!(sorted(e.clone()) == want, "ℓ={l} k={k}: exponents {e:?}");
        }
    }
    // Direct check on the cones themselves where the oracle is cheap.
    let limits = OracleLimits { max_hyperplanes: 16, ..OracleLimits::default() };
    for l in 3..=4 {
        for k in 2..=l {
            let cone = shi_ish_arrangement(l, k).cone();
            let v = oracle_freeness_with(&cone, &limits).map_err(err)?;
            let mut want = vec![0, 1];
            want.extend(std::iter::repeat_n(l, l - 1));
            ensure!(v.status == Status::Free && v.exponents == Some(want), "oracle on cA_{l}^{k}: {:?}", v.exponents);
            let ss = supersolvable(&cone).map_err(err)?.is_some();
            ensure!(ss == (k == l), "cA_{l}^{k} supersolvable = {ss}");
        }
    }
    Ok("Free for ℓ = 3..5, supersolvable only at k = ℓ for ℓ = 3, 4".into())
}

fn catalan_chain() -> Outcome {
    for l in 2..=4 {
        let v = decide_freeness(&complete(l, WeightInterval::Empty)).map_err(err)?;
        let mut want = vec![0, 1];
        want.extend(l + 1..=2 * l - 1);
        ensure!(v.status == Status::Free, "cCat({l}): {:?}", v.evidence);
        ensure!(v.exponents.as_ref().map(|e| sorted(e.clone())) == Some(want), "cCat({l}): {:?}", v.exponents);
        ensure!(catalan(l).cone().char_poly().map_err(err)? == from_digraph(&complete(l, WeightInterval::Empty)).cone().char_poly().map_err(err)?, "cCat({l}) construction");
    }
    let mut steps = 0;
    for l in 2..=4 {
        for k in 1..=l {
            let c = catalan_c(l, k).map_err(err)?;
            let support: Vec<usize> = (k..=l).collect();
            let d = c.ceo_within(&support, k).map_err(err)?;
            ensure!(d == catalan_d(l, k).map_err(err)?, "ℓ={l} k={k}: CEO gives {}", d.to_json());
            let mut chain = vec![c, d.clone()];
            if k < l {
                let next = d.keo_within(&support, k).map_err(err)?;
                ensure!(next == catalan_c(l, k + 1).map_err(err)?, "ℓ={l} k={k}: KEO gives {}", next.to_json());
                chain.push(next);
            }
            for w in chain.windows(2) {
                let (a, b) = (from_digraph(&w[0]), from_digraph(&w[1]));
                ensure!(a.char_poly().map_err(err)? == b.char_poly().map_err(err)?, "ℓ={l} k={k}: χ changed");
                let (va, vb) = (decide_freeness(&w[0]).map_err(err)?, decide_freeness(&w[1]).map_err(err)?);
                ensure!(va.status == Status::Free && vb.status == Status::Free, "ℓ={l} k={k}: {:?} → {:?}", va.status, vb.status);
                steps += 1;
            }
        }
    }
    Ok(format!("cCat(ℓ) free for ℓ = 2..4, {steps} chain steps keep χ and freeness"))
}

fn pipeline_vs_oracle() -> Outcome {
    let pairs = [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)];
    let mut free3 = 0;
    for mask in 0u32..64 {
        let arcs = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a);
        let g = VertexWeightedDigraph::uniform(3, arcs, WeightInterval::Empty).map_err(err)?;
        let oracle = oracle_freeness(&from_digraph(&g).cone()).map_err(err)?;
        ensure!(oracle.status != Status::Inconclusive, "{} inconclusive", g.to_json());
        let local = l2_free(&g).map_err(err)?;
        ensure!(local == (oracle.status == Status::Free), "{}: catalogue {local}, oracle {:?}", g.to_json(), oracle.status);
        free3 += local as usize;
    }
    let mut intervals = Vec::new();
    for lo in -3..=2 {
        for hi in lo..=(lo + 2).min(2) {
            intervals.push(WeightInterval::span(lo, hi));
        }
    }
    let arc_sets: [&[(usize, usize)]; 4] = [&[], &[(1, 2)], &[(2, 1)], &[(1, 2), (2, 1)]];
    let mut cases = 0;
    for arcs in arc_sets {
        for w1 in &intervals {
            for w2 in &intervals {
                let g = VertexWeightedDigraph::new(2, arcs.iter().copied(), vec![*w1, *w2]).map_err(err)?;
                let local = l1_free(&g).map_err(err)?.free;
                let oracle = oracle_freeness(&from_digraph(&g).cone()).map_err(err)?;
                ensure!(oracle.status != Status::Inconclusive, "{} inconclusive", g.to_json());
                ensure!(local == (oracle.status == Status::Free), "{}: criterion {local}, oracle {:?}", g.to_json(), oracle.status);
                cases += 1;
            }
        }
    }
    Ok(format!("64 three-vertex digraphs ({free3} free), {cases} two-vertex weighted digraphs"))
}

fn wakamiko() -> Outcome {
    let forms = [vec![1, 0], vec![0, 1], vec![1, -1]];
    let a = Arrangement::new(2, forms.iter().map(|f| Hyperplane::new(f.clone(), 0).unwrap())).map_err(err)?;
    let order: Vec<usize> =
        a.hyperplanes().iter().map(|h| forms.iter().position(|f| f.as_slice() == h.coeffs()).unwrap()).collect();
    let mut cases = 0;
    for k1 in 0..=5 {
        for k2 in 0..=5 {
            for k3 in 0..=5 {
                let ks = [k1, k2, k3];
                let m = Multiarrangement::new(a.clone(), order.iter().map(|&i| ks[i]).collect()).map_err(err)?;
                let got = rank2_multi_exponents(&m).map_err(err)?;
                ensure!(got == wakamiko_exponents(k1, k2, k3), "{ks:?}: {got:?}");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} multiplicity triples"))
}

fn bijection() -> Outcome {
    let mut report = Vec::new();
    for l in 2..=4 {
        let g = transitive_tournament(l, WeightInterval::span(-1, 0));
        let after = g.ceo(l).map_err(err)?;
        let (a, b) = (from_digraph(&g), from_digraph(&after));
        let bound = admissibility_bound(&a).max(admissibility_bound(&b));
        let primes: Vec<u64> = (bound + 1..).filter(|&p| is_prime(p)).take(3).collect();
        for &p in &primes {
            let r = verify_ceo_bijection(&g, l, p).map_err(err)?;
            ensure!(r.holds(), "ℓ={l} p={p}: {r:?}");
            // Equal sizes follow from equal point counts alone.
            let (ca, cb) = (count_complement(&a, p).map_err(err)?, count_complement(&b, p).map_err(err)?);
            ensure!(ca == cb && r.removed == r.added, "ℓ={l} p={p}: |M| = {ca}, |M′| = {cb}");
        }
        report.push(format!("ℓ={l}: p ∈ {primes:?}"));
    }
    Ok(report.join("; "))
}

fn property_suite() -> Outcome {
    let corpus = arrangement_corpus(DEFAULT_SEED, 220, &CorpusShape::default());
    ensure!(corpus.len() >= 200, "corpus has {} members", corpus.len());
    let t_minus_one = IntegerPolynomial::new(vec![-1, 1]);
    let mut products = 0;
    let mut eulers = 0;
    for (n, a) in corpus.iter().enumerate() {
        let chi = a.char_poly().map_err(err)?;
        for i in 0..a.len() {
            let deleted = a.deletion(i).map_err(err)?.char_poly().map_err(err)?;
            let restricted = a.restriction(&a.hyperplane_flat(i).map_err(err)?).map_err(err)?.char_poly().map_err(err)?;
            ensure!(chi == deleted.sub(&restricted), "deletion-restriction fails on {} at {i}", a.to_json());
        }
        let cone = a.cone();
        ensure!(cone.char_poly().map_err(err)? == chi.mul(&t_minus_one), "cone identity fails on {}", a.to_json());
        let b = &corpus[(n * 7 + 3) % corpus.len()];
        if a.dim() + b.dim() <= 6 && a.len() + b.len() <= 10 {
            let ab = a.product(b);
            ensure!(ab.char_poly().map_err(err)? == chi.mul(&b.char_poly().map_err(err)?), "product fails on {} × {}", a.to_json(), b.to_json());
            products += 1;
        }
        if cone.len() <= 12 {
            let space = derivation_space(&cone, 1).map_err(err)?;
            let l = space.nvars();
            let nmon = space.monomials.len();
            let mut euler = vec![num_bigint::BigInt::from(0); l * nmon];
            for i in 0..l {
                let mut e = vec![0u32; l];
                e[i] = 1;
                euler[i * nmon + space.monomials.index_of(&e).unwrap()] = 1.into();
            }
            let mut rows = space.basis.clone();
            let before = arrangement_core::linalg::rank(&rows, l * nmon);
            rows.push(euler);
            ensure!(arrangement_core::linalg::rank(&rows, l * nmon) == before, "Euler derivation missing for {}", cone.to_json());
            eulers += 1;
        }
    }
    let mut n0_cases = 0;
    for g in digraph_corpus(DEFAULT_SEED, 400, 4, -2, 1) {
        let verdicts: Vec<bool> = admissible_n0(&g)
            .into_iter()
            .map(|n0| signed_graph_from(&g, n0).map(|s| signed_eliminable_any(&s).is_ok()))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure!(verdicts.windows(2).all(|w| w[0] == w[1]), "n0 dependence on {}", g.to_json());
        n0_cases += (verdicts.len() > 1) as usize;
    }
    Ok(format!(
        "{} arrangements, {products} products, {eulers} Euler checks, {n0_cases} digraphs with several n0",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 Shi and Ish share t(t−ℓ)^(ℓ−1)", shi_ish_equality, Duration::from_secs(120)),
        ("2 Shi-Ish family χ and coking chain", between_shi_and_ish, Duration::from_secs(600)),
        ("3 Shi-Ish cones free, supersolvable only at k = ℓ", family_freeness, Duration::from_secs(600)),
        ("4 Catalan coking/king chain", catalan_chain, Duration::from_secs(600)),
        ("5 local criteria agree with the oracle", pipeline_vs_oracle, Duration::from_secs(900)),
        ("6 rank-2 multiplicity exponents", wakamiko, Duration::from_secs(600)),
        ("7 coking point bijection", bijection, Duration::from_secs(600)),
        ("8 property suite", property_suite, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > budget => Err(format!("took {took:.1?}, budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}  [{took:.1?}]  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  [{took:.1?}]  {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
