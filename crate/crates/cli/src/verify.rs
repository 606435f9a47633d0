//! Reproduction suites: each runs a battery of checks and records failures.

use crate::commands::{poly_json, oracle_verdict};
use crate::report::RunReport;
use crate::Settings;
use anyhow::Result;
use arrangement_core::arrangement::{
    admissibility_bound, char_poly_ff, count_complement, is_prime, shi_ish_arrangement, verify_ceo_bijection,
};
use arrangement_core::digraph::{catalan_c, catalan_d, complete, shi_ish, transitive_tournament};
use arrangement_core::freeness::{
    decide_freeness_with, l2_catalogue, l2_free, supersolvable, wakamiko_exponents, DecideOptions, Multiarrangement,
    Status,
};
use arrangement_core::oracle::rank2_multi_exponents;
use arrangement_core::{from_digraph, Arrangement, Hyperplane, IntegerPolynomial, VertexWeightedDigraph, WeightInterval};
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ShiIsh,
    Catalan,
    L2Catalogue,
    Wakamiko,
    Bijection,
}

pub struct SuiteArgs {
    pub ell: Option<usize>,
    pub max_k: Option<usize>,
    pub max: Option<usize>,
    pub primes: usize,
}

pub fn run(suite: Suite, args: &SuiteArgs, settings: &Settings, report: &mut RunReport) -> Result<()> {
    report.results = match suite {
        Suite::ShiIsh => shi_ish_suite(args.ell.unwrap_or(4), args.max_k, settings, report)?,
        Suite::Catalan => catalan_suite(args.ell.unwrap_or(3), settings, report)?,
        Suite::L2Catalogue => l2_suite(settings, report)?,
        Suite::Wakamiko => wakamiko_suite(args.max.unwrap_or(5), report)?,
        Suite::Bijection => bijection_suite(args.ell.unwrap_or(4), args.primes, report)?,
    };
    let status = if report.ok { "all checks passed" } else { "some checks failed" };
    report.line(status);
    Ok(())
}

fn decide(g: &VertexWeightedDigraph, settings: &Settings) -> Result<arrangement_core::freeness::FreenessVerdict> {
    Ok(decide_freeness_with(g, &DecideOptions { oracle: Some(settings.limits.clone()) })?)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn shi_ish_suite(ell: usize, max_k: Option<usize>, settings: &Settings, report: &mut RunReport) -> Result<Value> {
    let mut roots = vec![0i64];
    roots.extend(std::iter::repeat_n(ell as i64, ell.saturating_sub(1)));
    let target = IntegerPolynomial::from_roots(&roots);
    let mut want = vec![0, 1];
    want.extend(std::iter::repeat_n(ell, ell.saturating_sub(1)));
    let want = sorted(want);
    let mut rows = Vec::new();
    for k in 1..=max_k.unwrap_or(ell).min(ell) {
        let a = shi_ish_arrangement(ell, k);
        let chi = a.char_poly()?;
        let ff = char_poly_ff(&a)?;
        report.check(format!("k={k}: χ = t(t−{ell})^{}", ell - 1), chi == target && ff == target, json!({ "poset": chi.coeffs(), "finite_field": ff.coeffs() }));
        // Shi(ℓ) is T_ℓ with empty weights; otherwise drop one trivial factor.
        let (g, extra) = if k == 1 {
            (transitive_tournament(ell, WeightInterval::Empty), 0)
        } else {
            (shi_ish(ell - 1, k - 1)?, 1)
        };
        let v = decide(&g, settings)?;
        let mut e = v.exponents.clone().unwrap_or_default();
        e.extend(std::iter::repeat_n(0, extra));
        let e = sorted(e);
        report.check(format!("k={k}: cone free with exponents {want:?}"), v.status == Status::Free && e == want, json!({ "status": v.status, "exponents": e }));
        let ss = supersolvable(&a.cone())?.is_some();
        if ell >= 3 {
            report.check(format!("k={k}: supersolvable iff k = ℓ"), ss == (k == ell), json!({ "supersolvable": ss }));
        }
        if k < ell {
            let g = shi_ish(ell, k)?;
            let top = ell - k + 1;
            let support: Vec<usize> = (1..=top).collect();
            let next = g.ceo_within(&support, top)?;
            report.check(format!("k={k}: coking elimination at {top} gives T_ℓ^{}", k + 1), next == shi_ish(ell, k + 1)?, json!({ "got": next }));
        }
        report.line(format!("k={k}: χ = {}, {} {:?}, supersolvable {ss}", chi.factored().unwrap_or_else(|| chi.to_string()), v.status, e));
        rows.push(json!({ "k": k, "chi": poly_json(&chi), "status": v.status, "exponents": e, "supersolvable": ss }));
    }
    Ok(json!({ "ell": ell, "rows": rows }))
}

fn catalan_suite(ell: usize, settings: &Settings, report: &mut RunReport) -> Result<Value> {
    let v = decide(&complete(ell, WeightInterval::Empty), settings)?;
    let mut want = vec![0, 1];
    want.extend(ell + 1..=2 * ell - 1);
    let want = sorted(want);
    let e = v.exponents.clone().map(sorted);
    report.check("cCat(ℓ) free", v.status == Status::Free && e.as_ref() == Some(&want), json!({ "status": v.status, "exponents": e }));
    report.line(format!("cCat({ell}): {} {:?}", v.status, e.clone().unwrap_or_default()));
    let mut steps = Vec::new();
    for k in 1..=ell {
        let c = catalan_c(ell, k)?;
        let support: Vec<usize> = (k..=ell).collect();
        let d = c.ceo_within(&support, k)?;
        report.check(format!("k={k}: coking elimination gives D_ℓ^k"), d == catalan_d(ell, k)?, json!({ "got": d }));
        let mut chain = vec![(format!("C^{k}"), c), (format!("D^{k}"), d.clone())];
        if k < ell {
            let next = d.keo_within(&support, k)?;
            report.check(format!("k={k}: king elimination gives C_ℓ^{}", k + 1), next == catalan_c(ell, k + 1)?, json!({ "got": next }));
            chain.push((format!("C^{}", k + 1), next));
        }
        for w in chain.windows(2) {
            let (a, b) = (from_digraph(&w[0].1).char_poly()?, from_digraph(&w[1].1).char_poly()?);
            let (va, vb) = (decide(&w[0].1, settings)?, decide(&w[1].1, settings)?);
            let name = format!("{} → {}", w[0].0, w[1].0);
            report.check(format!("{name}: χ preserved"), a == b, json!({ "before": a.coeffs(), "after": b.coeffs() }));
            report.check(format!("{name}: freeness preserved"), va.status == Status::Free && vb.status == Status::Free, json!({ "before": va.status, "after": vb.status }));
            report.line(format!("{name}: χ = {}, {} → {}", a.factored().unwrap_or_else(|| a.to_string()), va.status, vb.status));
            steps.push(json!({ "step": name, "chi": poly_json(&b), "before": va.status, "after": vb.status }));
        }
    }
    Ok(json!({ "ell": ell, "cone_exponents": e, "steps": steps }))
}

fn l2_suite(settings: &Settings, report: &mut RunReport) -> Result<Value> {
    let pairs = [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)];
    let mut rows = Vec::new();
    let mut free = 0;
    for mask in 0u32..64 {
        let arcs: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a).collect();
        let g = VertexWeightedDigraph::uniform(3, arcs.iter().copied(), WeightInterval::Empty)?;
        let catalogue = l2_free(&g)?;
        let oracle = oracle_verdict(&from_digraph(&g).cone(), settings)?;
        report.check(format!("arcs {arcs:?}: catalogue matches oracle"), oracle.status != Status::Inconclusive && catalogue == (oracle.status == Status::Free), json!({ "catalogue": catalogue, "oracle": oracle.status }));
        free += catalogue as usize;
        rows.push(json!({ "arcs": arcs, "catalogue": catalogue, "oracle": oracle.status }));
    }
    report.line(format!("64 labelled digraphs, {free} free; catalogue has {} unlabelled free types", l2_catalogue().len()));
    Ok(json!({ "free": free, "rows": rows }))
}

fn wakamiko_suite(max: usize, report: &mut RunReport) -> Result<Value> {
    let forms = [vec![1, 0], vec![0, 1], vec![1, -1]];
    let a = Arrangement::new(2, forms.iter().map(|f| Hyperplane::new(f.clone(), 0).expect("nonzero")))?;
    let order: Vec<usize> = a
        .hyperplanes()
        .iter()
        .map(|h| forms.iter().position(|f| f.as_slice() == h.coeffs()).expect("one of the three lines"))
        .collect();
    let mut rows = Vec::new();
    for k1 in 0..=max {
        for k2 in 0..=max {
            for k3 in 0..=max {
                let ks = [k1, k2, k3];
                let m = Multiarrangement::new(a.clone(), order.iter().map(|&i| ks[i]).collect())?;
                let got = rank2_multi_exponents(&m)?;
                let formula = wakamiko_exponents(k1, k2, k3);
                report.check(format!("{ks:?}"), got == formula, json!({ "computed": got, "formula": formula }));
                rows.push(json!({ "k": ks, "computed": got, "formula": formula }));
            }
        }
    }
    report.line(format!("{} multiplicity triples with entries ≤ {max}", rows.len()));
    Ok(json!({ "max": max, "rows": rows }))
}

fn bijection_suite(ell: usize, primes: usize, report: &mut RunReport) -> Result<Value> {
    let mut rows = Vec::new();
    for l in 2..=ell.max(2) {
        let g = transitive_tournament(l, WeightInterval::span(-1, 0));
        let after = g.ceo(l)?;
        let (a, b) = (from_digraph(&g), from_digraph(&after));
        let bound = admissibility_bound(&a).max(admissibility_bound(&b));
        for p in (bound + 1..).filter(|&p| is_prime(p)).take(primes) {
            let r = verify_ceo_bijection(&g, l, p)?;
            let (ca, cb) = (count_complement(&a, p)?, count_complement(&b, p)?);
            report.check(format!("ℓ={l} p={p}: bijection"), r.holds(), serde_json::to_value(&r)?);
            report.check(format!("ℓ={l} p={p}: equal point counts"), ca == cb && r.removed == r.added, json!({ "before": ca, "after": cb }));
            report.line(format!("ℓ={l} p={p}: |M∖M′| = {}, |M′∖M| = {}, bijection {}", r.removed, r.added, r.holds()));
            rows.push(json!({ "ell": l, "report": r, "count_before": ca, "count_after": cb }));
        }
    }
    Ok(json!({ "rows": rows }))
}
