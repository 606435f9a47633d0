//! chi, transform, free, supersolvable and oracle.

use crate::input::{parse_vertex_list, Input};
use crate::report::RunReport;
use crate::Settings;
use anyhow::{bail, Context, Result};
use arrangement_core::arrangement::char_poly_ff;
use arrangement_core::digraph::Condition;
use arrangement_core::freeness::{decide_freeness_with, supersolvable, DecideOptions, FreenessVerdict, Status};
use arrangement_core::oracle::{minimal_generator_degrees, oracle_freeness_with};
use arrangement_core::{from_digraph, Arrangement, IntegerPolynomial, VertexWeightedDigraph};
use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChiMethod {
    Poset,
    Ff,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FreeMethod {
    Pipeline,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Ceo,
    Keo,
}

pub fn poly_json(p: &IntegerPolynomial) -> Value {
    json!({ "coefficients": p.coeffs(), "text": p.to_string(), "factored": p.factored() })
}

fn poly_text(p: &IntegerPolynomial) -> String {
    match p.factored() {
        Some(f) => format!("{p}  =  {f}"),
        None => p.to_string(),
    }
}

pub fn chi(input: &Input, method: ChiMethod, report: &mut RunReport) -> Result<()> {
    let a = &input.arrangement;
    let poset = matches!(method, ChiMethod::Poset | ChiMethod::Both).then(|| a.char_poly()).transpose()?;
    let ff = matches!(method, ChiMethod::Ff | ChiMethod::Both).then(|| char_poly_ff(a)).transpose()?;
    let mut results = json!({ "dim": a.dim(), "hyperplanes": a.len() });
    if let Some(p) = &poset {
        results["poset"] = poly_json(p);
        report.line(format!("χ (poset): {}", poly_text(p)));
    }
    if let Some(p) = &ff {
        results["finite_field"] = poly_json(p);
        report.line(format!("χ (finite field): {}", poly_text(p)));
    }
    if let (Some(p), Some(q)) = (&poset, &ff) {
        report.check("poset and finite-field χ agree", p == q, json!({ "poset": p.coeffs(), "finite_field": q.coeffs() }));
    }
    report.results = results;
    Ok(())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Within {
    Vertices(Vec<usize>),
    Keyword(String),
}

#[derive(Clone, Debug, Deserialize)]
pub struct Step {
    pub op: Op,
    pub vertex: usize,
    #[serde(default)]
    pub within: Option<Within>,
}

pub fn parse_within(s: &str) -> Result<Within> {
    Ok(if s.trim() == "active" { Within::Keyword("active".into()) } else { Within::Vertices(parse_vertex_list(s)?) })
}

pub fn read_chain(path: &std::path::Path) -> Result<Vec<Step>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).context("chain file must be a JSON array of {op, vertex, within?}")
}

fn support_of(g: &VertexWeightedDigraph, step: &Step) -> Result<Vec<usize>> {
    Ok(match &step.within {
        None => g.vertices().collect(),
        Some(Within::Keyword(k)) if k == "active" => g.active_support(step.vertex),
        Some(Within::Keyword(k)) => bail!("unknown support {k:?}; use a vertex list or \"active\""),
        Some(Within::Vertices(v)) => v.clone(),
    })
}

pub fn transform(input: &Input, steps: &[Step], check: bool, report: &mut RunReport) -> Result<()> {
    let mut g = input.digraph()?.clone();
    let mut records = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        let support = support_of(&g, step)?;
        let whole = support.len() == g.n();
        let next = match step.op {
            Op::Ceo => g.ceo_within(&support, step.vertex),
            Op::Keo => g.keo_within(&support, step.vertex),
        }
        .with_context(|| format!("step {}: {:?} at vertex {}", i + 1, step.op, step.vertex))?;
        let mut rec = json!({ "op": step.op_name(), "vertex": step.vertex, "support": support });
        report.line(format!("step {}: {} at {} on {:?}", i + 1, step.op_name(), step.vertex, support));
        if check {
            let mut sorted = support.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let local = sorted.iter().position(|&u| u == step.vertex).expect("vertex in support") + 1;
            let which = match step.op {
                Op::Ceo => Condition::C,
                Op::Keo => Condition::K,
            };
            let holds = g.induced(&sorted)?.check_condition(local, which)?.holds;
            let before = from_digraph(&g).char_poly()?;
            let after = from_digraph(&next).char_poly()?;
            // Stability is only claimed for an operation on the whole digraph.
            let asserted = holds && whole;
            rec["condition"] = json!({ "name": format!("{which:?}"), "holds": holds });
            rec["chi_before"] = poly_json(&before);
            rec["chi_after"] = poly_json(&after);
            rec["asserted"] = json!(asserted);
            report.line(format!("  condition ({which:?}) {}", if holds { "holds" } else { "fails" }));
            report.line(format!("  χ before: {}", poly_text(&before)));
            report.line(format!("  χ after:  {}", poly_text(&after)));
            if asserted {
                report.check(format!("step {}: χ unchanged", i + 1), before == after, json!({ "before": before.coeffs(), "after": after.coeffs() }));
            } else if !holds {
                report.line(format!("  warning: condition ({which:?}) fails, χ invariance not asserted"));
            }
        }
        records.push(rec);
        g = next;
    }
    report.line(g.to_json());
    report.results = json!({ "steps": records, "digraph": serde_json::to_value(&g)? });
    Ok(())
}

impl Step {
    fn op_name(&self) -> &'static str {
        match self.op {
            Op::Ceo => "ceo",
            Op::Keo => "keo",
        }
    }
}

/// Pipeline verdict for the cone of the input, with the zero exponents of
/// any trivial factors added back.
pub fn pipeline_verdict(input: &Input, settings: &Settings) -> Result<FreenessVerdict> {
    let Some(model) = &input.model else {
        bail!("the combinatorial pipeline needs a digraph input; use --method oracle");
    };
    let opts = DecideOptions { oracle: Some(settings.limits.clone()) };
    let mut v = decide_freeness_with(&model.digraph, &opts)?;
    if let Some(e) = v.exponents.as_mut() {
        e.extend(std::iter::repeat_n(0, model.trivial_factors));
        e.sort_unstable();
    }
    Ok(v)
}

pub fn oracle_verdict(a: &Arrangement, settings: &Settings) -> Result<FreenessVerdict> {
    Ok(oracle_freeness_with(a, &settings.limits)?)
}

fn verdict_text(v: &FreenessVerdict) -> String {
    match &v.exponents {
        Some(e) => format!("{} with exponents {e:?}", v.status),
        None => v.status.to_string(),
    }
}

pub fn free(input: &Input, method: FreeMethod, settings: &Settings, report: &mut RunReport) -> Result<()> {
    let cone = input.arrangement.cone();
    let mut results = json!({ "cone_hyperplanes": cone.len(), "cone_dim": cone.dim() });
    let pipeline = matches!(method, FreeMethod::Pipeline | FreeMethod::Both).then(|| pipeline_verdict(input, settings)).transpose()?;
    let oracle = matches!(method, FreeMethod::Oracle | FreeMethod::Both).then(|| oracle_verdict(&cone, settings)).transpose()?;
    if let Some(v) = &pipeline {
        results["pipeline"] = serde_json::to_value(v)?;
        report.line(format!("pipeline: {}", verdict_text(v)));
        for e in &v.evidence {
            report.line(format!("  {e}"));
        }
    }
    if let Some(v) = &oracle {
        results["oracle"] = serde_json::to_value(v)?;
        report.line(format!("oracle: {}", verdict_text(v)));
        for e in &v.evidence {
            report.line(format!("  {e}"));
        }
    }
    if let (Some(p), Some(o)) = (&pipeline, &oracle) {
        let agree = p.status == o.status && (p.status != Status::Free || p.exponents == o.exponents);
        report.check("pipeline and oracle agree", agree, json!({ "pipeline": p.status, "oracle": o.status }));
    }
    report.results = results;
    Ok(())
}

pub fn supersolvable_cmd(input: &Input, report: &mut RunReport) -> Result<()> {
    let cone = input.arrangement.cone();
    let chain = supersolvable(&cone)?;
    match &chain {
        Some(c) => {
            report.line(format!("supersolvable, exponents {:?}", c.exponents));
            let sizes: Vec<usize> = c.localizations.iter().map(Vec::len).collect();
            report.line(format!("  M-chain localization sizes {sizes:?}"));
        }
        None => report.line("not supersolvable"),
    }
    report.results = json!({ "supersolvable": chain.is_some(), "chain": chain });
    Ok(())
}

pub fn oracle_cmd(input: &Input, no_cone: bool, degrees: Option<usize>, settings: &Settings, report: &mut RunReport) -> Result<()> {
    let target = if no_cone {
        if !input.arrangement.is_central() {
            bail!("--no-cone needs a central arrangement");
        }
        input.arrangement.clone()
    } else {
        input.arrangement.cone()
    };
    let v = oracle_verdict(&target, settings)?;
    report.line(format!("oracle: {}", verdict_text(&v)));
    for e in &v.evidence {
        report.line(format!("  {e}"));
    }
    let mut results = json!({ "hyperplanes": target.len(), "dim": target.dim(), "verdict": v });
    if let Some(d) = degrees {
        let g = minimal_generator_degrees(&target, d)?;
        report.line(format!("minimal generator degrees up to {d}: {g:?}"));
        results["generator_degrees"] = json!(g);
    }
    report.results = results;
    Ok(())
}
