//! Deciding freeness of `cA(G, ψ)`: Ziegler restrictions and signed graphs,
//! rank-3 localizations along infinity, supersolvability, and the verdict
//! that combines them.

mod local;
mod multi;
mod signed;
mod supersolvable;

pub use local::{
    classify, l1_free, l2_catalogue, l2_free, locally_free_codim3, wakamiko_exponents, FlatReport, L1Case, L1Verdict,
    LocalError, LocalFreeness, LocalizationType, L2_CATALOGUE,
};
pub use multi::{ziegler_restriction, Multiarrangement};
pub use signed::{
    signed_eliminable, signed_eliminable_any, signed_eliminable_brute_force, signed_graph_from,
    signed_graph_without_weights, Obstruction, SignedGraph, SignedGraphError, ORDERING_LIMIT,
};
pub(crate) use supersolvable::exponents_of;
pub use supersolvable::{exponents_from_chi, is_modular_coatom, supersolvable, MChain};

use crate::arrangement::from_digraph;
use crate::digraph::VertexWeightedDigraph;
use crate::oracle::{oracle_freeness_with, OracleLimits};
use crate::poly::IntegerPolynomial;
use crate::ArrangementError;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreenessError {
    #[error("arrangement is not central")]
    NotCentral,
    #[error("flat of rank {rank} is not a coatom of an arrangement of rank {arrangement_rank}")]
    NotACoatom { rank: usize, arrangement_rank: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Local(#[from] LocalError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Free,
    NotFree,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Free => "Free",
            Status::NotFree => "NotFree",
            Status::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessVerdict {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<usize>>,
    pub evidence: Vec<String>,
}

impl FreenessVerdict {
    pub fn free(exponents: Vec<usize>, evidence: Vec<String>) -> Self {
        FreenessVerdict { status: Status::Free, exponents: Some(exponents), evidence }
    }

    pub fn not_free(evidence: Vec<String>) -> Self {
        FreenessVerdict { status: Status::NotFree, exponents: None, evidence }
    }

    pub fn inconclusive(evidence: Vec<String>) -> Self {
        FreenessVerdict { status: Status::Inconclusive, exponents: None, evidence }
    }

    pub fn is_free(&self) -> bool {
        self.status == Status::Free
    }
}

/// Knobs for [`decide_freeness_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Fall back to the oracle when the combinatorial criteria do not apply.
    pub oracle: Option<OracleLimits>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { oracle: Some(OracleLimits::default()) }
    }
}

/// Every `n0 ≥ 0` with `|ψ(i)| − 2 − n0 ∈ {−1, 0, 1}` for all vertices.
pub fn admissible_n0(g: &VertexWeightedDigraph) -> Vec<usize> {
    let sizes: Vec<usize> = g.weights().iter().map(|w| w.size()).collect();
    let (Some(&lo), Some(&hi)) = (sizes.iter().min(), sizes.iter().max()) else { return Vec::new() };
    (hi.saturating_sub(3)..lo).filter(|&n0| n0 + 1 <= lo && hi <= n0 + 3).collect()
}

fn describe(s: &SignedGraph, o: &Obstruction) -> String {
    let name = |i: usize| if s.has_origin() && i == 0 { "origin".to_string() } else { s.label(i).to_string() };
    let (i, j, k) = o.triple;
    format!(
        "signed graph not eliminable: vertices {:?} cannot be ordered; triple ({}, {}, {}) fails with {} last",
        o.remaining.iter().map(|&v| name(v)).collect::<Vec<_>>(),
        name(i),
        name(j),
        name(k),
        name(k)
    )
}

/// Result of the Ziegler-restriction half of the criterion.
enum Ziegler {
    Free(String),
    NotFree(String),
    Unknown(String),
    Inconsistent(String),
}

fn ziegler_verdict(g: &VertexWeightedDigraph) -> Ziegler {
    if g.weights().iter().all(|w| w.is_empty()) {
        let s = signed_graph_without_weights(g);
        return match signed_eliminable_any(&s) {
            Ok(order) => Ziegler::Free(format!(
                "Ziegler restriction free: signed graph on the vertices is eliminable with order {:?}",
                order.iter().map(|&i| s.label(i)).collect::<Vec<_>>()
            )),
            Err(o) => Ziegler::NotFree(describe(&s, &o)),
        };
    }
    let n0s = admissible_n0(g);
    if n0s.is_empty() {
        return Ziegler::Unknown("weight sizes do not fit 2 + n0 + {−1, 0, 1} for any n0".to_string());
    }
    let mut outcomes = Vec::new();
    for &n0 in &n0s {
        let s = signed_graph_from(g, n0).expect("n0 is admissible");
        outcomes.push((n0, s.clone(), signed_eliminable_any(&s)));
    }
    let first = outcomes[0].2.is_ok();
    if outcomes.iter().any(|(_, _, r)| r.is_ok() != first) {
        return Ziegler::Inconsistent(format!("signed-eliminability differs across n0 = {n0s:?}"));
    }
    let (n0, s, r) = &outcomes[0];
    match r {
        Ok(order) => Ziegler::Free(format!(
            "Ziegler restriction free: signed graph with n0 = {n0} is eliminable with order {:?} (n0 tried: {n0s:?})",
            order.iter().map(|&i| if i == 0 { "origin".to_string() } else { i.to_string() }).collect::<Vec<_>>()
        )),
        Err(o) => Ziegler::NotFree(format!("{} (n0 = {n0})", describe(s, o))),
    }
}

fn cone_chi(g: &VertexWeightedDigraph) -> Result<IntegerPolynomial, FreenessError> {
    Ok(from_digraph(g).cone().char_poly()?)
}

/// [`decide_freeness_with`] using the default oracle limits.
pub fn decide_freeness(g: &VertexWeightedDigraph) -> Result<FreenessVerdict, FreenessError> {
    decide_freeness_with(g, &DecideOptions::default())
}

/// Decides freeness of `cA(G, ψ)`.
///
/// Isolated vertices of minimal weight are removed first; they do not affect
/// freeness. On what remains, freeness holds iff the Ziegler restriction to
/// infinity is free (signed-eliminability) and every rank-3 localization along
/// infinity is free. When the weights do not fit the signed-graph model, a
/// failing localization still proves non-freeness; otherwise supersolvability
/// and then the oracle are tried.
pub fn decide_freeness_with(g: &VertexWeightedDigraph, opts: &DecideOptions) -> Result<FreenessVerdict, FreenessError> {
    let chi = cone_chi(g)?;
    let total = from_digraph(g).len() + 1;
    let exponents = supersolvable::exponents_of(&chi, total);
    let mut evidence = Vec::new();

    let mut h = g.clone();
    let mut labels: Vec<usize> = (1..=g.n()).collect();
    while let Some(v) = h.vertices().find(|&v| h.isolated_min_weight(v)) {
        if h.n() <= 1 {
            break;
        }
        evidence.push(format!("vertex {} is isolated with minimal weight; removed", labels[v - 1]));
        let keep: Vec<usize> = h.vertices().filter(|&u| u != v).collect();
        h = h.induced(&keep).expect("vertices exist");
        labels.remove(v - 1);
    }

    let finish = |evidence: Vec<String>| match &exponents {
        Some(e) => FreenessVerdict::free(e.clone(), evidence),
        None => {
            let mut evidence = evidence;
            evidence.push(format!("criteria hold but χ = {chi} does not split over the integers"));
            FreenessVerdict::inconclusive(evidence)
        }
    };

    if h.n() <= 1 {
        evidence.push("at most one vertex left: the cone has rank at most 2".to_string());
        return Ok(finish(evidence));
    }

    let ziegler = ziegler_verdict(&h);
    let local = locally_free_codim3(&h)?;
    let relabel = |r: &FlatReport| format!("{:?} (vertices relabelled as {:?}): {}", r.kind, labels, r.note);
    let local_note = match local.first_failure() {
        Some(bad) => format!("rank-3 localization not free: {}", relabel(bad)),
        None => format!("all {} rank-3 localizations along infinity are free", local.flats.len()),
    };

    match ziegler {
        Ziegler::Inconsistent(msg) => {
            evidence.push(format!("internal inconsistency: {msg}"));
            Ok(FreenessVerdict::inconclusive(evidence))
        }
        Ziegler::NotFree(msg) => {
            evidence.push(msg);
            evidence.push(local_note);
            Ok(FreenessVerdict::not_free(evidence))
        }
        Ziegler::Free(msg) => {
            evidence.push(msg);
            evidence.push(local_note);
            if local.all_free() {
                Ok(finish(evidence))
            } else {
                Ok(FreenessVerdict::not_free(evidence))
            }
        }
        Ziegler::Unknown(msg) => {
            evidence.push(msg);
            evidence.push(local_note);
            if !local.all_free() {
                return Ok(FreenessVerdict::not_free(evidence));
            }
            let cone = from_digraph(g).cone();
            if let Some(chain) = supersolvable(&cone)? {
                evidence.push(format!("supersolvable: M-chain with exponents {:?}", chain.exponents));
                return Ok(FreenessVerdict::free(chain.exponents, evidence));
            }
            evidence.push("no M-chain".to_string());
            if let Some(limits) = &opts.oracle {
                match oracle_freeness_with(&cone, limits) {
                    Ok(v) => {
                        evidence.push("oracle".to_string());
                        evidence.extend(v.evidence);
                        return Ok(FreenessVerdict { status: v.status, exponents: v.exponents, evidence });
                    }
                    Err(e) => evidence.push(format!("oracle not run: {e}")),
                }
            }
            Ok(FreenessVerdict::inconclusive(evidence))
        }
    }
}
