//! Resolving `--file` or `--family` flags into an arrangement, and where
//! possible a digraph describing it.

use anyhow::{anyhow, bail, Context, Result};
use arrangement_core::arrangement::{catalan, coxeter, ish, shi, shi_ish_arrangement};
use arrangement_core::digraph::{catalan_c, catalan_d, complete, edgeless, shi_ish, transitive_tournament};
use arrangement_core::{from_digraph, Arrangement, VertexWeightedDigraph, WeightInterval};
use clap::{Args, ValueEnum};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Shi(ℓ)
    Shi,
    /// Ish(ℓ)
    Ish,
    /// Cat(ℓ)
    Catalan,
    /// Cox(ℓ)
    Coxeter,
    /// The (k, ℓ)-Shi-Ish arrangement A_ℓ^k
    ShiIsh,
    /// T_ℓ with uniform --weight
    Tournament,
    /// K*_ℓ with uniform --weight
    Complete,
    /// No arcs, uniform --weight
    Edgeless,
    /// (T_ℓ^k, ψ_ℓ^k)
    ShiIshDigraph,
    /// (C_ℓ^k, ψ_ℓ^k)
    CatalanC,
    /// (D_ℓ^k, φ_ℓ^k)
    CatalanD,
}

#[derive(Args, Clone, Debug, Default)]
pub struct InputArgs {
    /// Digraph or arrangement JSON.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Uniform weight for tournament, complete and edgeless: `lo,hi` or `empty`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,
}

/// A digraph whose arrangement, times `trivial_factors` copies of the empty
/// one-dimensional arrangement, is affinely equivalent to the input.
#[derive(Clone, Debug)]
pub struct DigraphModel {
    pub digraph: VertexWeightedDigraph,
    pub trivial_factors: usize,
}

#[derive(Clone, Debug)]
pub struct Input {
    pub label: String,
    pub arrangement: Arrangement,
    pub model: Option<DigraphModel>,
    pub digest: String,
}

impl Input {
    fn from_digraph(label: String, g: VertexWeightedDigraph) -> Self {
        let digest = digest(&g.to_json());
        Input { label, arrangement: from_digraph(&g), model: Some(DigraphModel { digraph: g, trivial_factors: 0 }), digest }
    }

    fn from_arrangement(label: String, a: Arrangement, model: Option<DigraphModel>) -> Self {
        let digest = digest(&a.to_json());
        Input { label, arrangement: a, model, digest }
    }

    /// The digraph itself, when the input is exactly `A(G, ψ)`.
    pub fn digraph(&self) -> Result<&VertexWeightedDigraph> {
        match &self.model {
            Some(m) if m.trivial_factors == 0 => Ok(&m.digraph),
            _ => bail!("{} is not given as a digraph", self.label),
        }
    }
}

fn digest(s: &str) -> String {
    let hash = Sha256::digest(s.as_bytes());
    let hex: String = hash.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn parse_weight(s: &str) -> Result<WeightInterval> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("empty") || s.is_empty() {
        return Ok(WeightInterval::Empty);
    }
    let s = s.trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [lo, hi] = parts.as_slice() else { bail!("weight must be `lo,hi` or `empty`, got {s:?}") };
    let lo: i64 = lo.parse().with_context(|| format!("bad lower bound {lo:?}"))?;
    let hi: i64 = hi.parse().with_context(|| format!("bad upper bound {hi:?}"))?;
    Ok(WeightInterval::new(lo, hi)?)
}

pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|v| v.trim().parse::<usize>().with_context(|| format!("bad vertex {v:?}"))).collect()
}

/// Parses either JSON shape.
pub fn parse_json(text: &str, label: String) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text).context("input is not JSON")?;
    if value.get("arcs").is_some() || value.get("n").is_some() {
        let g: VertexWeightedDigraph = serde_json::from_value(value).context("invalid digraph JSON")?;
        Ok(Input::from_digraph(label, g))
    } else if value.get("hyperplanes").is_some() {
        let a: Arrangement = serde_json::from_value(value).context("invalid arrangement JSON")?;
        Ok(Input::from_arrangement(label, a, None))
    } else {
        bail!("JSON has neither `arcs` (digraph) nor `hyperplanes` (arrangement)")
    }
}

pub fn resolve(args: &InputArgs) -> Result<Input> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        return parse_json(&text, path.display().to_string());
    }
    let family = args.family.ok_or_else(|| anyhow!("give --file or --family"))?;
    let ell = args.ell.ok_or_else(|| anyhow!("--family needs --ell"))?;
    if ell == 0 {
        bail!("--ell must be positive");
    }
    let need_k = || args.k.ok_or_else(|| anyhow!("this family needs --k"));
    let weight = || args.weight.as_deref().map(parse_weight).transpose().map(Option::unwrap_or_default);
    let label = match args.k {
        Some(k) => format!("{family:?}(ℓ={ell}, k={k})"),
        None => format!("{family:?}(ℓ={ell})"),
    };
    let digraph_model = |g: VertexWeightedDigraph, trivial_factors| Some(DigraphModel { digraph: g, trivial_factors });
    Ok(match family {
        Family::Shi => Input::from_arrangement(label, shi(ell), digraph_model(transitive_tournament(ell, WeightInterval::Empty), 0)),
        Family::Catalan => Input::from_arrangement(label, catalan(ell), digraph_model(complete(ell, WeightInterval::Empty), 0)),
        Family::Coxeter => Input::from_arrangement(label, coxeter(ell), digraph_model(edgeless(ell, WeightInterval::Empty), 0)),
        Family::Ish => Input::from_arrangement(label, ish(ell), shi_ish_model(ell, ell)?),
        Family::ShiIsh => {
            let k = need_k()?;
            if k == 0 || k > ell {
                bail!("need 1 ≤ k ≤ ℓ, got ℓ={ell}, k={k}");
            }
            Input::from_arrangement(label, shi_ish_arrangement(ell, k), shi_ish_model(ell, k)?)
        }
        Family::Tournament => Input::from_digraph(label, transitive_tournament(ell, weight()?)),
        Family::Complete => Input::from_digraph(label, complete(ell, weight()?)),
        Family::Edgeless => Input::from_digraph(label, edgeless(ell, weight()?)),
        Family::ShiIshDigraph => Input::from_digraph(label, shi_ish(ell, need_k()?)?),
        Family::CatalanC => Input::from_digraph(label, catalan_c(ell, need_k()?)?),
        Family::CatalanD => Input::from_digraph(label, catalan_d(ell, need_k()?)?),
    })
}

/// `A_ℓ^1` is Shi(ℓ); for `k ≥ 2`, `A_ℓ^k ≅ A(T_{ℓ−1}^{k−1}, ψ_{ℓ−1}^{k−1}) × Φ_1`.
fn shi_ish_model(ell: usize, k: usize) -> Result<Option<DigraphModel>> {
    Ok(Some(if k <= 1 {
        DigraphModel { digraph: transitive_tournament(ell, WeightInterval::Empty), trivial_factors: 0 }
    } else {
        DigraphModel { digraph: shi_ish(ell - 1, k - 1)?, trivial_factors: 1 }
    }))
}
