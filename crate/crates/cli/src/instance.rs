//! Shared input resolution: a command operates either on a constructed
//! family instance or on an edge-list file.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use meyniel_core::cayley::CayleyGraph;
use meyniel_core::certify::{GraphMeta, TheoremTarget};
use meyniel_core::constructions::{build_gamma1, build_gamma2, build_gamma3, greedy_generating_set};
use meyniel_core::error::{Error, Result};
use meyniel_core::graph::{from_edge_list, Graph};
use meyniel_core::groups::AbelianGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gamma1,
    Gamma2,
    Gamma3,
    Greedy,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gamma1 => "gamma1",
            Family::Gamma2 => "gamma2",
            Family::Gamma3 => "gamma3",
            Family::Greedy => "greedy",
        }
    }
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Graph family to construct.
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    /// Group order n (gamma1, greedy).
    #[arg(long)]
    pub n: Option<u64>,

    /// Prime parameter p (gamma2, gamma3).
    #[arg(long)]
    pub p: Option<u64>,

    /// Field extension degree k (gamma2).
    #[arg(long)]
    pub k: Option<usize>,

    /// Edge-list file to load instead of constructing a family instance.
    #[arg(long, conflicts_with_all = ["family", "n", "p", "k"])]
    pub input: Option<PathBuf>,
}

/// A resolved, materialized input graph.
pub enum Loaded {
    Cayley {
        family: Family,
        params: BTreeMap<String, u64>,
        graph: CayleyGraph,
    },
    Plain(Graph),
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Loaded> {
        if let Some(path) = &self.input {
            let data = std::fs::read(path)?;
            return Ok(Loaded::Plain(from_edge_list(&data, None)?));
        }
        let family = self.family.ok_or_else(|| {
            Error::Domain("exactly one input source required: --family or --input".into())
        })?;
        let need = |v: Option<u64>, name: &str| {
            v.ok_or_else(|| Error::Domain(format!("--{name} is required for {}", family.name())))
        };
        let (set, params) = match family {
            Family::Gamma1 => {
                let n = need(self.n, "n")?;
                let (set, recipe) = build_gamma1(n)?;
                let params = BTreeMap::from([("n".into(), n), ("p".into(), recipe.p)]);
                (set, params)
            }
            Family::Gamma2 => {
                let p = need(self.p, "p")?;
                let k = self
                    .k
                    .ok_or_else(|| Error::Domain("--k is required for gamma2".into()))?;
                let set = build_gamma2(p, k)?;
                let params = BTreeMap::from([("p".into(), p), ("k".into(), k as u64)]);
                (set, params)
            }
            Family::Gamma3 => {
                let p = need(self.p, "p")?;
                let set = build_gamma3(p)?;
                (set, BTreeMap::from([("p".into(), p)]))
            }
            Family::Greedy => {
                let n = need(self.n, "n")?;
                let group = AbelianGroup::make_cyclic(n)?;
                let set = greedy_generating_set(&group)?;
                (set, BTreeMap::from([("n".into(), n)]))
            }
        };
        Ok(Loaded::Cayley {
            family,
            params,
            graph: CayleyGraph::build(set)?,
        })
    }
}

impl Loaded {
    pub fn family_name(&self) -> &'static str {
        match self {
            Loaded::Cayley { family, .. } => family.name(),
            Loaded::Plain(_) => "file",
        }
    }

    pub fn plain(&self) -> &Graph {
        match self {
            Loaded::Cayley { graph, .. } => graph.graph(),
            Loaded::Plain(g) => g,
        }
    }

    pub fn cayley(&self) -> Option<&CayleyGraph> {
        match self {
            Loaded::Cayley { graph, .. } => Some(graph),
            Loaded::Plain(_) => None,
        }
    }

    pub fn params(&self) -> BTreeMap<String, u64> {
        match self {
            Loaded::Cayley { params, .. } => params.clone(),
            Loaded::Plain(_) => BTreeMap::new(),
        }
    }

    pub fn s_size(&self) -> Option<u64> {
        self.cayley().map(|g| g.generators().len() as u64)
    }

    pub fn delta(&self) -> u64 {
        match self {
            Loaded::Cayley { graph, .. } => graph.generators().len() as u64,
            Loaded::Plain(g) => g.min_degree() as u64,
        }
    }

    /// Default t values for the freeness scan: the residue family is checked
    /// against K_{2,4}, everything else against K_{2,3}.
    pub fn default_ts(&self) -> Vec<u32> {
        match self {
            Loaded::Cayley {
                family: Family::Gamma1,
                ..
            } => vec![4],
            _ => vec![3],
        }
    }

    pub fn theorem_target(&self) -> Option<TheoremTarget> {
        match self {
            Loaded::Cayley { family, .. } => Some(match family {
                Family::Gamma1 => TheoremTarget::ResidueSqrt,
                Family::Gamma2 => TheoremTarget::NormOneSqrt,
                Family::Gamma3 => TheoremTarget::ParabolaSqrt,
                Family::Greedy => TheoremTarget::GreedyCubeRoot,
            }),
            Loaded::Plain(_) => None,
        }
    }

    pub fn graph_meta(&self) -> GraphMeta {
        GraphMeta {
            family: self.family_name().into(),
            params: self.params(),
            n: self.plain().n() as u64,
            delta: self.delta(),
        }
    }

    /// File-name slug for construct outputs, e.g. `gamma2_p3_k2`.
    pub fn slug(&self) -> String {
        let mut s = self.family_name().to_string();
        for (key, value) in self.params() {
            s.push_str(&format!("_{key}{value}"));
        }
        s
    }
}
