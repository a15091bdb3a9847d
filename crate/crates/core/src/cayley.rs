//! Cayley graphs of finite abelian groups: symmetric generator sets,
//! adjacency materialization, and the canonical vertex ordering shared by the
//! serialization formats and the game solver.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{AbelianGroup, GroupElement};

/// Largest group order for which adjacency is materialized.
pub const VERTEX_CAP: u64 = 1_000_000;

/// A symmetric, identity-free set of group elements: the connection set of a
/// Cayley graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    group: AbelianGroup,
    elements: Vec<GroupElement>,
    ranks: BTreeSet<u64>,
}

impl GeneratorSet {
    /// Validates and canonicalizes a generator set: deduplicates the input,
    /// rejects the identity, and requires closure under negation.
    pub fn new(group: AbelianGroup, elements: Vec<GroupElement>) -> Result<Self> {
        let zero = group.zero();
        let mut ranks = BTreeSet::new();
        for e in &elements {
            if *e == zero {
                return Err(Error::IdentityInSet);
            }
            ranks.insert(group.rank_of(e)?);
        }
        for &r in &ranks {
            let e = group.element_at(r)?;
            let neg = group.neg(&e)?;
            if !ranks.contains(&group.rank_of(&neg)?) {
                return Err(Error::Asymmetry {
                    element: e.to_string(),
                });
            }
        }
        let elements = ranks
            .iter()
            .map(|&r| group.element_at(r).expect("rank in range"))
            .collect();
        Ok(Self {
            group,
            elements,
            ranks,
        })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Generators sorted by canonical rank, without duplicates.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.group
            .rank_of(e)
            .map(|r| self.ranks.contains(&r))
            .unwrap_or(false)
    }

    pub fn contains_rank(&self, rank: u64) -> bool {
        self.ranks.contains(&rank)
    }

    /// Generator ranks in ascending order.
    pub fn ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.ranks.iter().copied()
    }
}

/// A materialized Cayley graph: group, generators, and adjacency indexed by
/// canonical vertex rank.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    generators: GeneratorSet,
    graph: Graph,
}

impl CayleyGraph {
    /// Materializes adjacency. Vertex u ~ v iff (element u) - (element v) is
    /// a generator; every vertex ends up with exactly |S| neighbors.
    pub fn build(generators: GeneratorSet) -> Result<Self> {
        Self::build_capped(generators, VERTEX_CAP)
    }

    pub fn build_capped(generators: GeneratorSet, cap: u64) -> Result<Self> {
        let group = generators.group();
        let n = group.order();
        if n > cap {
            return Err(Error::Size(format!(
                "group order {n} exceeds the vertex cap {cap}"
            )));
        }
        let n = n as usize;
        let mut edges = Vec::with_capacity(n * generators.len() / 2);
        for r in 0..n as u64 {
            let g = group.element_at(r)?;
            for s in generators.elements() {
                let h = group.add(&g, s)?;
                let hr = group.rank_of(&h)?;
                if r < hr {
                    edges.push((r as u32, hr as u32));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges)?;
        debug_assert!(
            (0..n as u32).all(|v| graph.degree(v) == generators.len()),
            "cayley graph must be |S|-regular"
        );
        Ok(Self { generators, graph })
    }

    pub fn group(&self) -> &AbelianGroup {
        self.generators.group()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}
