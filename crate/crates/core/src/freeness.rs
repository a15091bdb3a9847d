//! Structural verifiers: triangle-freeness, K_{2,t}-freeness, non-trivial
//! 4-cycle detection over generator sets, and the exhaustive equal-sums
//! congruence oracle.
//!
//! Every negative verdict carries a witness that can be re-validated against
//! the graph or the generator set it came from.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{CayleyGraph, GeneratorSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{is_prime, GroupElement};

/// Outcome of a freeness check: `free = false` comes with a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict<W> {
    pub free: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn holds() -> Self {
        Self {
            free: true,
            witness: None,
        }
    }

    fn violated(witness: W) -> Self {
        Self {
            free: false,
            witness: Some(witness),
        }
    }
}

/// A triangle, as vertices and (when found at generator level) as a zero-sum
/// generator triple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleWitness {
    pub vertices: [u64; 3],
    pub generators: Option<[Vec<u64>; 3]>,
}

impl TriangleWitness {
    /// True iff the three vertices are pairwise adjacent.
    pub fn validate(&self, graph: &Graph) -> bool {
        let [a, b, c] = self.vertices;
        let ok = |x: u64, y: u64| {
            x != y && x < graph.n() as u64 && y < graph.n() as u64 && graph.has_edge(x as u32, y as u32)
        };
        ok(a, b) && ok(a, c) && ok(b, c)
    }
}

/// Two vertices together with t of their common neighbors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct K2tWitness {
    pub pair: [u64; 2],
    pub common: Vec<u64>,
}

impl K2tWitness {
    /// True iff all listed vertices are common neighbors of the pair and
    /// there are exactly t of them.
    pub fn validate(&self, graph: &Graph, t: u32) -> bool {
        let [u, v] = self.pair;
        if u == v || self.common.len() != t as usize {
            return false;
        }
        self.common.iter().all(|&w| {
            w != u && w != v && graph.has_edge(w as u32, u as u32) && graph.has_edge(w as u32, v as u32)
        })
    }
}

/// A zero-sum generator 4-tuple that cannot be split into two inverse pairs,
/// plus one 4-cycle through vertex 0 realizing it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourCycleWitness {
    pub generators: [Vec<u64>; 4],
    pub vertices: [u64; 4],
}

impl FourCycleWitness {
    /// True iff the generators all lie in S, sum to zero, and no pairing into
    /// two zero-sum pairs exists.
    pub fn validate(&self, s: &GeneratorSet) -> bool {
        let group = s.group();
        let elems: Vec<GroupElement> = match self
            .generators
            .iter()
            .map(|c| group.element(c))
            .collect::<Result<Vec<_>>>()
        {
            Ok(v) => v,
            Err(_) => return false,
        };
        if !elems.iter().all(|e| s.contains(e)) {
            return false;
        }
        let mut sum = group.zero();
        for e in &elems {
            sum = group.add(&sum, e).expect("same group");
        }
        sum == group.zero() && !is_trivially_paired(s, &elems)
    }
}

/// A multiset {a,b,c,d} is a trivial 4-cycle iff it splits into two pairs
/// each summing to zero; the three pairings are checked explicitly.
fn is_trivially_paired(s: &GeneratorSet, elems: &[GroupElement]) -> bool {
    let group = s.group();
    let zero = group.zero();
    let pair_zero = |x: &GroupElement, y: &GroupElement| group.add(x, y).expect("same group") == zero;
    let (a, b, c, d) = (&elems[0], &elems[1], &elems[2], &elems[3]);
    (pair_zero(a, b) && pair_zero(c, d))
        || (pair_zero(a, c) && pair_zero(b, d))
        || (pair_zero(a, d) && pair_zero(b, c))
}

/// Verified structural facts about one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub triangle_free: Verdict<TriangleWitness>,
    /// Keyed by the tested t.
    pub k2t_free: BTreeMap<u32, Verdict<K2tWitness>>,
    /// Only meaningful for Cayley inputs; absent for plain graphs.
    pub nontrivial_4cycle_free: Option<Verdict<FourCycleWitness>>,
}

impl FreenessReport {
    pub fn is_k2t_free(&self, t: u32) -> bool {
        self.k2t_free.get(&t).map(|v| v.free).unwrap_or(false)
    }
}

/// Triangle check at generator level: a triangle exists iff some s1, s2, s3
/// in S (repetition allowed) sum to zero. O(|S|^2) by testing -(s1+s2).
pub fn check_triangle_free(s: &GeneratorSet) -> Verdict<TriangleWitness> {
    let group = s.group();
    for s1 in s.elements() {
        for s2 in s.elements() {
            let partial = group.add(s1, s2).expect("same group");
            let s3 = group.neg(&partial).expect("same group");
            if s.contains(&s3) {
                let v0 = 0u64;
                let v1 = group.rank_of(s1).expect("member");
                let v2 = group.rank_of(&partial).expect("member");
                return Verdict::violated(TriangleWitness {
                    vertices: [v0, v1, v2],
                    generators: Some([
                        s1.coords().to_vec(),
                        s2.coords().to_vec(),
                        s3.coords().to_vec(),
                    ]),
                });
            }
        }
    }
    Verdict::holds()
}

/// Naive vertex-level triangle check, usable on any graph.
pub fn check_triangle_free_graph(g: &Graph) -> Verdict<TriangleWitness> {
    for (u, v) in g.edges() {
        if let Some(&w) = g.common_neighbors(u, v).expect("u < v").first() {
            return Verdict::violated(TriangleWitness {
                vertices: [u as u64, v as u64, w as u64],
                generators: None,
            });
        }
    }
    Verdict::holds()
}

/// K_{2,t}-freeness of a Cayley graph via vertex-transitivity: it suffices to
/// scan pairs (0, d). The common neighborhood of 0 and d is S ∩ (d - S).
pub fn check_k2t_free_cayley(cg: &CayleyGraph, t: u32) -> Result<Verdict<K2tWitness>> {
    if t < 2 {
        return Err(Error::Domain(format!("K_{{2,t}} requires t >= 2, got {t}")));
    }
    let s = cg.generators();
    let group = cg.group();
    for d in 1..group.order() {
        let de = group.element_at(d)?;
        let mut common = Vec::new();
        for w in s.elements() {
            let diff = group.sub(&de, w)?;
            if s.contains(&diff) {
                common.push(group.rank_of(w)?);
            }
            if common.len() == t as usize {
                return Ok(Verdict::violated(K2tWitness {
                    pair: [0, d],
                    common,
                }));
            }
        }
    }
    Ok(Verdict::holds())
}

/// K_{2,t}-freeness by exhaustive all-pairs common-neighbor counting. The
/// scan over first vertices is partitioned across workers; the reported
/// witness is the minimum-rank one regardless of worker count.
pub fn check_k2t_free_graph(g: &Graph, t: u32) -> Result<Verdict<K2tWitness>> {
    if t < 2 {
        return Err(Error::Domain(format!("K_{{2,t}} requires t >= 2, got {t}")));
    }
    let n = g.n() as u32;
    let hit = (0..n)
        .into_par_iter()
        .filter_map(|u| {
            for v in u + 1..n {
                let common = g.common_neighbors(u, v).expect("u < v");
                if common.len() >= t as usize {
                    return Some(K2tWitness {
                        pair: [u as u64, v as u64],
                        common: common[..t as usize].iter().map(|&w| w as u64).collect(),
                    });
                }
            }
            None
        })
        .min_by_key(|w| w.pair);
    Ok(match hit {
        Some(w) => Verdict::violated(w),
        None => Verdict::holds(),
    })
}

/// Searches for a non-trivial zero-sum 4-tuple of generators.
///
/// A non-trivial tuple exists iff two distinct unordered pairs over S
/// (repetition allowed) share the same nonzero sum: from a1+b1 = a2+b2 the
/// tuple (a1, b1, -a2, -b2) sums to zero and admits no inverse pairing.
pub fn find_nontrivial_4cycle(s: &GeneratorSet) -> Option<FourCycleWitness> {
    let group = s.group();
    let elems = s.elements();
    let zero_rank = group.rank_of(&group.zero()).expect("member");
    let mut first_pair: HashMap<u64, (usize, usize)> = HashMap::new();
    for i in 0..elems.len() {
        for j in i..elems.len() {
            let sum = group.add(&elems[i], &elems[j]).expect("same group");
            let sum_rank = group.rank_of(&sum).expect("member");
            if sum_rank == zero_rank {
                continue;
            }
            if let Some(&(i0, j0)) = first_pair.get(&sum_rank) {
                let a = &elems[i0];
                let b = &elems[j0];
                let c = group.neg(&elems[i]).expect("member");
                let d = group.neg(&elems[j]).expect("member");
                let v1 = group.rank_of(a).expect("member");
                let v2 = sum_rank;
                let v3 = group.rank_of(&elems[j]).expect("member");
                return Some(FourCycleWitness {
                    generators: [
                        a.coords().to_vec(),
                        b.coords().to_vec(),
                        c.coords().to_vec(),
                        d.coords().to_vec(),
                    ],
                    vertices: [0, v1, v2, v3],
                });
            }
            first_pair.insert(sum_rank, (i, j));
        }
    }
    None
}

/// Result of the exhaustive equal-sums congruence scan over Z_p^4.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EqualSumsCheck {
    /// Number of (a,b,c,d) tuples satisfying both congruences.
    pub solutions: u64,
    /// A solution violating the pairing conclusion, if one exists.
    pub counterexample: Option<[u64; 4]>,
}

/// Iterates all (a,b,c,d) in Z_p^4 with a+b = c+d and a^2+b^2 = c^2+d^2
/// (mod p) and confirms each satisfies (a,b) = (c,d) or (a,b) = (d,c).
pub fn equal_sums_solutions(p: u64) -> Result<EqualSumsCheck> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    let sq = |x: u64| x * x % p;
    let mut solutions = 0u64;
    let mut counterexample = None;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a + b) % p != (c + d) % p {
                        continue;
                    }
                    if (sq(a) + sq(b)) % p != (sq(c) + sq(d)) % p {
                        continue;
                    }
                    solutions += 1;
                    let conforms = (a == c && b == d) || (a == d && b == c);
                    if !conforms && counterexample.is_none() {
                        counterexample = Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok(EqualSumsCheck {
        solutions,
        counterexample,
    })
}

/// Full report for a Cayley graph: generator-level triangle and 4-cycle
/// checks plus the vertex-transitive K_{2,t} scan for each requested t.
pub fn report_for_cayley(cg: &CayleyGraph, ts: &[u32]) -> Result<FreenessReport> {
    let mut k2t_free = BTreeMap::new();
    for &t in ts {
        k2t_free.insert(t, check_k2t_free_cayley(cg, t)?);
    }
    Ok(FreenessReport {
        triangle_free: check_triangle_free(cg.generators()),
        k2t_free,
        nontrivial_4cycle_free: Some(match find_nontrivial_4cycle(cg.generators()) {
            Some(w) => Verdict::violated(w),
            None => Verdict::holds(),
        }),
    })
}

/// Full report for a plain graph: vertex-level checks only.
pub fn report_for_graph(g: &Graph, ts: &[u32]) -> Result<FreenessReport> {
    let mut k2t_free = BTreeMap::new();
    for &t in ts {
        k2t_free.insert(t, check_k2t_free_graph(g, t)?);
    }
    Ok(FreenessReport {
        triangle_free: check_triangle_free_graph(g),
        k2t_free,
        nontrivial_4cycle_free: None,
    })
}
