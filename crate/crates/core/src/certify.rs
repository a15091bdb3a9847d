//! Cop-number bound certificates: turns verified freeness facts into integer
//! lower bounds, pairs them with the abelian-Cayley upper bound, folds in
//! solver evidence, and emits the per-family target comparisons.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::copgame::{GameVerdict, SolveOutcome};
use crate::error::{Error, Result};
use crate::freeness::FreenessReport;

/// Provenance of a bound. The serialized tags are part of the certificate
/// format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundRule {
    /// K_{2,t}-free with minimum degree delta: c >= delta / t.
    #[serde(rename = "lemma-2.1")]
    K2tMinDegree,
    /// Triangle-free and K_{2,t}-free: every cop set of size <= delta/(t-1)
    /// is evadable, so c >= floor(delta/(t-1)) + 1.
    #[serde(rename = "lemma-2.2")]
    TriangleK2t,
    /// Connected abelian Cayley: c <= ceil((|S|+1)/2).
    #[serde(rename = "frankl")]
    Frankl,
    /// Reference-only 7*sqrt(n) upper bound for abelian Cayley graphs.
    #[serde(rename = "bradshaw")]
    Bradshaw,
    /// Derived from conclusive game solves.
    #[serde(rename = "solver-exact")]
    SolverExact,
    /// c >= 1 on any nonempty connected graph.
    #[serde(rename = "trivial")]
    Trivial,
}

/// An integer bound with its provenance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: u64,
    pub rule: BoundRule,
}

/// Lower bound from K_{2,t}-freeness: the least integer consistent with
/// c >= delta/t. Requires t >= 3 and a freeness report confirming the
/// premise.
pub fn lower_bound_k2t(delta: u64, t: u32, freeness: &FreenessReport) -> Result<Bound> {
    if t < 3 {
        return Err(Error::Domain(format!(
            "the K_{{2,t}} bound requires t >= 3, got {t}"
        )));
    }
    if !freeness.is_k2t_free(t) {
        return Err(Error::UnprovenPremise(format!(
            "K_{{2,{t}}}-freeness not verified"
        )));
    }
    Ok(Bound {
        value: delta.div_ceil(t as u64),
        rule: BoundRule::K2tMinDegree,
    })
}

/// Lower bound from joint triangle- and K_{2,t}-freeness: every cop multiset
/// of size <= delta/(t-1) is evadable, so c >= floor(delta/(t-1)) + 1.
/// Requires t >= 3; for t = 2 a cop standing on a neighbor of v covers two
/// vertices of the closed neighborhood and the per-cop accounting breaks.
pub fn lower_bound_c3_k2t(delta: u64, t: u32, freeness: &FreenessReport) -> Result<Bound> {
    if t < 3 {
        return Err(Error::Domain(format!(
            "the triangle-free K_{{2,t}} bound requires t >= 3, got {t}"
        )));
    }
    if !freeness.triangle_free.free {
        return Err(Error::UnprovenPremise(
            "triangle-freeness not verified".into(),
        ));
    }
    if !freeness.is_k2t_free(t) {
        return Err(Error::UnprovenPremise(format!(
            "K_{{2,{t}}}-freeness not verified"
        )));
    }
    Ok(Bound {
        value: delta / (t as u64 - 1) + 1,
        rule: BoundRule::TriangleK2t,
    })
}

/// Upper bound for connected abelian Cayley graphs: ceil((|S| + 1) / 2).
pub fn frankl_upper_bound(s_size: u64) -> Bound {
    Bound {
        value: (s_size + 1).div_ceil(2),
        rule: BoundRule::Frankl,
    }
}

/// The 7*sqrt(n) reference value; reported as metadata, never as the binding
/// upper bound.
pub fn bradshaw_reference(n: u64) -> f64 {
    7.0 * (n as f64).sqrt()
}

/// One solver run in certificate form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KOutcome {
    pub k: u32,
    /// `None` when the run hit its budget.
    pub cops_win: Option<bool>,
    pub states_explored: u64,
    pub elapsed_ms: u64,
}

/// Aggregated solver evidence over several k.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverEvidence {
    pub attempted: Vec<KOutcome>,
    pub inconclusive: bool,
}

impl SolverEvidence {
    pub fn from_outcomes(outcomes: &[SolveOutcome]) -> Self {
        let attempted: Vec<KOutcome> = outcomes
            .iter()
            .map(|o| KOutcome {
                k: o.k,
                cops_win: o.cops_win(),
                states_explored: o.states_explored,
                elapsed_ms: o.elapsed.as_millis() as u64,
            })
            .collect();
        let inconclusive = outcomes
            .iter()
            .any(|o| o.verdict == GameVerdict::Inconclusive);
        Self {
            attempted,
            inconclusive,
        }
    }

    /// Largest k proven to lose, if any.
    pub fn highest_false(&self) -> Option<u32> {
        self.attempted
            .iter()
            .filter(|o| o.cops_win == Some(false))
            .map(|o| o.k)
            .max()
    }

    /// Smallest k proven to win, if any.
    pub fn lowest_true(&self) -> Option<u32> {
        self.attempted
            .iter()
            .filter(|o| o.cops_win == Some(true))
            .map(|o| o.k)
            .min()
    }
}

/// Graph identification block of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub n: u64,
    pub delta: u64,
}

/// The per-family quantitative target a certificate is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremTarget {
    /// Residue construction over Z_n: lower bound must exceed sqrt(n/8)/3.
    ResidueSqrt,
    /// Norm-one construction over GF(p^k): lower bound must exceed sqrt(n)/3.
    NormOneSqrt,
    /// Parabola construction over Z_5 x Z_p x Z_p: the pinned cop number
    /// must exceed sqrt(n/5).
    ParabolaSqrt,
    /// Greedy construction: |S|^3 + |S|^2 + |S| >= n certifies termination.
    GreedyCubeRoot,
}

/// Comparison row of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub target_expr: String,
    pub target_value: f64,
    pub achieved: f64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    /// Present only when solver evidence pins the value.
    pub exact: Option<u64>,
}

/// A complete cop-number certificate for one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CopCertificate {
    pub graph: GraphMeta,
    pub freeness: FreenessReport,
    pub bounds: Bounds,
    pub theorem: Option<TheoremRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverEvidence>,
}

/// Assembles a certificate: picks the best lower bound whose premise the
/// freeness report verifies (the triangle-free rule dominates when it
/// applies), attaches the Cayley upper bound and solver evidence, and emits
/// the requested target comparison. Bounds that cross signal a bug upstream
/// and are rejected.
pub fn certify(
    meta: GraphMeta,
    freeness: &FreenessReport,
    s_size: Option<u64>,
    connected_abelian_cayley: bool,
    solver: Option<&SolverEvidence>,
    target: Option<TheoremTarget>,
) -> Result<CopCertificate> {
    let delta = meta.delta;
    let mut lower: Option<Bound> = None;
    let mut consider = |candidate: Bound| {
        if lower.map(|b| candidate.value > b.value).unwrap_or(true) {
            lower = Some(candidate);
        }
    };
    for (&t, verdict) in &freeness.k2t_free {
        if !verdict.free || t < 3 {
            continue;
        }
        consider(Bound {
            value: delta.div_ceil(t as u64),
            rule: BoundRule::K2tMinDegree,
        });
        if freeness.triangle_free.free {
            consider(Bound {
                value: delta / (t as u64 - 1) + 1,
                rule: BoundRule::TriangleK2t,
            });
        }
    }
    if let Some(k) = solver.and_then(SolverEvidence::highest_false) {
        consider(Bound {
            value: k as u64 + 1,
            rule: BoundRule::SolverExact,
        });
    }
    let lower = lower.unwrap_or(Bound {
        value: 1,
        rule: BoundRule::Trivial,
    });

    let mut upper: Option<Bound> = None;
    if let Some(s) = s_size {
        if connected_abelian_cayley {
            upper = Some(frankl_upper_bound(s));
        }
    }
    if let Some(k) = solver.and_then(SolverEvidence::lowest_true) {
        if upper.map(|b| (k as u64) < b.value).unwrap_or(true) {
            upper = Some(Bound {
                value: k as u64,
                rule: BoundRule::SolverExact,
            });
        }
    }

    if let Some(up) = upper {
        if lower.value > up.value {
            return Err(Error::Inconsistency(format!(
                "lower bound {} ({:?}) exceeds upper bound {} ({:?})",
                lower.value, lower.rule, up.value, up.rule
            )));
        }
    }

    // Exactness requires solver provenance: a conclusive run must close the
    // bracket from at least one side.
    let exact = match (solver, upper) {
        (Some(ev), Some(up)) if lower.value == up.value => {
            let solver_touches = ev.highest_false().map(|k| k as u64 + 1) == Some(lower.value)
                || ev.lowest_true().map(u64::from) == Some(up.value);
            solver_touches.then_some(lower.value)
        }
        _ => None,
    };

    let n = meta.n as f64;
    let theorem = target.map(|t| match t {
        TheoremTarget::ResidueSqrt => {
            let target_value = (n / 8.0).sqrt() / 3.0;
            let achieved = lower.value as f64;
            TheoremRow {
                target_expr: "lower > sqrt(n/8)/3".into(),
                target_value,
                achieved,
                satisfied: achieved > target_value,
            }
        }
        TheoremTarget::NormOneSqrt => {
            let target_value = n.sqrt() / 3.0;
            let achieved = lower.value as f64;
            TheoremRow {
                target_expr: "lower > sqrt(n)/3".into(),
                target_value,
                achieved,
                satisfied: achieved > target_value,
            }
        }
        TheoremTarget::ParabolaSqrt => {
            let target_value = (n / 5.0).sqrt();
            // exact when the solver pinned it, otherwise the bracket floor
            let achieved = exact.map(|e| e as f64).unwrap_or(lower.value as f64);
            TheoremRow {
                target_expr: "exact > sqrt(n/5)".into(),
                target_value,
                achieved,
                satisfied: achieved > target_value,
            }
        }
        TheoremTarget::GreedyCubeRoot => {
            let s = s_size.unwrap_or(0);
            let achieved = (s * s * s + s * s + s) as f64;
            TheoremRow {
                target_expr: "|S|^3 + |S|^2 + |S| >= n".into(),
                target_value: n,
                achieved,
                satisfied: achieved >= n,
            }
        }
    });

    Ok(CopCertificate {
        graph: meta,
        freeness: freeness.clone(),
        bounds: Bounds {
            lower: Some(lower),
            upper,
            exact,
        },
        theorem,
        solver: solver.cloned(),
    })
}
