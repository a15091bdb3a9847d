//! Match simulation between pluggable strategies, with deterministic
//! transcripts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::strategies::{CopStrategy, RobberStrategy};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which action produced a transcript line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mover {
    CopPlacement,
    RobberPlacement,
    Cops,
    Robber,
}

/// One state per line: round number, positions after the move, who moved,
/// and the move itself (new cop positions or the robber's new vertex).
#[derive(Clone, Debug, Serialize)]
pub struct TranscriptLine {
    pub round: u32,
    pub mover: Mover,
    pub cops: Vec<u32>,
    pub robber: Option<u32>,
    #[serde(rename = "move")]
    pub mv: serde_json::Value,
}

/// How a match ended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Captured { round: u32 },
    Survived { rounds: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub lines: Vec<TranscriptLine>,
    pub outcome: Outcome,
}

impl Transcript {
    /// JSON lines: one line per state, then one outcome line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&serde_json::to_string(line).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.outcome).expect("serializable"));
        out.push('\n');
        out
    }
}

fn fault(strategy: &str, reason: String) -> Error {
    Error::StrategyFault {
        strategy: strategy.to_string(),
        reason,
    }
}

/// Plays one match: placement, then alternating rounds with the cops moving
/// first, until capture or `max_rounds` full rounds have been played.
/// Deterministic given the seed. Illegal moves abort with a strategy fault
/// naming the offender.
pub fn simulate(
    graph: &Graph,
    k: u32,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: u32,
    seed: u64,
) -> Result<Transcript> {
    if max_rounds == 0 {
        return Err(Error::Domain("max_rounds must be at least 1".into()));
    }
    if k == 0 {
        return Err(Error::Domain("the game needs at least one cop".into()));
    }
    let n = graph.n() as u32;
    if n == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();

    let mut cop_pos = cops.place(graph, k, &mut rng);
    if cop_pos.len() != k as usize || cop_pos.iter().any(|&c| c >= n) {
        return Err(fault(
            cops.name(),
            format!("illegal placement {cop_pos:?} for {k} cops on {n} vertices"),
        ));
    }
    cop_pos.sort_unstable();
    lines.push(TranscriptLine {
        round: 0,
        mover: Mover::CopPlacement,
        cops: cop_pos.clone(),
        robber: None,
        mv: serde_json::json!(cop_pos),
    });

    let robber_pos = robber.place(graph, &cop_pos, &mut rng);
    if robber_pos >= n {
        return Err(fault(
            robber.name(),
            format!("illegal placement {robber_pos} on {n} vertices"),
        ));
    }
    let mut robber_pos = robber_pos;
    lines.push(TranscriptLine {
        round: 0,
        mover: Mover::RobberPlacement,
        cops: cop_pos.clone(),
        robber: Some(robber_pos),
        mv: serde_json::json!(robber_pos),
    });
    if cop_pos.binary_search(&robber_pos).is_ok() {
        return Ok(Transcript {
            lines,
            outcome: Outcome::Captured { round: 0 },
        });
    }

    for round in 1..=max_rounds {
        let proposed = cops.step(graph, &cop_pos, robber_pos, &mut rng);
        if proposed.len() != k as usize {
            return Err(fault(
                cops.name(),
                format!("returned {} moves for {k} cops", proposed.len()),
            ));
        }
        for (&from, &to) in cop_pos.iter().zip(&proposed) {
            if to >= n || (to != from && !graph.has_edge(from, to)) {
                return Err(fault(
                    cops.name(),
                    format!("cop move {from} -> {to} is not along an edge"),
                ));
            }
        }
        cop_pos = proposed;
        cop_pos.sort_unstable();
        lines.push(TranscriptLine {
            round,
            mover: Mover::Cops,
            cops: cop_pos.clone(),
            robber: Some(robber_pos),
            mv: serde_json::json!(cop_pos),
        });
        if cop_pos.binary_search(&robber_pos).is_ok() {
            return Ok(Transcript {
                lines,
                outcome: Outcome::Captured { round },
            });
        }

        let next = robber.step(graph, &cop_pos, robber_pos, &mut rng);
        if next >= n || (next != robber_pos && !graph.has_edge(robber_pos, next)) {
            return Err(fault(
                robber.name(),
                format!("robber move {robber_pos} -> {next} is not along an edge"),
            ));
        }
        robber_pos = next;
        lines.push(TranscriptLine {
            round,
            mover: Mover::Robber,
            cops: cop_pos.clone(),
            robber: Some(robber_pos),
            mv: serde_json::json!(robber_pos),
        });
        if cop_pos.binary_search(&robber_pos).is_ok() {
            return Ok(Transcript {
                lines,
                outcome: Outcome::Captured { round },
            });
        }
    }

    Ok(Transcript {
        lines,
        outcome: Outcome::Survived { rounds: max_rounds },
    })
}
