//! The pursuit game engine: exact k-cop decisions by backward-induction
//! fixpoint, domination queries, the constructive evasion move, pluggable
//! strategies, and match simulation.

mod reference;
mod simulate;
mod solver;
mod strategies;

pub use reference::k_cop_win_reference;
pub use simulate::{simulate, Mover, Outcome, Transcript, TranscriptLine};
pub use solver::{
    exact_cop_number, k_cop_win, CopNumberResult, CopNumberSearch, GameVerdict, SolveBudget,
    SolveOutcome, SolvedGame,
};
pub use strategies::{cop_strategy, robber_strategy, CopStrategy, RobberStrategy};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whose move it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Turn {
    Cops,
    Robber,
}

/// A game configuration: cop positions as a sorted multiset (cops are
/// interchangeable and may stack), the robber's vertex, and the side to move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameState {
    cops: Vec<u32>,
    pub robber: u32,
    pub turn: Turn,
}

impl GameState {
    pub fn new(mut cops: Vec<u32>, robber: u32, turn: Turn) -> Self {
        cops.sort_unstable();
        Self { cops, robber, turn }
    }

    pub fn cops(&self) -> &[u32] {
        &self.cops
    }

    /// Capture means the robber shares a vertex with some cop.
    pub fn is_capture(&self) -> bool {
        self.cops.binary_search(&self.robber).is_ok()
    }
}

/// The union of closed neighborhoods of a set of cop positions: every vertex
/// at distance at most 1 from a cop.
#[derive(Clone, Debug)]
pub struct DominatedSet {
    mask: Vec<bool>,
    count: usize,
}

impl DominatedSet {
    pub fn contains(&self, v: u32) -> bool {
        self.mask[v as usize]
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Dominated vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &d)| d)
            .map(|(v, _)| v as u32)
    }
}

/// Computes the dominated set of a cop multiset. Empty cops dominate nothing.
pub fn dominated(graph: &Graph, cops: &[u32]) -> DominatedSet {
    let mut mask = vec![false; graph.n()];
    let mut count = 0;
    let mut mark = |v: u32| {
        if !mask[v as usize] {
            mask[v as usize] = true;
            count += 1;
        }
    };
    for &c in cops {
        mark(c);
        for &w in graph.neighbors(c) {
            mark(w);
        }
    }
    DominatedSet { mask, count }
}

/// The constructive evasion move: the least-rank vertex in N(v) ∪ {v} that is
/// not dominated by the cops, or `None` when the whole closed neighborhood is
/// dominated. Errors if the robber is already standing on a cop.
pub fn evading_move(graph: &Graph, cops: &[u32], v: u32) -> Result<Option<u32>> {
    if cops.contains(&v) {
        return Err(Error::AlreadyCaptured { vertex: v });
    }
    let dom = dominated(graph, cops);
    let mut candidates: Vec<u32> = graph.neighbors(v).to_vec();
    candidates.push(v);
    candidates.sort_unstable();
    Ok(candidates.into_iter().find(|&u| !dom.contains(u)))
}
