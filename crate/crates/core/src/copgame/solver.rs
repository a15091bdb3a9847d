//! Exact k-cop decision by a monotone backward fixpoint over the full state
//! space.
//!
//! States are (cop multiset, robber vertex, side to move). Capture states
//! seed a worklist; a robber-to-move state becomes cop-winning once all
//! robber moves lead to cop-winning states (tracked with per-state counters),
//! and a cop-to-move state becomes cop-winning the first time any of its
//! joint-move successors does, so joint moves are never enumerated up front.
//! Cop multisets are canonicalized by sorting and ranked combinatorially, so
//! the k! orderings of the cops collapse into one state.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Caps on solver effort. Exceeding a cap yields an inconclusive outcome,
/// never a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct SolveBudget {
    /// Largest admissible state space: (multisets of size k) * n * 2.
    pub max_states: u64,
    /// Wall-clock ceiling for the fixpoint.
    pub max_millis: u64,
}

impl Default for SolveBudget {
    fn default() -> Self {
        Self {
            max_states: 5_000_000,
            max_millis: 300_000,
        }
    }
}

/// Decision of one k-cop game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameVerdict {
    CopsWin,
    RobberWins,
    /// A budget cap was hit before the decision was reached.
    Inconclusive,
}

/// Result of one solver run.
#[derive(Debug)]
pub struct SolveOutcome {
    pub k: u32,
    pub verdict: GameVerdict,
    /// States marked cop-winning before the fixpoint (or the budget) was hit.
    pub states_explored: u64,
    /// Total size of the (attempted) state space.
    pub state_space: u64,
    pub elapsed: Duration,
    /// Winning move tables; present only on conclusive runs.
    pub solved: Option<SolvedGame>,
}

impl SolveOutcome {
    pub fn cops_win(&self) -> Option<bool> {
        match self.verdict {
            GameVerdict::CopsWin => Some(true),
            GameVerdict::RobberWins => Some(false),
            GameVerdict::Inconclusive => None,
        }
    }
}

const MAX_COPS: u32 = 8;

/// C(n + k - 1, k) without overflow, or `None` when it does not fit.
fn multiset_count(n: u64, k: u64) -> Option<u64> {
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul((n - 1 + i) as u128)?;
        acc /= i as u128; // exact: prefix products of binomials divide out
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Combinatorial ranking of sorted cop multisets: a nondecreasing tuple
/// (v_1..v_k) maps to the strictly increasing tuple u_i = v_i + i - 1, whose
/// colexicographic rank is the sum of C(u_i, i).
struct StateSpace {
    n: u32,
    k: usize,
    /// binom[i][j] = C(i, j) for i <= n + k, j <= k.
    binom: Vec<Vec<u64>>,
    multisets: u64,
}

impl std::fmt::Debug for StateSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StateSpace")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("multisets", &self.multisets)
            .finish()
    }
}

impl StateSpace {
    fn new(n: u32, k: u32) -> Option<Self> {
        let multisets = multiset_count(n as u64, k as u64)?;
        let k = k as usize;
        let rows = n as usize + k + 1;
        let mut binom = vec![vec![0u64; k + 1]; rows];
        for i in 0..rows {
            binom[i][0] = 1;
            for j in 1..=k {
                if i == 0 {
                    break;
                }
                binom[i][j] = binom[i - 1][j].checked_add(binom[i - 1][j - 1])?;
            }
        }
        Some(Self {
            n,
            k,
            binom,
            multisets,
        })
    }

    #[inline]
    fn rank(&self, sorted: &[u32]) -> u64 {
        sorted
            .iter()
            .enumerate()
            .map(|(i, &v)| self.binom[v as usize + i][i + 1])
            .sum()
    }

    fn unrank(&self, mut rank: u64, out: &mut Vec<u32>) {
        out.clear();
        out.resize(self.k, 0);
        for i in (1..=self.k).rev() {
            // largest u with C(u, i) <= rank
            let mut lo = i - 1;
            let mut hi = self.n as usize + i - 1;
            while lo < hi {
                let mid = (lo + hi + 1) / 2;
                if self.binom[mid][i] <= rank {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            rank -= self.binom[lo][i];
            out[i - 1] = (lo - (i - 1)) as u32;
        }
    }
}

/// Advances a sorted multiset tuple to its successor; false once exhausted.
fn next_nondecreasing(tuple: &mut [u32], n: u32) -> bool {
    for i in (0..tuple.len()).rev() {
        if tuple[i] + 1 < n {
            let v = tuple[i] + 1;
            for t in tuple.iter_mut().skip(i) {
                *t = v;
            }
            return true;
        }
    }
    false
}

/// Winning-region tables of a conclusive solve, with enough structure to
/// replay optimal cop moves and best robber responses.
#[derive(Debug)]
pub struct SolvedGame {
    n: u32,
    k: u32,
    space: StateSpace,
    closed: Vec<Vec<u32>>,
    win_cop: Vec<bool>,
    /// For each winning cop-to-move state, the multiset rank of the witness
    /// joint move (u32::MAX on capture states, where no move is needed).
    cop_witness: Vec<u32>,
    cops_win: bool,
}

impl SolvedGame {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn cops_win(&self) -> bool {
        self.cops_win
    }

    fn state(&self, cops: &[u32], robber: u32) -> usize {
        debug_assert!(cops.windows(2).all(|w| w[0] <= w[1]));
        (self.space.rank(cops) * self.n as u64 + robber as u64) as usize
    }

    /// True iff the cop-to-move state is in the cops' winning region.
    pub fn is_cop_win_state(&self, cops: &[u32], robber: u32) -> bool {
        self.win_cop[self.state(cops, robber)]
    }

    /// A winning initial placement: the least-rank multiset from which every
    /// robber placement loses. `None` when the cops cannot win.
    pub fn cop_placement(&self) -> Option<Vec<u32>> {
        let n = self.n as u64;
        let mut tuple = Vec::new();
        for m in 0..self.space.multisets {
            if (0..n).all(|r| self.win_cop[(m * n + r) as usize]) {
                self.space.unrank(m, &mut tuple);
                return Some(tuple);
            }
        }
        None
    }

    /// The recorded winning joint move from a cop-to-move state, as the new
    /// sorted multiset. Falls back to standing still outside the winning
    /// region.
    pub fn cop_move(&self, cops: &[u32], robber: u32) -> Vec<u32> {
        let id = self.state(cops, robber);
        let witness = self.cop_witness[id];
        if !self.win_cop[id] || witness == u32::MAX {
            return cops.to_vec();
        }
        let mut tuple = Vec::new();
        self.space.unrank(witness as u64, &mut tuple);
        tuple
    }

    /// Best robber placement against a given cop placement: the least-rank
    /// vertex outside the cops' winning region, or `None` if every placement
    /// loses.
    pub fn robber_placement(&self, cops: &[u32]) -> Option<u32> {
        let base = self.space.rank(cops) * self.n as u64;
        (0..self.n).find(|&r| !self.win_cop[(base + r as u64) as usize])
    }

    /// Best robber response from a robber-to-move state: the least-rank move
    /// (staying included) into a non-winning cop-to-move state when one
    /// exists, otherwise the least-rank non-suicidal move.
    pub fn robber_move(&self, cops: &[u32], robber: u32) -> u32 {
        let base = self.space.rank(cops) * self.n as u64;
        let moves = &self.closed[robber as usize];
        if let Some(&r) = moves
            .iter()
            .find(|&&r| !self.win_cop[(base + r as u64) as usize])
        {
            return r;
        }
        moves
            .iter()
            .copied()
            .find(|r| cops.binary_search(r).is_err())
            .unwrap_or(robber)
    }
}

/// Decides the k-cop game exactly: cops place first, the robber places
/// second, cops move first each round (jointly: every cop moves along an edge
/// or stays), and capture is any cop sharing the robber's vertex after either
/// side's move. The cops win iff some placement makes every robber placement
/// cop-winning.
pub fn k_cop_win(graph: &Graph, k: u32, budget: &SolveBudget) -> Result<SolveOutcome> {
    let start = Instant::now();
    if k == 0 {
        return Err(Error::Domain("the game needs at least one cop".into()));
    }
    if k > MAX_COPS {
        return Err(Error::Domain(format!("at most {MAX_COPS} cops supported")));
    }
    if graph.n() == 0 || !graph.is_connected() {
        return Err(Error::Domain(
            "the game is defined on nonempty connected graphs".into(),
        ));
    }
    let n = graph.n() as u32;

    let inconclusive = |space: u64, explored: u64| SolveOutcome {
        k,
        verdict: GameVerdict::Inconclusive,
        states_explored: explored,
        state_space: space,
        elapsed: start.elapsed(),
        solved: None,
    };

    let state_space = multiset_count(n as u64, k as u64)
        .and_then(|m| m.checked_mul(n as u64))
        .filter(|&s| s <= u32::MAX as u64)
        .and_then(|s| s.checked_mul(2));
    let state_space = match state_space {
        Some(s) if s <= budget.max_states => s,
        _ => return Ok(inconclusive(state_space.unwrap_or(u64::MAX), 0)),
    };
    let Some(space) = StateSpace::new(n, k) else {
        return Ok(inconclusive(state_space, 0));
    };
    let deadline = start + Duration::from_millis(budget.max_millis);

    let closed: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut c = graph.neighbors(v).to_vec();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();

    let half = (state_space / 2) as usize;
    let mut win_cop = vec![false; half];
    let mut win_rob = vec![false; half];
    let mut cop_witness = vec![u32::MAX; half];
    let mut counter = vec![0u32; half];
    for m in 0..space.multisets {
        for r in 0..n as u64 {
            counter[(m * n as u64 + r) as usize] = closed[r as usize].len() as u32;
        }
    }
    let mut queue: VecDeque<u64> = VecDeque::new();
    let mut explored = 0u64;

    // Seed: every state with the robber on a cop is a capture, on both turns.
    {
        let mut tuple = vec![0u32; k as usize];
        loop {
            let m = space.rank(&tuple);
            let mut prev = u32::MAX;
            for &c in &tuple {
                if c == prev {
                    continue;
                }
                prev = c;
                let id = (m * n as u64 + c as u64) as usize;
                win_cop[id] = true;
                win_rob[id] = true;
                explored += 2;
                queue.push_back(id as u64 * 2);
                queue.push_back(id as u64 * 2 + 1);
            }
            if !next_nondecreasing(&mut tuple, n) {
                break;
            }
        }
    }

    let mut tuple: Vec<u32> = Vec::with_capacity(k as usize);
    let mut combo = vec![0u32; k as usize];
    let mut idx = vec![0usize; k as usize];
    let mut pops = 0u64;
    while let Some(packed) = queue.pop_front() {
        pops += 1;
        if pops % 1024 == 0 && Instant::now() > deadline {
            return Ok(inconclusive(state_space, explored));
        }
        let robber_to_move = packed & 1 == 1;
        let id = (packed >> 1) as usize;
        let m = id as u64 / n as u64;
        let r = (id as u64 % n as u64) as u32;
        if robber_to_move {
            // A robber-to-move win propagates to every cop-to-move state that
            // can jointly move into this multiset; joint reachability is
            // symmetric on an undirected graph, so predecessors are exactly
            // the joint successors of the multiset itself.
            space.unrank(m, &mut tuple);
            idx.iter_mut().for_each(|i| *i = 0);
            'product: loop {
                for slot in 0..tuple.len() {
                    combo[slot] = closed[tuple[slot] as usize][idx[slot]];
                }
                combo.sort_unstable();
                let pid = (space.rank(&combo) * n as u64 + r as u64) as usize;
                if !win_cop[pid] {
                    win_cop[pid] = true;
                    cop_witness[pid] = m as u32;
                    explored += 1;
                    queue.push_back(pid as u64 * 2);
                }
                for slot in (0..idx.len()).rev() {
                    idx[slot] += 1;
                    if idx[slot] < closed[tuple[slot] as usize].len() {
                        continue 'product;
                    }
                    idx[slot] = 0;
                }
                break;
            }
        } else {
            // A cop-to-move win decrements every robber-to-move predecessor:
            // same multiset, robber one move away (or staying).
            for &rp in &closed[r as usize] {
                let pid = (m * n as u64 + rp as u64) as usize;
                if !win_rob[pid] {
                    counter[pid] -= 1;
                    if counter[pid] == 0 {
                        win_rob[pid] = true;
                        explored += 1;
                        queue.push_back(pid as u64 * 2 + 1);
                    }
                }
            }
        }
    }

    let cops_win = (0..space.multisets)
        .any(|m| (0..n as u64).all(|r| win_cop[(m * n as u64 + r) as usize]));
    drop(win_rob);
    drop(counter);
    let solved = SolvedGame {
        n,
        k,
        space,
        closed,
        win_cop,
        cop_witness,
        cops_win,
    };
    Ok(SolveOutcome {
        k,
        verdict: if cops_win {
            GameVerdict::CopsWin
        } else {
            GameVerdict::RobberWins
        },
        states_explored: explored,
        state_space,
        elapsed: start.elapsed(),
        solved: Some(solved),
    })
}

/// Either an exact cop number or the bracket the budget allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CopNumberResult {
    Exact(u32),
    /// Cop number known to be >= lo; <= hi when hi is present.
    Bracket { lo: u32, hi: Option<u32> },
}

/// Exact search outcome together with the per-k solver runs that produced it.
#[derive(Debug)]
pub struct CopNumberSearch {
    pub result: CopNumberResult,
    pub outcomes: Vec<SolveOutcome>,
}

/// Least k with a cop win, searching k = 1..=k_max under the budget. Budget
/// exhaustion degrades to a bracket over the solved ks.
pub fn exact_cop_number(graph: &Graph, k_max: u32, budget: &SolveBudget) -> Result<CopNumberSearch> {
    let mut outcomes = Vec::new();
    let mut lo = 1u32;
    for k in 1..=k_max {
        let out = k_cop_win(graph, k, budget)?;
        let verdict = out.verdict;
        outcomes.push(out);
        match verdict {
            GameVerdict::CopsWin => {
                return Ok(CopNumberSearch {
                    result: CopNumberResult::Exact(k),
                    outcomes,
                })
            }
            GameVerdict::RobberWins => lo = k + 1,
            GameVerdict::Inconclusive => {
                return Ok(CopNumberSearch {
                    result: CopNumberResult::Bracket { lo, hi: None },
                    outcomes,
                })
            }
        }
    }
    Ok(CopNumberSearch {
        result: CopNumberResult::Bracket { lo, hi: None },
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(g: &Graph, k: u32) -> bool {
        k_cop_win(g, k, &SolveBudget::default())
            .unwrap()
            .cops_win()
            .unwrap()
    }

    #[test]
    fn multiset_ranking_roundtrip() {
        let space = StateSpace::new(7, 3).unwrap();
        assert_eq!(space.multisets, 84); // C(9, 3)
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for a in 0..7u32 {
            for b in a..7 {
                for c in b..7 {
                    let r = space.rank(&[a, b, c]);
                    assert!(r < 84);
                    assert!(seen.insert(r));
                    space.unrank(r, &mut out);
                    assert_eq!(out, vec![a, b, c]);
                }
            }
        }
    }

    #[test]
    fn multiset_enumeration_is_complete() {
        let mut tuple = vec![0u32; 2];
        let space = StateSpace::new(5, 2).unwrap();
        let mut ranks = std::collections::HashSet::new();
        loop {
            assert!(ranks.insert(space.rank(&tuple)));
            if !next_nondecreasing(&mut tuple, 5) {
                break;
            }
        }
        assert_eq!(ranks.len() as u64, space.multisets);
    }

    #[test]
    fn paths_and_trees_are_one_cop_win() {
        assert!(solve(&Graph::path(4), 1));
        assert!(solve(&Graph::path(10), 1));
        assert!(solve(&Graph::star(5), 1));
        assert!(solve(&Graph::path(1), 1));
    }

    #[test]
    fn four_cycle_needs_two_cops() {
        let c4 = Graph::cycle(4);
        assert!(!solve(&c4, 1));
        assert!(solve(&c4, 2));
    }

    #[test]
    fn complete_graphs_are_one_cop_win() {
        for n in 1..=6 {
            assert!(solve(&Graph::complete(n), 1));
        }
    }

    #[test]
    fn petersen_needs_three_cops() {
        let pet = Graph::petersen();
        assert!(!solve(&pet, 2));
        assert!(solve(&pet, 3));
        let search = exact_cop_number(&pet, 4, &SolveBudget::default()).unwrap();
        assert_eq!(search.result, CopNumberResult::Exact(3));
    }

    #[test]
    fn verdicts_are_monotone_in_k() {
        for g in [Graph::cycle(7), Graph::petersen(), Graph::path(6)] {
            let mut prev = false;
            for k in 1..=4 {
                let now = solve(&g, k);
                assert!(!prev || now, "monotonicity violated at k = {k}");
                prev = now;
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let tiny = SolveBudget {
            max_states: 10,
            max_millis: 1000,
        };
        let out = k_cop_win(&Graph::cycle(6), 2, &tiny).unwrap();
        assert_eq!(out.verdict, GameVerdict::Inconclusive);
        assert!(out.solved.is_none());
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            k_cop_win(&g, 1, &SolveBudget::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn strategy_tables_replay_to_capture() {
        // On a cop-win instance, following the recorded witness moves reaches
        // capture within the state-space bound no matter what the robber does.
        let g = Graph::cycle(6);
        let out = k_cop_win(&g, 2, &SolveBudget::default()).unwrap();
        let solved = out.solved.unwrap();
        assert!(solved.cops_win());
        let placement = solved.cop_placement().unwrap();
        for start in 0..6u32 {
            if placement.binary_search(&start).is_ok() {
                continue;
            }
            let mut cops = placement.clone();
            let mut robber = start;
            let mut caught = false;
            for _ in 0..out.state_space {
                cops = solved.cop_move(&cops, robber);
                if cops.binary_search(&robber).is_ok() {
                    caught = true;
                    break;
                }
                robber = solved.robber_move(&cops, robber);
                if cops.binary_search(&robber).is_ok() {
                    caught = true;
                    break;
                }
            }
            assert!(caught, "robber starting at {start} escaped");
        }
    }

    #[test]
    fn losing_side_robber_table_survives() {
        let g = Graph::cycle(7);
        let out = k_cop_win(&g, 1, &SolveBudget::default()).unwrap();
        let solved = out.solved.unwrap();
        assert!(!solved.cops_win());
        let mut cops = vec![0u32];
        let mut robber = solved.robber_placement(&cops).unwrap();
        for _ in 0..10 * g.n() {
            cops = solved.cop_move(&cops, robber); // stays outside its winning region
            assert!(cops.binary_search(&robber).is_err());
            robber = solved.robber_move(&cops, robber);
            assert!(cops.binary_search(&robber).is_err());
        }
    }
}
