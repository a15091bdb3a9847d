//! Pluggable cop and robber strategies, and the name registry the CLI uses.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::solver::SolvedGame;
use super::{dominated, evading_move};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cop team. `step` receives the sorted cop positions and must return one
/// new position per cop, aligned index-by-index; each cop may move along an
/// edge or stay.
pub trait CopStrategy {
    fn name(&self) -> &'static str;
    fn place(&mut self, graph: &Graph, k: u32, rng: &mut ChaCha8Rng) -> Vec<u32>;
    fn step(&mut self, graph: &Graph, cops: &[u32], robber: u32, rng: &mut ChaCha8Rng) -> Vec<u32>;
}

/// The robber side; the same movement rule applies.
pub trait RobberStrategy {
    fn name(&self) -> &'static str;
    fn place(&mut self, graph: &Graph, cops: &[u32], rng: &mut ChaCha8Rng) -> u32;
    fn step(&mut self, graph: &Graph, cops: &[u32], robber: u32, rng: &mut ChaCha8Rng) -> u32;
}

fn random_vertex(graph: &Graph, rng: &mut ChaCha8Rng) -> u32 {
    rng.gen_range(0..graph.n() as u32)
}

struct RandomCops;

impl CopStrategy for RandomCops {
    fn name(&self) -> &'static str {
        "random"
    }

    fn place(&mut self, graph: &Graph, k: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
        (0..k).map(|_| random_vertex(graph, rng)).collect()
    }

    fn step(&mut self, graph: &Graph, cops: &[u32], _robber: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
        cops.iter()
            .map(|&c| {
                let deg = graph.degree(c);
                let pick = rng.gen_range(0..=deg);
                if pick == deg {
                    c
                } else {
                    graph.neighbors(c)[pick]
                }
            })
            .collect()
    }
}

/// Each cop steps to the closed-neighborhood vertex closest to the robber
/// (ties to the least vertex), using fresh BFS distances from the robber.
struct GreedyDistanceCops;

impl CopStrategy for GreedyDistanceCops {
    fn name(&self) -> &'static str {
        "greedy-distance"
    }

    fn place(&mut self, graph: &Graph, k: u32, rng: &mut ChaCha8Rng) -> Vec<u32> {
        (0..k).map(|_| random_vertex(graph, rng)).collect()
    }

    fn step(&mut self, graph: &Graph, cops: &[u32], robber: u32, _rng: &mut ChaCha8Rng) -> Vec<u32> {
        let dist = graph.bfs_distances(robber);
        cops.iter()
            .map(|&c| {
                let mut best = c;
                for &w in graph.neighbors(c) {
                    if dist[w as usize] < dist[best as usize]
                        || (dist[w as usize] == dist[best as usize] && w < best)
                    {
                        best = w;
                    }
                }
                best
            })
            .collect()
    }
}

/// Replays the winning move table of a completed solve.
struct OptimalCops {
    solved: Arc<SolvedGame>,
}

impl CopStrategy for OptimalCops {
    fn name(&self) -> &'static str {
        "optimal"
    }

    fn place(&mut self, _graph: &Graph, k: u32, _rng: &mut ChaCha8Rng) -> Vec<u32> {
        self.solved
            .cop_placement()
            .unwrap_or_else(|| vec![0; k as usize])
    }

    fn step(&mut self, graph: &Graph, cops: &[u32], robber: u32, _rng: &mut ChaCha8Rng) -> Vec<u32> {
        let target = self.solved.cop_move(cops, robber);
        align_multiset_move(graph, cops, &target).unwrap_or_else(|| cops.to_vec())
    }
}

/// Assigns each cop in `from` a destination in the multiset `to` such that
/// every move is along an edge or stays; backtracking over the k! pairings.
fn align_multiset_move(graph: &Graph, from: &[u32], to: &[u32]) -> Option<Vec<u32>> {
    fn assign(
        graph: &Graph,
        from: &[u32],
        remaining: &mut Vec<u32>,
        acc: &mut Vec<u32>,
    ) -> bool {
        if acc.len() == from.len() {
            return true;
        }
        let c = from[acc.len()];
        for i in 0..remaining.len() {
            let t = remaining[i];
            if t == c || graph.has_edge(c, t) {
                remaining.swap_remove(i);
                acc.push(t);
                if assign(graph, from, remaining, acc) {
                    return true;
                }
                acc.pop();
                remaining.push(t);
            }
        }
        false
    }
    let mut remaining = to.to_vec();
    let mut acc = Vec::with_capacity(from.len());
    assign(graph, from, &mut remaining, &mut acc).then_some(acc)
}

struct RandomRobber;

impl RobberStrategy for RandomRobber {
    fn name(&self) -> &'static str {
        "random"
    }

    fn place(&mut self, graph: &Graph, cops: &[u32], rng: &mut ChaCha8Rng) -> u32 {
        let free: Vec<u32> = (0..graph.n() as u32).filter(|v| !cops.contains(v)).collect();
        if free.is_empty() {
            0
        } else {
            free[rng.gen_range(0..free.len())]
        }
    }

    fn step(&mut self, graph: &Graph, _cops: &[u32], robber: u32, rng: &mut ChaCha8Rng) -> u32 {
        let deg = graph.degree(robber);
        let pick = rng.gen_range(0..=deg);
        if pick == deg {
            robber
        } else {
            graph.neighbors(robber)[pick]
        }
    }
}

/// The constructive evader: place at the least-rank undominated vertex, move
/// to the least-rank undominated closed-neighborhood vertex each turn, stay
/// when everything is dominated.
struct EvaderRobber;

impl RobberStrategy for EvaderRobber {
    fn name(&self) -> &'static str {
        "evader"
    }

    fn place(&mut self, graph: &Graph, cops: &[u32], _rng: &mut ChaCha8Rng) -> u32 {
        let dom = dominated(graph, cops);
        (0..graph.n() as u32)
            .find(|&v| !dom.contains(v))
            .or_else(|| (0..graph.n() as u32).find(|v| !cops.contains(v)))
            .unwrap_or(0)
    }

    fn step(&mut self, graph: &Graph, cops: &[u32], robber: u32, _rng: &mut ChaCha8Rng) -> u32 {
        evading_move(graph, cops, robber)
            .ok()
            .flatten()
            .unwrap_or(robber)
    }
}

struct StayRobber;

impl RobberStrategy for StayRobber {
    fn name(&self) -> &'static str {
        "stay"
    }

    fn place(&mut self, graph: &Graph, cops: &[u32], _rng: &mut ChaCha8Rng) -> u32 {
        (0..graph.n() as u32).find(|v| !cops.contains(v)).unwrap_or(0)
    }

    fn step(&mut self, _graph: &Graph, _cops: &[u32], robber: u32, _rng: &mut ChaCha8Rng) -> u32 {
        robber
    }
}

/// Best responses from a completed solve: stays outside the cops' winning
/// region for as long as one exists.
struct OptimalRobber {
    solved: Arc<SolvedGame>,
}

impl RobberStrategy for OptimalRobber {
    fn name(&self) -> &'static str {
        "optimal"
    }

    fn place(&mut self, graph: &Graph, cops: &[u32], _rng: &mut ChaCha8Rng) -> u32 {
        self.solved
            .robber_placement(cops)
            .or_else(|| (0..graph.n() as u32).find(|v| !cops.contains(v)))
            .unwrap_or(0)
    }

    fn step(&mut self, _graph: &Graph, cops: &[u32], robber: u32, _rng: &mut ChaCha8Rng) -> u32 {
        self.solved.robber_move(cops, robber)
    }
}

/// Looks up a cop strategy by registry name. `optimal` requires a completed
/// solve.
pub fn cop_strategy(
    name: &str,
    solved: Option<Arc<SolvedGame>>,
) -> Result<Box<dyn CopStrategy + Send>> {
    match name {
        "random" => Ok(Box::new(RandomCops)),
        "greedy-distance" => Ok(Box::new(GreedyDistanceCops)),
        "optimal" => match solved {
            Some(solved) => Ok(Box::new(OptimalCops { solved })),
            None => Err(Error::Domain(
                "the optimal cop strategy requires a completed solve".into(),
            )),
        },
        other => Err(Error::Domain(format!("unknown cop strategy '{other}'"))),
    }
}

/// Looks up a robber strategy by registry name. `optimal` requires a
/// completed solve.
pub fn robber_strategy(
    name: &str,
    solved: Option<Arc<SolvedGame>>,
) -> Result<Box<dyn RobberStrategy + Send>> {
    match name {
        "random" => Ok(Box::new(RandomRobber)),
        "evader" => Ok(Box::new(EvaderRobber)),
        "stay" => Ok(Box::new(StayRobber)),
        "optimal" => match solved {
            Some(solved) => Ok(Box::new(OptimalRobber { solved })),
            None => Err(Error::Domain(
                "the optimal robber strategy requires a completed solve".into(),
            )),
        },
        other => Err(Error::Domain(format!("unknown robber strategy '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn registry_names() {
        assert!(cop_strategy("random", None).is_ok());
        assert!(cop_strategy("greedy-distance", None).is_ok());
        assert!(cop_strategy("optimal", None).is_err());
        assert!(cop_strategy("bogus", None).is_err());
        assert!(robber_strategy("evader", None).is_ok());
        assert!(robber_strategy("stay", None).is_ok());
        assert!(robber_strategy("optimal", None).is_err());
    }

    #[test]
    fn greedy_cops_close_distance() {
        let g = Graph::path(6);
        let mut strat = GreedyDistanceCops;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let moves = strat.step(&g, &[0], 5, &mut rng);
        assert_eq!(moves, vec![1]);
    }

    #[test]
    fn align_preserves_legality() {
        let g = Graph::cycle(6);
        let aligned = align_multiset_move(&g, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(aligned.len(), 2);
        for (i, &c) in [0u32, 2].iter().enumerate() {
            let t = aligned[i];
            assert!(t == c || g.has_edge(c, t));
        }
    }

    #[test]
    fn evader_avoids_domination() {
        let g = Graph::cycle(5);
        let mut strat = EvaderRobber;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let v = strat.place(&g, &[0], &mut rng);
        assert_eq!(v, 2); // least undominated
        assert_eq!(strat.step(&g, &[0], 2, &mut rng), 2);
    }
}
