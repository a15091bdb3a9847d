//! Slow reference decision of the k-cop game, for cross-checking the
//! worklist solver on small instances.
//!
//! This is the textbook monotone fixpoint computed the naive way: full sweeps
//! over every state, re-deriving each state's value from its successors, until
//! a sweep changes nothing. States are looked up in a hash map; joint cop
//! moves are enumerated forward. Nothing here shares code with the
//! production solver.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn sorted_multisets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut tuple = vec![0u32; k as usize];
    loop {
        out.push(tuple.clone());
        let mut advanced = false;
        for i in (0..tuple.len()).rev() {
            if tuple[i] + 1 < n {
                let v = tuple[i] + 1;
                for t in tuple.iter_mut().skip(i) {
                    *t = v;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

fn joint_moves(closed: &[Vec<u32>], cops: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &c in cops {
        let mut next = Vec::new();
        for partial in &out {
            for &m in &closed[c as usize] {
                let mut p = partial.clone();
                p.push(m);
                next.push(p);
            }
        }
        out = next;
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out
}

/// Exact k-cop decision by repeated full sweeps until stabilization.
pub fn k_cop_win_reference(graph: &Graph, k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("the game needs at least one cop".into()));
    }
    if graph.n() == 0 || !graph.is_connected() {
        return Err(Error::Domain(
            "the game is defined on nonempty connected graphs".into(),
        ));
    }
    let n = graph.n() as u32;
    let closed: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut c = graph.neighbors(v).to_vec();
            c.push(v);
            c
        })
        .collect();

    let multisets = sorted_multisets(n, k);
    let index: HashMap<Vec<u32>, usize> = multisets
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let nm = multisets.len();
    let mut win_cop = vec![false; nm * n as usize];
    let mut win_rob = vec![false; nm * n as usize];
    let id = |mi: usize, r: u32| mi * n as usize + r as usize;

    loop {
        let mut changed = false;
        for (mi, cops) in multisets.iter().enumerate() {
            for r in 0..n {
                let capture = cops.contains(&r);
                if capture {
                    if !win_cop[id(mi, r)] {
                        win_cop[id(mi, r)] = true;
                        changed = true;
                    }
                    if !win_rob[id(mi, r)] {
                        win_rob[id(mi, r)] = true;
                        changed = true;
                    }
                    continue;
                }
                if !win_cop[id(mi, r)] {
                    let wins = joint_moves(&closed, cops)
                        .iter()
                        .any(|c2| c2.contains(&r) || win_rob[id(index[c2], r)]);
                    if wins {
                        win_cop[id(mi, r)] = true;
                        changed = true;
                    }
                }
                if !win_rob[id(mi, r)] {
                    let wins = closed[r as usize]
                        .iter()
                        .all(|&r2| cops.contains(&r2) || win_cop[id(mi, r2)]);
                    if wins {
                        win_rob[id(mi, r)] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    Ok(multisets
        .iter()
        .enumerate()
        .any(|(mi, _)| (0..n).all(|r| win_cop[id(mi, r)])))
}
