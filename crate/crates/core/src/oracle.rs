//! Brute-force ground truth for tiny instances.
//!
//! Searches the tangle definition directly: a state is the current wire
//! order plus the swaps still to be performed. This module deliberately
//! shares no search code with the solvers.

use std::collections::HashSet;

use crate::error::{Result, TangleError};
use crate::heightmin::Height;
use crate::model::SwapList;

/// Largest number of sublists the oracle accepts.
pub const ORACLE_MAX_SUBLISTS: u64 = 1_000_000;
/// Largest wire count the oracle accepts.
pub const ORACLE_MAX_WIRES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct State {
    order: Vec<u8>,
    remaining: Vec<u32>,
}

struct Instance {
    n: usize,
}

impl Instance {
    fn new(list: &SwapList) -> Result<(Self, State)> {
        let n = list.n();
        if n > ORACLE_MAX_WIRES {
            return Err(TangleError::Resource {
                what: "oracle wires",
                needed: n as u128,
                limit: ORACLE_MAX_WIRES as u128,
            });
        }
        let lambda = list.sublist_count();
        if lambda > ORACLE_MAX_SUBLISTS as u128 {
            return Err(TangleError::Resource {
                what: "oracle sublists",
                needed: lambda,
                limit: ORACLE_MAX_SUBLISTS as u128,
            });
        }
        let mut remaining = vec![0u32; n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                remaining[(i - 1) * n + (j - 1)] = list.get(i, j);
            }
        }
        let start = State {
            order: (0..n as u8).collect(),
            remaining,
        };
        Ok((Instance { n }, start))
    }

    fn cell(&self, a: u8, b: u8) -> usize {
        let (a, b) = (a.min(b) as usize, a.max(b) as usize);
        a * self.n + b
    }

    fn swappable(&self, s: &State, p: usize) -> bool {
        s.remaining[self.cell(s.order[p], s.order[p + 1])] > 0
    }

    fn apply(&self, s: &mut State, p: usize) {
        let c = self.cell(s.order[p], s.order[p + 1]);
        s.remaining[c] -= 1;
        s.order.swap(p, p + 1);
    }
}

fn done(s: &State) -> bool {
    s.remaining.iter().all(|&m| m == 0)
}

/// Whether some sequence of single swaps performs exactly `list`.
pub fn oracle_feasible(list: &SwapList) -> Result<bool> {
    let (inst, start) = Instance::new(list)?;
    let mut failed = HashSet::new();
    Ok(dfs(&inst, start, &mut failed))
}

fn dfs(inst: &Instance, state: State, failed: &mut HashSet<State>) -> bool {
    if done(&state) {
        return true;
    }
    if failed.contains(&state) {
        return false;
    }
    for p in 0..inst.n - 1 {
        if inst.swappable(&state, p) {
            let mut next = state.clone();
            inst.apply(&mut next, p);
            if dfs(inst, next, failed) {
                return true;
            }
        }
    }
    failed.insert(state);
    false
}

/// Minimum height of a tangle realizing `list`, by breadth-first search
/// over layers.
pub fn oracle_min_height(list: &SwapList) -> Result<Height> {
    let (inst, start) = Instance::new(list)?;
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut height = 1u32;
    while !frontier.is_empty() {
        if frontier.iter().any(done) {
            return Ok(Height::Finite(height));
        }
        let mut next = Vec::new();
        for s in &frontier {
            let mut succ = Vec::new();
            layer_successors(&inst, s, 0, false, &mut succ);
            for t in succ {
                if seen.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        frontier = next;
        height += 1;
    }
    Ok(Height::Infinite)
}

/// All states reachable by one non-empty set of disjoint neighbour swaps
/// at positions `p..`.
fn layer_successors(inst: &Instance, s: &State, p: usize, any: bool, out: &mut Vec<State>) {
    if p + 1 >= inst.n {
        if any {
            out.push(s.clone());
        }
        return;
    }
    layer_successors(inst, s, p + 1, any, out);
    if inst.swappable(s, p) {
        let mut t = s.clone();
        inst.apply(&mut t, p);
        layer_successors(inst, &t, p + 2, true, out);
    }
}
