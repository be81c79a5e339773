use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::error::{Result, TangleError};
use crate::model::{final_permutation, IndependentMasks, Permutation, SwapList, Tangle};

/// Minimum-height tangle for a simple, consistent list.
///
/// Breadth-first search from `id_n` over permutations whose inversion set is
/// contained in `list`. A step may only swap neighbouring wires `a < b` that
/// are still in their initial order and listed, so every reached permutation
/// has executed exactly its inversion set. States are discovered lazily.
pub fn bfs_min_height_simple(list: &SwapList) -> Result<Tangle> {
    if !list.is_simple() {
        return Err(TangleError::invalid("breadth-first search needs a simple list"));
    }
    let n = list.n();
    if n > 64 {
        return Err(TangleError::invalid("breadth-first search supports at most 64 wires"));
    }
    let start = Permutation::identity(n);
    let target = final_permutation(&start, list)?
        .ok_or_else(|| TangleError::invalid("list is not consistent"))?;

    let mut states = vec![start];
    let mut parent = vec![usize::MAX];
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    seen.insert(states[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut found = None;
    while let Some(idx) = queue.pop_front() {
        if states[idx] == target {
            found = Some(idx);
            break;
        }
        let inv = states[idx].inv0();
        let mut allowed = 0u64;
        for p in 0..n - 1 {
            let (a, b) = (inv[p] as usize, inv[p + 1] as usize);
            if a < b && list.get0(a, b) == 1 {
                allowed |= 1 << p;
            }
        }
        for mask in IndependentMasks::new(allowed) {
            let next = states[idx].swap_positions(mask);
            if let Entry::Vacant(e) = seen.entry(next) {
                let k = states.len();
                states.push(e.key().clone());
                e.insert(k);
                parent.push(idx);
                queue.push_back(k);
            }
        }
    }

    // A consistent simple list always reaches its final permutation.
    let mut idx = found.expect("target reachable for consistent simple lists");
    let mut path = vec![states[idx].clone()];
    while parent[idx] != usize::MAX {
        idx = parent[idx];
        path.push(states[idx].clone());
    }
    path.reverse();
    Ok(Tangle::from_layers_unchecked(path))
}
