//! Instance families and the hardness reduction.

mod nae;
mod reduction;

pub use nae::{Literal, NaeFormula};
pub use reduction::{reduce_to_list, WireMap, WireRole};

use rand::Rng;

use crate::error::{Result, TangleError};
use crate::model::SwapList;

/// The loop list `L_n`: a rigid list whose minimum tangle height is `3n − 4`.
///
/// Wires `1..=n−2` swap pairwise once, each swaps twice with whichever of
/// `n−1`, `n` has its parity, and `n−1`, `n` swap `n−1` times.
pub fn gen_loop(n: usize) -> Result<SwapList> {
    if n < 3 {
        return Err(TangleError::invalid(format!("loop list needs n >= 3, got {n}")));
    }
    let mut list = SwapList::new(n);
    for i in 1..=n - 2 {
        for j in i + 1..=n - 2 {
            list.set(i, j, 1)?;
        }
        let partner = if (n - 1) % 2 == i % 2 { n - 1 } else { n };
        list.set(i, partner, 2)?;
    }
    list.set(n - 1, n, (n - 1) as u32)?;
    Ok(list)
}

/// Every pair swaps once (pseudo-line arrangements).
pub fn gen_complete(n: usize) -> SwapList {
    let mut list = SwapList::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            list.set(i, j, 1).expect("pair in range");
        }
    }
    list
}

/// `L*_m` on `2^m` wires: labels `a < b` (wires `a+1`, `b+1`) swap twice
/// unless the bits of `a` are a subset of the bits of `b`.
pub fn gen_hypercube(m: u32) -> Result<SwapList> {
    if m == 0 || m > 10 {
        return Err(TangleError::invalid(format!("hypercube order must be in 1..=10, got {m}")));
    }
    let size = 1usize << m;
    let mut list = SwapList::new(size);
    for a in 0..size {
        for b in a + 1..size {
            if a | b != b {
                list.set(a + 1, b + 1, 2)?;
            }
        }
    }
    Ok(list)
}

/// The 0-based label of each wire of [`gen_hypercube`], indexed by wire − 1.
pub fn hypercube_labels(m: u32) -> Vec<usize> {
    (0..1usize << m).collect()
}

/// Number of distinct swaps of `L*_m`: `½ Σ_{r=1..m} 3^{r−1} 2^{m−r} (2^{m−r} − 1)`.
pub fn hypercube_swap_count(m: u32) -> u64 {
    (1..=m)
        .map(|r| 3u64.pow(r - 1) * (1u64 << (m - r)) * ((1u64 << (m - r)) - 1))
        .sum::<u64>()
        / 2
}

/// Uniformly random entries in `0..=max_entry`.
pub fn random_list<R: Rng + ?Sized>(n: usize, max_entry: u32, rng: &mut R) -> SwapList {
    let mut list = SwapList::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            list.set(i, j, rng.gen_range(0..=max_entry)).expect("pair in range");
        }
    }
    list
}

/// Random entries drawn from `values`.
pub fn random_list_from<R: Rng + ?Sized>(n: usize, values: &[u32], rng: &mut R) -> SwapList {
    let mut list = SwapList::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            list.set(i, j, values[rng.gen_range(0..values.len())]).expect("pair in range");
        }
    }
    list
}
