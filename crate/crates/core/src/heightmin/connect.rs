use crate::error::{Result, TangleError};
use crate::model::{Permutation, Tangle};

/// Connects `p` to `q` with an odd-even transposition sort.
///
/// Rounds alternate between position pairs `(1,2),(3,4),…` and
/// `(2,3),(4,5),…`; each round swaps every pair whose order disagrees with
/// `q`. Empty rounds are skipped, so the height is at most `n + 1` and every
/// pair swaps at most once.
pub fn oddeven_connect(p: &Permutation, q: &Permutation) -> Result<Tangle> {
    let n = p.n();
    if q.n() != n {
        return Err(TangleError::invalid(format!(
            "permutation sizes differ: {n} vs {}",
            q.n()
        )));
    }
    if n > 64 {
        return Err(TangleError::invalid("odd-even connection supports at most 64 wires"));
    }
    let target = q.pos0();
    let mut layers = vec![p.clone()];
    let mut current = p.clone();
    let mut phase = 0;
    let mut idle = 0;
    // Two consecutive empty rounds mean the sequence is sorted.
    while idle < 2 {
        let inv = current.inv0();
        let mut mask = 0u64;
        let mut k = phase;
        while k + 1 < n {
            if target[inv[k] as usize] > target[inv[k + 1] as usize] {
                mask |= 1 << k;
            }
            k += 2;
        }
        if mask == 0 {
            idle += 1;
        } else {
            idle = 0;
            current = current.swap_positions(mask);
            layers.push(current.clone());
        }
        phase ^= 1;
    }
    debug_assert_eq!(&current, q);
    Ok(Tangle::from_layers_unchecked(layers))
}

/// Rebuilds `tangle` through the layers indexed by `witnesses` (1-based).
///
/// Consecutive chosen layers are joined by [`oddeven_connect`]. Every listed
/// pair `(i, j)` must appear inverted in at least one chosen layer, and the
/// first and last layers must be chosen.
pub fn shorten(tangle: &Tangle, witnesses: &[usize]) -> Result<Tangle> {
    let h = tangle.height();
    let mut idx = witnesses.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.first() != Some(&1) || idx.last() != Some(&h) {
        return Err(TangleError::Precondition(format!(
            "witness set must contain layers 1 and {h}"
        )));
    }
    if idx.iter().any(|&t| t == 0 || t > h) {
        return Err(TangleError::invalid("witness index out of range"));
    }
    let chosen: Vec<&Permutation> = idx.iter().map(|&t| &tangle.layers()[t - 1]).collect();
    let list = crate::model::list_of_tangle(tangle);
    for (i, j, _) in list.entries() {
        if !chosen.iter().any(|l| l.position(j) < l.position(i)) {
            return Err(TangleError::Precondition(format!(
                "swap ({i},{j}) is not witnessed by any chosen layer"
            )));
        }
    }
    let mut layers = vec![chosen[0].clone()];
    for w in chosen.windows(2) {
        let seg = oddeven_connect(w[0], w[1])?;
        layers.extend(seg.into_layers().into_iter().skip(1));
    }
    Ok(Tangle::from_layers_unchecked(layers))
}
