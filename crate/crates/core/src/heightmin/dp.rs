use crate::error::{Result, TangleError};
use crate::heightmin::{Height, MinHeight};
use crate::model::{IndependentMasks, Permutation, SwapList, Tangle};
use crate::sublist::{Limits, Odometer, SublistSpace};

/// Storage cell of the height table; the all-ones value encodes `∞`.
trait Cell: Copy + Send + Sync {
    const INF: Self;
    fn from_height(h: u32) -> Self;
    fn height(self) -> Option<u32>;
}

impl Cell for u16 {
    const INF: Self = u16::MAX;
    fn from_height(h: u32) -> Self {
        h as u16
    }
    fn height(self) -> Option<u32> {
        (self != u16::MAX).then_some(self as u32)
    }
}

impl Cell for u32 {
    const INF: Self = u32::MAX;
    fn from_height(h: u32) -> Self {
        h
    }
    fn height(self) -> Option<u32> {
        (self != u32::MAX).then_some(self)
    }
}

#[derive(Debug, Clone)]
enum Store {
    Narrow(Vec<u16>),
    Wide(Vec<u32>),
}

impl Store {
    fn get(&self, key: u64) -> Option<u32> {
        match self {
            Store::Narrow(v) => v[key as usize].height(),
            Store::Wide(v) => v[key as usize].height(),
        }
    }
}

/// Optimal heights `H(L')` for every sublist `L'` of a root list.
///
/// Entries are filled in increasing key order, which visits every strict
/// sublist before the lists containing it.
#[derive(Debug, Clone)]
pub struct HeightTable {
    space: SublistSpace,
    root: SwapList,
    store: Store,
}

/// Bitmask of positions `p` (bit `p`, 0-based) whose two wires still have an
/// `(a, b)` swap left in the current sublist.
#[inline]
fn allowed_positions(space: &SublistSpace, digits: &[u32], inv: &[u32]) -> u64 {
    let mut allowed = 0u64;
    for p in 0..inv.len().saturating_sub(1) {
        if let Some(slot) = space.slot(inv[p] as usize, inv[p + 1] as usize) {
            if digits[slot] > 0 {
                allowed |= 1 << p;
            }
        }
    }
    allowed
}

#[inline]
fn removed_key(space: &SublistSpace, inv: &[u32], mask: u64) -> u64 {
    let mut m = mask;
    let mut sum = 0;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        let slot = space
            .slot(inv[p] as usize, inv[p + 1] as usize)
            .expect("allowed position has a slot");
        sum += space.stride(slot);
    }
    sum
}

fn fill<C: Cell>(space: &SublistSpace) -> Vec<C> {
    let n = space.n();
    let mut table = vec![C::INF; space.size() as usize];
    table[0] = C::from_height(1);
    let mut odo = Odometer::new(space);
    let mut inv = vec![0u32; n];
    while odo.advance() {
        if !odo.final_inverse(&mut inv) {
            continue;
        }
        let key = odo.key;
        let allowed = allowed_positions(space, &odo.digits, &inv);
        let best = IndependentMasks::new(allowed)
            .filter_map(|mask| table[(key - removed_key(space, &inv, mask)) as usize].height())
            .min();
        if let Some(h) = best {
            table[key as usize] = C::from_height(h + 1);
        }
    }
    table
}

fn final_inverse_of(space: &SublistSpace, digits: &[u32]) -> Option<Vec<u32>> {
    let n = space.n();
    let mut delta = vec![0i64; n];
    for (slot, &d) in digits.iter().enumerate() {
        if d % 2 == 1 {
            let (i, j) = space.pair(slot);
            delta[i] += 1;
            delta[j] -= 1;
        }
    }
    let mut inv = vec![u32::MAX; n];
    for (w, d) in delta.into_iter().enumerate() {
        let p = w as i64 + d;
        if p < 0 || p >= n as i64 || inv[p as usize] != u32::MAX {
            return None;
        }
        inv[p as usize] = w as u32;
    }
    Some(inv)
}

impl HeightTable {
    /// Runs the sublist dynamic program on `root` as a whole.
    pub fn build(root: &SwapList, limits: &Limits) -> Result<Self> {
        if root.n() > 64 {
            return Err(TangleError::invalid(format!(
                "height table supports at most 64 wires, got {}",
                root.n()
            )));
        }
        let space = SublistSpace::new(root, limits.max_table)?;
        // Heights never exceed |L| + 1.
        let store = if root.len() + 1 < u16::MAX as u64 {
            Store::Narrow(fill::<u16>(&space))
        } else {
            Store::Wide(fill::<u32>(&space))
        };
        Ok(HeightTable {
            space,
            root: root.clone(),
            store,
        })
    }

    pub fn root(&self) -> &SwapList {
        &self.root
    }

    /// Number of entries, `λ = Π (l_ij + 1)`.
    pub fn len(&self) -> u64 {
        self.space.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `H(sublist)`, or `None` if `sublist` is not a sublist of the root.
    pub fn get(&self, sublist: &SwapList) -> Option<Height> {
        let key = self.space.encode(sublist)?;
        Some(self.height_at(key))
    }

    fn height_at(&self, key: u64) -> Height {
        self.store.get(key).map_or(Height::Infinite, Height::Finite)
    }

    /// `H(root)`.
    pub fn height(&self) -> Height {
        self.height_at(self.space.size() - 1)
    }

    /// An optimal tangle for the root list.
    ///
    /// Walks back from the root, at each layer taking the smallest
    /// swap-position bitmask whose predecessor is exactly one layer lower.
    pub fn witness(&self) -> Option<Tangle> {
        let mut key = self.space.size() - 1;
        let mut h = self.store.get(key)?;
        let mut layers = Vec::with_capacity(h as usize);
        loop {
            let digits = self.space.digits(key);
            let inv = final_inverse_of(&self.space, &digits).expect("finite entries are consistent");
            if key == 0 {
                layers.push(Permutation::from_inv0(inv));
                break;
            }
            let allowed = allowed_positions(&self.space, &digits, &inv);
            let prev = IndependentMasks::new(allowed)
                .map(|mask| key - removed_key(&self.space, &inv, mask))
                .find(|&prev| self.store.get(prev) == Some(h - 1))
                .expect("finite entry has an optimal predecessor");
            layers.push(Permutation::from_inv0(inv));
            key = prev;
            h -= 1;
        }
        layers.reverse();
        Some(Tangle::from_layers_unchecked(layers))
    }
}

/// Maximal wire intervals `[lo, hi]` (1-based) that no swap crosses.
pub(crate) fn independent_blocks(list: &SwapList) -> Vec<(usize, usize)> {
    let n = list.n();
    let mut reach = vec![0usize; n + 1];
    for (i, j, _) in list.entries() {
        reach[i] = reach[i].max(j);
    }
    let mut blocks = Vec::new();
    let mut lo = 1;
    let mut furthest = 0;
    for (c, &r) in reach.iter().enumerate().skip(1) {
        furthest = furthest.max(r);
        if furthest <= c {
            blocks.push((lo, c));
            lo = c + 1;
        }
    }
    blocks
}

/// A wire without any swap that some swap `(i, j)` would have to jump over.
fn straddled_idle_wire(list: &SwapList) -> Option<usize> {
    let n = list.n();
    let mut busy = vec![false; n + 1];
    let mut reach = vec![0usize; n + 1];
    for (i, j, _) in list.entries() {
        busy[i] = true;
        busy[j] = true;
        reach[i] = reach[i].max(j);
    }
    let mut furthest = 0;
    for k in 1..=n {
        if !busy[k] && furthest > k {
            return Some(k);
        }
        furthest = furthest.max(reach[k]);
    }
    None
}

/// Minimum tangle height for `list`, with an optimal witness when feasible.
///
/// Wires no swap crosses split the instance into independent blocks that are
/// solved separately and laid side by side.
pub fn dp_min_height(list: &SwapList, limits: &Limits) -> Result<MinHeight> {
    let n = list.n();
    if straddled_idle_wire(list).is_some() {
        return Ok(MinHeight::infeasible());
    }
    let mut parts = Vec::new();
    for (lo, hi) in independent_blocks(list) {
        if lo == hi {
            parts.push((lo, Tangle::single(Permutation::identity(1))));
            continue;
        }
        let wires: Vec<usize> = (lo..=hi).collect();
        let table = HeightTable::build(&list.restrict(&wires)?, limits)?;
        match table.witness() {
            Some(t) => parts.push((lo, t)),
            None => return Ok(MinHeight::infeasible()),
        }
    }
    let height = parts.iter().map(|(_, t)| t.height()).max().unwrap_or(1);
    let mut layers = Vec::with_capacity(height);
    for t in 0..height {
        let mut seq = Vec::with_capacity(n);
        for (lo, part) in &parts {
            let layer = &part.layers()[t.min(part.height() - 1)];
            seq.extend(layer.sequence().into_iter().map(|w| w + lo - 1));
        }
        layers.push(Permutation::from_sequence(&seq).expect("blocks partition the wires"));
    }
    Ok(MinHeight {
        height: Height::Finite(height as u32),
        witness: Some(Tangle::from_layers_unchecked(layers)),
    })
}
