//! Mixed-radix indexing of all sublists of a root list.
//!
//! Every pair with `l_ij > 0` becomes a digit slot (row-major order, slot 0
//! least significant) with radix `l_ij + 1`. A sublist is then a single
//! integer key in `0..λ`, and removing one `(i, j)` swap subtracts that
//! slot's stride. Strict sublists always have strictly smaller keys.

use crate::error::{Result, TangleError};
use crate::model::SwapList;

/// Default cap on the number of table entries a solver may allocate.
pub const DEFAULT_MAX_TABLE: u64 = 100_000_000;

/// Resource limits shared by the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_table: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_table: DEFAULT_MAX_TABLE,
        }
    }
}

impl Limits {
    pub fn with_max_table(max_table: u64) -> Self {
        Limits { max_table }
    }
}

const NO_SLOT: u32 = u32::MAX;

/// The key space of all sublists of a root list.
#[derive(Debug, Clone)]
pub struct SublistSpace {
    n: usize,
    pairs: Vec<(u32, u32)>,
    radix: Vec<u32>,
    stride: Vec<u64>,
    size: u64,
    slot_of: Vec<u32>,
}

impl SublistSpace {
    /// Fails with a resource error when `λ` exceeds `limit`.
    pub fn new(root: &SwapList, limit: u64) -> Result<Self> {
        let lambda = root.sublist_count();
        if lambda > limit as u128 {
            return Err(TangleError::Resource {
                what: "sublist table",
                needed: lambda,
                limit: limit as u128,
            });
        }
        let n = root.n();
        let mut pairs = Vec::new();
        let mut radix = Vec::new();
        let mut stride = Vec::new();
        let mut slot_of = vec![NO_SLOT; n * n];
        let mut size = 1u64;
        for (i, j, m) in root.entries() {
            let (i, j) = (i - 1, j - 1);
            slot_of[i * n + j] = pairs.len() as u32;
            slot_of[j * n + i] = pairs.len() as u32;
            pairs.push((i as u32, j as u32));
            radix.push(m + 1);
            stride.push(size);
            size *= m as u64 + 1;
        }
        Ok(SublistSpace {
            n,
            pairs,
            radix,
            stride,
            size,
            slot_of,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ`, the number of keys.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn slot_count(&self) -> usize {
        self.pairs.len()
    }

    /// The key of `list`, or `None` if it is not a sublist of the root.
    pub fn encode(&self, list: &SwapList) -> Option<u64> {
        if list.n() != self.n {
            return None;
        }
        let mut key = 0u64;
        for (i, j, m) in list.entries() {
            let slot = self.slot(i - 1, j - 1)?;
            if m >= self.radix[slot] {
                return None;
            }
            key += m as u64 * self.stride[slot];
        }
        Some(key)
    }

    pub fn decode(&self, key: u64) -> SwapList {
        let mut list = SwapList::new(self.n);
        for (slot, d) in self.digits(key).into_iter().enumerate() {
            if d > 0 {
                let (i, j) = self.pairs[slot];
                list.set(i as usize + 1, j as usize + 1, d).expect("slot in range");
            }
        }
        list
    }

    pub fn digits(&self, mut key: u64) -> Vec<u32> {
        self.radix
            .iter()
            .map(|&r| {
                let d = (key % r as u64) as u32;
                key /= r as u64;
                d
            })
            .collect()
    }

    /// Slot of the 0-based pair `(a, b)` in either order.
    #[inline]
    pub(crate) fn slot(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.slot_of[a * self.n + b];
        (s != NO_SLOT).then_some(s as usize)
    }

    #[inline]
    pub(crate) fn stride(&self, slot: usize) -> u64 {
        self.stride[slot]
    }

    #[inline]
    pub(crate) fn radix(&self, slot: usize) -> u32 {
        self.radix[slot]
    }

    #[inline]
    pub(crate) fn pair(&self, slot: usize) -> (usize, usize) {
        let (i, j) = self.pairs[slot];
        (i as usize, j as usize)
    }
}

/// Walks all keys in increasing order while keeping the digit vector and the
/// per-wire displacement of `id_n L'` up to date.
pub(crate) struct Odometer<'a> {
    space: &'a SublistSpace,
    pub digits: Vec<u32>,
    /// `id_n L'(w) − w` for each 0-based wire `w`.
    pub delta: Vec<i64>,
    pub key: u64,
}

impl<'a> Odometer<'a> {
    pub fn new(space: &'a SublistSpace) -> Self {
        Odometer {
            space,
            digits: vec![0; space.slot_count()],
            delta: vec![0; space.n()],
            key: 0,
        }
    }

    /// Moves to `key + 1`; returns false after the last key.
    pub fn advance(&mut self) -> bool {
        for slot in 0..self.digits.len() {
            let (i, j) = self.space.pair(slot);
            let old = self.digits[slot];
            let new = if old + 1 == self.space.radix(slot) { 0 } else { old + 1 };
            self.digits[slot] = new;
            if (old ^ new) & 1 == 1 {
                let sign = if new & 1 == 1 { 1 } else { -1 };
                self.delta[i] += sign;
                self.delta[j] -= sign;
            }
            if new != 0 {
                self.key += 1;
                return true;
            }
        }
        false
    }

    /// Fills `inv` with `id_n L'` as position → wire when it is a bijection.
    pub fn final_inverse(&self, inv: &mut [u32]) -> bool {
        let n = inv.len();
        inv.fill(u32::MAX);
        for (w, &d) in self.delta.iter().enumerate() {
            let p = w as i64 + d;
            if p < 0 || p >= n as i64 || inv[p as usize] != u32::MAX {
                return false;
            }
            inv[p as usize] = w as u32;
        }
        true
    }
}
