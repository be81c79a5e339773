//! Permutations of wires, stored together with their inverse.
//!
//! All public indices are 1-based: wire `i` sits at position `π(i)`, and the
//! display form lists `π⁻¹(1) … π⁻¹(n)`, i.e. the wires from left to right.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TangleError};
use crate::model::SwapSet;

/// A bijection from wires to positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based; inv[pos[w]] == w.
    pos: Vec<u32>,
    inv: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<u32> = (0..n as u32).collect();
        Permutation {
            pos: ids.clone(),
            inv: ids,
        }
    }

    /// Builds `π` from its images: `positions[i-1] = π(i)`.
    pub fn from_positions(positions: &[usize]) -> Result<Self> {
        let n = positions.len();
        let mut inv = vec![u32::MAX; n];
        for (wire, &p) in positions.iter().enumerate() {
            if p == 0 || p > n {
                return Err(TangleError::invalid(format!(
                    "position {p} of wire {} out of range 1..={n}",
                    wire + 1
                )));
            }
            if inv[p - 1] != u32::MAX {
                return Err(TangleError::invalid(format!("position {p} used twice")));
            }
            inv[p - 1] = wire as u32;
        }
        Ok(Permutation {
            pos: positions.iter().map(|&p| (p - 1) as u32).collect(),
            inv,
        })
    }

    /// Builds `π` from its display sequence `π⁻¹(1) … π⁻¹(n)`.
    pub fn from_sequence(wires: &[usize]) -> Result<Self> {
        let n = wires.len();
        let mut pos = vec![u32::MAX; n];
        for (p, &w) in wires.iter().enumerate() {
            if w == 0 || w > n {
                return Err(TangleError::invalid(format!(
                    "wire {w} out of range 1..={n}"
                )));
            }
            if pos[w - 1] != u32::MAX {
                return Err(TangleError::invalid(format!("wire {w} listed twice")));
            }
            pos[w - 1] = p as u32;
        }
        Ok(Permutation {
            pos,
            inv: wires.iter().map(|&w| (w - 1) as u32).collect(),
        })
    }

    pub(crate) fn from_inv0(inv: Vec<u32>) -> Self {
        let mut pos = vec![0; inv.len()];
        for (p, &w) in inv.iter().enumerate() {
            pos[w as usize] = p as u32;
        }
        Permutation { pos, inv }
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// `π(wire)`, 1-based.
    pub fn position(&self, wire: usize) -> usize {
        self.pos[wire - 1] as usize + 1
    }

    /// `π⁻¹(position)`, 1-based.
    pub fn wire_at(&self, position: usize) -> usize {
        self.inv[position - 1] as usize + 1
    }

    /// The display sequence `π⁻¹(1) … π⁻¹(n)`.
    pub fn sequence(&self) -> Vec<usize> {
        self.inv.iter().map(|&w| w as usize + 1).collect()
    }

    /// The images `π(1) … π(n)`.
    pub fn positions(&self) -> Vec<usize> {
        self.pos.iter().map(|&p| p as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.inv.iter().enumerate().all(|(p, &w)| p as u32 == w)
    }

    pub(crate) fn pos0(&self) -> &[u32] {
        &self.pos
    }

    pub(crate) fn inv0(&self) -> &[u32] {
        &self.inv
    }

    fn check_size(&self, other: &Permutation) -> Result<()> {
        if self.n() != other.n() {
            return Err(TangleError::invalid(format!(
                "permutation sizes differ: {} vs {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    /// True iff no wire moves by more than one position between `self` and `other`.
    pub fn is_adjacent(&self, other: &Permutation) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.adjacent_unchecked(other))
    }

    pub(crate) fn adjacent_unchecked(&self, other: &Permutation) -> bool {
        self.pos
            .iter()
            .zip(&other.pos)
            .all(|(&a, &b)| a.abs_diff(b) <= 1)
    }

    /// The swaps that turn `self` into the adjacent permutation `other`.
    pub fn diff(&self, other: &Permutation) -> Result<SwapSet> {
        if !self.is_adjacent(other)? {
            return Err(TangleError::invalid(format!(
                "permutations {self} and {other} are not adjacent"
            )));
        }
        let mut pairs = Vec::new();
        for p in 0..self.n().saturating_sub(1) {
            let a = self.inv[p];
            let b = self.inv[p + 1];
            if other.inv[p] == b && other.inv[p + 1] == a {
                let (i, j) = if a < b { (a, b) } else { (b, a) };
                pairs.push((i as usize + 1, j as usize + 1));
            }
        }
        Ok(SwapSet::from_sorted_disjoint(pairs))
    }

    /// Exchanges the wires at positions `k+1, k+2` for every set bit `k` of `mask`.
    ///
    /// `mask` must not contain two neighbouring bits.
    pub fn swap_positions(&self, mask: u64) -> Permutation {
        debug_assert_eq!(mask & (mask >> 1), 0);
        let mut next = self.clone();
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            next.inv.swap(k, k + 1);
            next.pos[next.inv[k] as usize] = k as u32;
            next.pos[next.inv[k + 1] as usize] = k as u32 + 1;
        }
        next
    }

    /// Exchanges the two wires at positions `p` and `p + 1` (1-based).
    pub fn swap_at(&self, p: usize) -> Permutation {
        self.swap_positions(1u64 << (p - 1))
    }

    /// All permutations adjacent to and distinct from `self`.
    ///
    /// Ordered by the bitmask of swapped position pairs, read as an integer.
    pub fn neighbors(&self) -> Vec<Permutation> {
        let n = self.n();
        if n < 2 {
            return Vec::new();
        }
        assert!(n <= 64, "neighbor enumeration supports at most 64 wires");
        let all = if n == 64 { u64::MAX >> 1 } else { (1u64 << (n - 1)) - 1 };
        IndependentMasks::new(all)
            .map(|mask| self.swap_positions(mask))
            .collect()
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for `n ≤ 9` (`2134`), space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n() <= 9;
        for (k, w) in self.sequence().into_iter().enumerate() {
            if k > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = TangleError;

    /// Accepts `2134` (single digits, no separators) or `2 1 3 4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let wires: Vec<usize> = if s.contains(char::is_whitespace) || s.contains(',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| TangleError::invalid(format!("bad wire label {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| TangleError::invalid(format!("bad wire label {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_sequence(&wires)
    }
}

/// Non-empty subsets of `allowed` without two neighbouring bits, in increasing
/// numeric order.
#[derive(Debug, Clone)]
pub struct IndependentMasks {
    allowed: u64,
    current: u64,
    done: bool,
}

impl IndependentMasks {
    pub fn new(allowed: u64) -> Self {
        IndependentMasks {
            allowed,
            current: 0,
            done: allowed == 0,
        }
    }
}

impl Iterator for IndependentMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while !self.done {
            let next = self.current.wrapping_sub(self.allowed) & self.allowed;
            if next == 0 {
                self.done = true;
                break;
            }
            let clash = next & (next >> 1);
            if clash == 0 {
                self.current = next;
                return Some(next);
            }
            // Every subset sharing the bits from the highest clash upwards
            // also clashes; jump past all of them.
            let c = 63 - clash.leading_zeros();
            self.current = next | (self.allowed & ((1u64 << c) - 1));
        }
        None
    }
}
