//! Swap lists: symmetric multiplicity matrices with zero diagonal.

use std::fmt;

use crate::error::{Result, TangleError};
use crate::model::Permutation;

/// A multiset of swaps between `n` wires, `l_ij` for `1 ≤ i < j ≤ n`.
///
/// Only the strict upper triangle is stored; queries are symmetric and the
/// diagonal reads as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwapList {
    n: usize,
    mult: Vec<u32>,
    length: u64,
}

#[inline]
fn tri_index(n: usize, i: usize, j: usize) -> usize {
    // 0-based, i < j
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl SwapList {
    /// The zero list of order `n`.
    pub fn new(n: usize) -> Self {
        SwapList {
            n,
            mult: vec![0; n * n.saturating_sub(1) / 2],
            length: 0,
        }
    }

    /// One swap for every listed pair (repeats accumulate).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut list = SwapList::new(n);
        for &(i, j) in pairs {
            list.add(i, j, 1)?;
        }
        Ok(list)
    }

    /// `(i, j, multiplicity)` entries; repeats accumulate.
    pub fn from_entries(n: usize, entries: &[(usize, usize, u32)]) -> Result<Self> {
        let mut list = SwapList::new(n);
        for &(i, j, m) in entries {
            list.add(i, j, m)?;
        }
        Ok(list)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|L|`, the total number of swaps.
    pub fn len(&self) -> u64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    fn slot(&self, i: usize, j: usize) -> Result<Option<usize>> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(TangleError::invalid(format!(
                "pair ({i},{j}) out of range for {} wires",
                self.n
            )));
        }
        Ok(match i.cmp(&j) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => Some(tri_index(self.n, i - 1, j - 1)),
            std::cmp::Ordering::Greater => Some(tri_index(self.n, j - 1, i - 1)),
        })
    }

    /// `l_ij`; symmetric, zero on the diagonal. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        match self.slot(i, j) {
            Ok(Some(k)) => self.mult[k],
            Ok(None) => 0,
            Err(e) => panic!("{e}"),
        }
    }

    pub(crate) fn get0(&self, i: usize, j: usize) -> u32 {
        if i < j {
            self.mult[tri_index(self.n, i, j)]
        } else if j < i {
            self.mult[tri_index(self.n, j, i)]
        } else {
            0
        }
    }

    pub fn set(&mut self, i: usize, j: usize, m: u32) -> Result<()> {
        match self.slot(i, j)? {
            Some(k) => {
                self.length = self.length - self.mult[k] as u64 + m as u64;
                self.mult[k] = m;
                Ok(())
            }
            None if m == 0 => Ok(()),
            None => Err(TangleError::invalid(format!("diagonal entry ({i},{i}) must be zero"))),
        }
    }

    pub fn add(&mut self, i: usize, j: usize, m: u32) -> Result<()> {
        let cur = self.get_checked(i, j)?;
        let total = cur
            .checked_add(m)
            .ok_or_else(|| TangleError::invalid(format!("multiplicity of ({i},{j}) overflows")))?;
        self.set(i, j, total)
    }

    fn get_checked(&self, i: usize, j: usize) -> Result<u32> {
        Ok(self.slot(i, j)?.map_or(0, |k| self.mult[k]))
    }

    /// Non-zero entries `(i, j, l_ij)` with `i < j`, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.mult.iter())
            .filter(|(_, &m)| m > 0)
            .map(|((i, j), &m)| (i + 1, j + 1, m))
    }

    /// Number of pairs with a non-zero entry.
    pub fn distinct_swaps(&self) -> usize {
        self.mult.iter().filter(|&&m| m > 0).count()
    }

    pub fn max_entry(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// Every non-zero entry is odd.
    pub fn is_odd(&self) -> bool {
        self.mult.iter().all(|&m| m == 0 || m % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        self.mult.iter().all(|&m| m % 2 == 0)
    }

    /// `1(L)`: entries reduced mod 2.
    pub fn parity(&self) -> SwapList {
        self.map_entries(|m| m % 2)
    }

    /// `2(L)`: 0 for absent swaps, 1 for odd, 2 for positive even.
    pub fn type_of(&self) -> SwapList {
        self.map_entries(|m| match m {
            0 => 0,
            m if m % 2 == 1 => 1,
            _ => 2,
        })
    }

    pub(crate) fn map_entries(&self, f: impl Fn(u32) -> u32) -> SwapList {
        let mult: Vec<u32> = self.mult.iter().map(|&m| f(m)).collect();
        let length = mult.iter().map(|&m| m as u64).sum();
        SwapList {
            n: self.n,
            mult,
            length,
        }
    }

    /// `l_ij ≤ m_ij` for all pairs.
    pub fn is_sublist_of(&self, other: &SwapList) -> bool {
        self.n == other.n && self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }

    /// `self − other`, if `other` is a sublist of `self`.
    pub fn checked_sub(&self, other: &SwapList) -> Option<SwapList> {
        if !other.is_sublist_of(self) {
            return None;
        }
        let mult: Vec<u32> = self.mult.iter().zip(&other.mult).map(|(a, b)| a - b).collect();
        Some(SwapList {
            n: self.n,
            mult,
            length: self.length - other.length,
        })
    }

    /// `λ = Π (l_ij + 1)`, the number of distinct sublists; saturates at `u128::MAX`.
    pub fn sublist_count(&self) -> u128 {
        self.mult
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128 + 1))
            .unwrap_or(u128::MAX)
    }

    /// The list induced on `wires` (given in increasing order), relabelled to
    /// `1..=wires.len()` by relative order.
    pub fn restrict(&self, wires: &[usize]) -> Result<SwapList> {
        if wires.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TangleError::invalid("restriction wires must be strictly increasing"));
        }
        if let Some(&w) = wires.iter().find(|&&w| w == 0 || w > self.n) {
            return Err(TangleError::invalid(format!("wire {w} out of range")));
        }
        let mut out = SwapList::new(wires.len());
        for (a, &i) in wires.iter().enumerate() {
            for (b, &j) in wires.iter().enumerate().skip(a + 1) {
                out.set(a + 1, b + 1, self.get(i, j))?;
            }
        }
        Ok(out)
    }

    pub(crate) fn raw_mult(&self) -> &[u32] {
        &self.mult
    }
}

impl fmt::Display for SwapList {
    /// Multiset notation, e.g. `{(1,2)×2, (1,3)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j, m)) in self.entries().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if m == 1 {
                write!(f, "({i},{j})")?;
            } else {
                write!(f, "({i},{j})×{m}")?;
            }
        }
        f.write_str("}")
    }
}

/// `πL`: the position each wire would end in after applying all swaps of
/// `list` to `start`. Entry `k` belongs to wire `k + 1`.
///
/// Values are returned as computed, so an inconsistent list yields a map
/// that is not a bijection (or leaves `1..=n`).
pub fn final_map(start: &Permutation, list: &SwapList) -> Result<Vec<i64>> {
    if start.n() != list.n() {
        return Err(TangleError::invalid(format!(
            "permutation has {} wires, list has order {}",
            start.n(),
            list.n()
        )));
    }
    let pos = start.pos0();
    let mut out: Vec<i64> = pos.iter().map(|&p| p as i64 + 1).collect();
    for (i, j, m) in list.entries() {
        if m % 2 == 1 {
            let (i, j) = (i - 1, j - 1);
            let (left, right) = if pos[i] < pos[j] { (i, j) } else { (j, i) };
            out[left] += 1;
            out[right] -= 1;
        }
    }
    Ok(out)
}

/// `πL` as a permutation, or `None` when `list` is not `start`-consistent.
pub fn final_permutation(start: &Permutation, list: &SwapList) -> Result<Option<Permutation>> {
    let map = final_map(start, list)?;
    Ok(map_to_permutation(&map))
}

fn map_to_permutation(map: &[i64]) -> Option<Permutation> {
    let n = map.len();
    let mut inv = vec![u32::MAX; n];
    for (w, &p) in map.iter().enumerate() {
        if p < 1 || p > n as i64 || inv[(p - 1) as usize] != u32::MAX {
            return None;
        }
        inv[(p - 1) as usize] = w as u32;
    }
    Some(Permutation::from_inv0(inv))
}

/// `id_n L` is a permutation. Only odd entries are visited.
pub fn is_consistent(list: &SwapList) -> bool {
    let n = list.n();
    let mut delta = vec![0i64; n];
    for (i, j, m) in list.entries() {
        if m % 2 == 1 {
            delta[i - 1] += 1;
            delta[j - 1] -= 1;
        }
    }
    let mut seen = vec![false; n];
    for (w, d) in delta.into_iter().enumerate() {
        let p = w as i64 + d;
        if p < 0 || p >= n as i64 || seen[p as usize] {
            return false;
        }
        seen[p as usize] = true;
    }
    true
}

/// `L(π)`: the inversion set of `perm` as a simple list.
pub fn simple_list_of(perm: &Permutation) -> SwapList {
    let n = perm.n();
    let pos = perm.pos0();
    let mut list = SwapList::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if pos[i] > pos[j] {
                list.mult[tri_index(n, i, j)] = 1;
                list.length += 1;
            }
        }
    }
    list
}

/// For all `i < j < k` with `l_ik > 0`: `l_ij > 0` or `l_jk > 0`.
pub fn is_non_separable(list: &SwapList) -> bool {
    separating_triple(list).is_none()
}

/// A triple `(i, j, k)` with `l_ik > 0` but no swap of `j` with either end.
pub fn separating_triple(list: &SwapList) -> Option<(usize, usize, usize)> {
    let n = list.n();
    for i in 0..n {
        for k in i + 2..n {
            if list.get0(i, k) == 0 {
                continue;
            }
            for j in i + 1..k {
                if list.get0(i, j) == 0 && list.get0(j, k) == 0 {
                    return Some((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// `from → to`: same type and `from` is entrywise at most `to`.
pub fn extends(from: &SwapList, to: &SwapList) -> bool {
    from.n() == to.n()
        && from
            .raw_mult()
            .iter()
            .zip(to.raw_mult())
            .all(|(&a, &b)| a <= b && (a == 0) == (b == 0) && a % 2 == b % 2)
}
