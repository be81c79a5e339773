//! Feasibility deciders.
//!
//! The exact decider is a Boolean table over all sublists: a sublist is
//! feasible iff removing one of its swaps `(i, j)` leaves a feasible sublist
//! whose final permutation has `i` and `j` next to each other. The other
//! deciders are fast paths for special list shapes.

use std::fmt;

use crate::error::{Result, TangleError};
use crate::heightmin::oddeven_connect;
use crate::model::{final_permutation, is_consistent, is_non_separable, Permutation, SwapList, Tangle};
use crate::sublist::{Limits, Odometer, SublistSpace};

/// One bit per sublist of a root list.
#[derive(Debug, Clone)]
pub struct FeasTable {
    space: SublistSpace,
    root: SwapList,
    bits: Vec<u64>,
}

impl FeasTable {
    pub fn build(root: &SwapList, limits: &Limits) -> Result<Self> {
        let space = SublistSpace::new(root, limits.max_table)?;
        let n = space.n();
        let mut bits = vec![0u64; (space.size() as usize).div_ceil(64)];
        bits[0] = 1;
        let mut odo = Odometer::new(&space);
        let mut inv = vec![0u32; n];
        while odo.advance() {
            if !odo.final_inverse(&mut inv) {
                continue;
            }
            let key = odo.key;
            let feasible = (0..space.slot_count()).any(|slot| {
                let d = odo.digits[slot];
                if d == 0 {
                    return false;
                }
                let prev = key - space.stride(slot);
                if bits[(prev / 64) as usize] >> (prev % 64) & 1 == 0 {
                    return false;
                }
                // Positions of i and j once this copy of (i, j) is removed.
                let (i, j) = space.pair(slot);
                let shift = if d % 2 == 1 { 1 } else { -1 };
                let vi = i as i64 + odo.delta[i] - shift;
                let vj = j as i64 + odo.delta[j] + shift;
                (vi - vj).abs() == 1
            });
            if feasible {
                bits[(key / 64) as usize] |= 1 << (key % 64);
            }
        }
        Ok(FeasTable {
            space,
            root: root.clone(),
            bits,
        })
    }

    pub fn root(&self) -> &SwapList {
        &self.root
    }

    /// Number of entries, `λ`.
    pub fn len(&self) -> u64 {
        self.space.size()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn bit(&self, key: u64) -> bool {
        self.bits[(key / 64) as usize] >> (key % 64) & 1 == 1
    }

    /// `F(sublist)`, or `None` if `sublist` is not a sublist of the root.
    pub fn get(&self, sublist: &SwapList) -> Option<bool> {
        self.space.encode(sublist).map(|k| self.bit(k))
    }

    /// `F(root)`.
    pub fn feasible(&self) -> bool {
        self.bit(self.space.size() - 1)
    }

    /// Whether some feasible sublist has the same type as `like`.
    fn any_feasible_of_type(&self, like: &SwapList) -> bool {
        let want: Vec<u32> = (0..self.space.slot_count())
            .map(|slot| {
                let (i, j) = self.space.pair(slot);
                like.get0(i, j)
            })
            .collect();
        let matches = |digits: &[u32]| {
            digits
                .iter()
                .zip(&want)
                .all(|(&d, &w)| d > 0 && d % 2 == w % 2)
        };
        let mut odo = Odometer::new(&self.space);
        loop {
            if self.bit(odo.key) && matches(&odo.digits) {
                return true;
            }
            if !odo.advance() {
                return false;
            }
        }
    }
}

fn screened_out(list: &SwapList) -> bool {
    !is_consistent(list) || !is_non_separable(list)
}

/// Exact decision by the sublist table, after the consistency and
/// non-separability screens.
pub fn feasible_dp(list: &SwapList, limits: &Limits) -> Result<bool> {
    if screened_out(list) {
        return Ok(false);
    }
    feasible_dp_unscreened(list, limits)
}

/// Exact decision by the sublist table alone.
pub fn feasible_dp_unscreened(list: &SwapList, limits: &Limits) -> Result<bool> {
    Ok(FeasTable::build(list, limits)?.feasible())
}

/// Entry bound for minimal feasible lists of order `n`: `⌊n²/4⌋ + 1`.
pub fn truncation_cap(n: usize) -> u32 {
    (n * n / 4 + 1) as u32
}

/// Caps every entry at `cap`, stepping down by one where needed to keep
/// the entry's parity.
pub fn truncate_preserving_parity(list: &SwapList, cap: u32) -> SwapList {
    list.map_entries(|m| {
        if m <= cap {
            m
        } else if (m - cap).is_multiple_of(2) {
            cap
        } else {
            cap - 1
        }
    })
}

/// Decision via the truncated list: feasible iff some feasible sublist of the
/// truncation has the type of `list`.
pub fn feasible_fpt(list: &SwapList, limits: &Limits) -> Result<bool> {
    if screened_out(list) {
        return Ok(false);
    }
    let cap = truncation_cap(list.n());
    let truncated = truncate_preserving_parity(list, cap);
    let table = FeasTable::build(&truncated, limits)?;
    Ok(table.any_feasible_of_type(list))
}

/// A simple list is feasible iff it is consistent.
pub fn feasible_simple(list: &SwapList) -> Result<bool> {
    if !list.is_simple() {
        return Err(TangleError::invalid("list is not simple"));
    }
    Ok(is_consistent(list))
}

fn require_odd(list: &SwapList) -> Result<()> {
    if !list.is_odd() {
        return Err(TangleError::invalid("list has a positive even entry"));
    }
    Ok(())
}

/// An odd list is feasible iff its parity list is consistent.
pub fn feasible_odd(list: &SwapList) -> Result<bool> {
    require_odd(list)?;
    Ok(is_consistent(&list.parity()))
}

/// A tangle for an odd list, or `None` if the list is infeasible.
///
/// Realizes the parity list by odd-even sort, then repeats each swap
/// `l_ij − 1` more times right after the layer that first performs it.
pub fn realize_odd(list: &SwapList) -> Result<Option<Tangle>> {
    require_odd(list)?;
    let n = list.n();
    let id = Permutation::identity(n);
    let Some(target) = final_permutation(&id, &list.parity())? else {
        return Ok(None);
    };
    let base = oddeven_connect(&id, &target)?;
    let mut layers = vec![base.first().clone()];
    for (t, step) in base.steps().enumerate() {
        let sigma = &base.layers()[t + 1];
        layers.push(sigma.clone());
        for &(i, j) in step.pairs() {
            let p = sigma.position(i).min(sigma.position(j));
            let back = sigma.swap_at(p);
            for _ in 0..(list.get(i, j) - 1) / 2 {
                layers.push(back.clone());
                layers.push(sigma.clone());
            }
        }
    }
    Ok(Some(Tangle::new(layers)?))
}

/// Every entry is zero or at least `n`, and the list is even.
fn is_rich_even(list: &SwapList) -> bool {
    let n = list.n() as u32;
    list.entries().all(|(_, _, m)| m % 2 == 0 && m >= n)
}

/// Rich even lists are feasible iff they are non-separable.
pub fn feasible_rich_even(list: &SwapList) -> Result<bool> {
    if !is_rich_even(list) {
        return Err(TangleError::invalid(
            "list must be even with every entry zero or at least n",
        ));
    }
    Ok(is_non_separable(list))
}

/// The decider that settled a [`feasible_auto`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ConsistencyScreen,
    SeparabilityScreen,
    Simple,
    Odd,
    RichEven,
    Fpt,
    Dp,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ConsistencyScreen => "consistency-screen",
            Method::SeparabilityScreen => "separability-screen",
            Method::Simple => "simple",
            Method::Odd => "odd",
            Method::RichEven => "rich-even",
            Method::Fpt => "fpt",
            Method::Dp => "dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub feasible: bool,
    pub method: Method,
}

/// Tries the cheap deciders first and falls back to the tables.
///
/// Order: consistency, non-separability, simple, odd, rich even, truncation
/// (when some entry exceeds the cap), full table.
pub fn feasible_auto(list: &SwapList, limits: &Limits) -> Result<Decision> {
    let decided = |feasible, method| Ok(Decision { feasible, method });
    if !is_consistent(list) {
        return decided(false, Method::ConsistencyScreen);
    }
    if !is_non_separable(list) {
        return decided(false, Method::SeparabilityScreen);
    }
    if list.is_simple() {
        return decided(true, Method::Simple);
    }
    if list.is_odd() {
        return decided(true, Method::Odd);
    }
    if is_rich_even(list) {
        return decided(true, Method::RichEven);
    }
    if list.max_entry() > truncation_cap(list.n()) {
        return decided(feasible_fpt(list, limits)?, Method::Fpt);
    }
    decided(feasible_dp_unscreened(list, limits)?, Method::Dp)
}
