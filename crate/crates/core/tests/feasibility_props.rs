mod common;

use common::*;
use proptest::prelude::*;
use tangle_core::feasibility::*;
use tangle_core::model::*;
use tangle_core::oracle::{oracle_feasible, oracle_min_height};
use tangle_core::Limits;

fn dp(l: &SwapList) -> bool {
    feasible_dp(l, &Limits::default()).unwrap()
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The eight statements of the odd-list equivalence, in order.
pub fn odd_statements(l: &SwapList) -> [bool; 8] {
    let restricted: Vec<SwapList> = triples(l.n()).iter().map(|a| l.restrict(a).unwrap()).collect();
    [
        dp(l),
        dp(&l.parity()),
        restricted.iter().all(dp),
        restricted.iter().all(|r| dp(&r.parity())),
        is_consistent(l),
        is_consistent(&l.parity()),
        restricted.iter().all(is_consistent),
        restricted.iter().all(|r| is_consistent(&r.parity())),
    ]
}

#[test]
fn dp_matches_oracle_exhaustively() {
    for l in all_lists(3, 3) {
        let want = oracle_feasible(&l).unwrap();
        assert_eq!(dp(&l), want, "{l}");
        assert_eq!(feasible_dp_unscreened(&l, &Limits::default()).unwrap(), want, "{l}");
    }
    for l in all_lists(4, 1) {
        assert_eq!(dp(&l), oracle_feasible(&l).unwrap(), "{l}");
        assert_eq!(feasible_simple(&l).unwrap(), oracle_feasible(&l).unwrap(), "{l}");
    }
}

#[test]
fn oracles_agree_with_each_other() {
    for l in all_lists(3, 2) {
        assert_eq!(oracle_feasible(&l).unwrap(), oracle_min_height(&l).unwrap().is_finite(), "{l}");
        if let Some(h) = oracle_min_height(&l).unwrap().finite() {
            assert!(h as u64 <= l.len() + 1);
        }
    }
}

#[test]
fn extension_preserves_feasibility() {
    let lists = all_lists(3, 3);
    for a in lists.iter().filter(|l| dp(l)) {
        for b in lists.iter().filter(|b| extends(a, b)) {
            assert!(dp(b), "{a} -> {b}");
        }
    }
}

#[test]
fn auto_agrees_with_dp() {
    for l in all_lists(3, 3) {
        let d = feasible_auto(&l, &Limits::default()).unwrap();
        assert_eq!(d.feasible, dp(&l), "{l} via {}", d.method);
    }
}

proptest! {
    #[test]
    fn odd_list_battery(l in arb_list(3, 5, 3).prop_map(|l| l.map_entries_public())) {
        let s = odd_statements(&l);
        prop_assert!(s.iter().all(|&x| x == s[0]), "{l}: {s:?}");
        prop_assert_eq!(feasible_odd(&l).unwrap(), s[0]);
        let t = realize_odd(&l).unwrap();
        prop_assert_eq!(t.is_some(), s[0]);
        if let Some(t) = t {
            prop_assert!(validate_tangle(&t, &l, &Permutation::identity(l.n())).is_ok());
        }
    }

    #[test]
    fn screens_are_necessary(l in arb_list(2, 4, 3)) {
        if dp(&l) {
            prop_assert!(is_consistent(&l));
            prop_assert!(is_non_separable(&l));
        }
    }

    #[test]
    fn fpt_matches_dp(l in arb_list(2, 4, 6)) {
        prop_assert_eq!(feasible_fpt(&l, &Limits::default()).unwrap(), dp(&l), "{}", l);
    }

    #[test]
    fn rich_even_lists_match_dp(l in arb_list(3, 3, 2).prop_map(|l| scale(&l, 4))) {
        prop_assert_eq!(feasible_rich_even(&l).unwrap(), dp(&l), "{}", l);
    }
}

fn scale(l: &SwapList, k: u32) -> SwapList {
    let mut out = SwapList::new(l.n());
    for (i, j, m) in l.entries() {
        out.set(i, j, m * k).unwrap();
    }
    out
}

trait OddEntries {
    fn map_entries_public(&self) -> SwapList;
}

impl OddEntries for SwapList {
    /// Maps entries `0..=3` onto `{0, 1, 3}`.
    fn map_entries_public(&self) -> SwapList {
        let mut out = SwapList::new(self.n());
        for (i, j, m) in self.entries() {
            out.set(i, j, [0, 1, 3, 1][m as usize]).unwrap();
        }
        out
    }
}

#[test]
fn known_infeasible_lists() {
    let lim = Limits::default();
    let l13 = SwapList::from_entries(3, &[(1, 3, 2)]).unwrap();
    let mut sample = SwapList::from_pairs(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
    assert!(dp(&sample));
    sample.add(1, 2, 1).unwrap();
    for l in [l13, sample] {
        assert!(!dp(&l));
        assert!(!feasible_fpt(&l, &lim).unwrap());
        assert!(!oracle_feasible(&l).unwrap());
    }
    let tri = SwapList::from_entries(3, &[(1, 2, 3), (2, 3, 1), (1, 3, 1)]).unwrap();
    assert!(oracle_feasible(&tri).unwrap());
}
