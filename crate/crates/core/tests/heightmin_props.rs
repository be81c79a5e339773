mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangle_core::heightmin::*;
use tangle_core::model::*;
use tangle_core::oracle::oracle_min_height;
use tangle_core::{Limits, TangleError};

fn dp(l: &SwapList) -> MinHeight {
    dp_min_height(l, &Limits::default()).unwrap()
}

fn check_witness(l: &SwapList, r: &MinHeight) {
    match (&r.height, &r.witness) {
        (Height::Finite(h), Some(t)) => {
            assert_eq!(*h as usize, t.height());
            validate_tangle(t, l, &Permutation::identity(l.n())).unwrap();
        }
        (Height::Infinite, None) => {}
        other => panic!("height and witness disagree: {other:?}"),
    }
}

#[test]
fn bfs_and_dp_agree_on_simple_lists() {
    for n in 1..=5 {
        for p in all_permutations(n) {
            let l = simple_list_of(&p);
            let t = bfs_min_height_simple(&l).unwrap();
            validate_tangle(&t, &l, &Permutation::identity(n)).unwrap();
            let r = dp(&l);
            check_witness(&l, &r);
            assert_eq!(r.height, Height::Finite(t.height() as u32), "{l}");
        }
    }
}

#[test]
fn dp_matches_oracle_exhaustively_for_three_wires() {
    for l in all_lists(3, 3) {
        let r = dp(&l);
        check_witness(&l, &r);
        assert_eq!(r.height, oracle_min_height(&l).unwrap(), "{l}");
    }
}

#[test]
fn dp_matches_oracle_on_random_four_wire_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let l = tangle_core::instances::random_list(4, 3, &mut rng);
        let r = dp(&l);
        check_witness(&l, &r);
        assert_eq!(r.height, oracle_min_height(&l).unwrap(), "{l}");
    }
    // Lists of realized tangles are always feasible.
    for _ in 0..150 {
        let h = rng.gen_range(1..=8);
        let t = random_tangle(Permutation::identity(4), h, &mut rng);
        let l = list_of_tangle(&t);
        let r = dp(&l);
        check_witness(&l, &r);
        assert!(r.height <= Height::Finite(t.height() as u32));
        assert_eq!(r.height, oracle_min_height(&l).unwrap(), "{l}");
    }
}

#[test]
fn oddeven_is_within_one_of_optimum() {
    for n in 1..=6 {
        for p in all_permutations(n) {
            let l = simple_list_of(&p);
            let t = oddeven_connect(&Permutation::identity(n), &p).unwrap();
            assert_eq!(list_of_tangle(&t), l);
            let opt = bfs_min_height_simple(&l).unwrap().height();
            assert!(t.height() <= opt + 1, "{p}: odd-even {} vs optimum {opt}", t.height());
        }
    }
}

#[test]
fn table_size_is_lambda_and_obeys_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let l = tangle_core::instances::random_list(n, 3, &mut rng);
        let table = HeightTable::build(&l, &Limits::default()).unwrap();
        assert_eq!(table.len() as u128, l.sublist_count());
        let nn = (n * n) as f64;
        let bound = (2.0 * l.len() as f64 / nn + 1.0).powf(nn / 2.0);
        assert!(table.len() as f64 <= bound + 1e-6);
        assert_eq!(table.height(), dp_min_height(&l, &Limits::default()).unwrap().height);
    }
}

#[test]
fn loop_lists_have_height_3n_minus_4() {
    for n in 3..=6 {
        let l = tangle_core::instances::gen_loop(n).unwrap();
        let r = dp(&l);
        check_witness(&l, &r);
        assert_eq!(r.height, Height::Finite(3 * n as u32 - 4));
    }
}

#[test]
fn resource_cap_is_reported() {
    let l = tangle_core::instances::gen_complete(8);
    let err = HeightTable::build(&l, &Limits::with_max_table(1000)).unwrap_err();
    assert!(matches!(err, TangleError::Resource { needed, .. } if needed == 1 << 28));
}

proptest! {
    #[test]
    fn oddeven_bounds(p in arb_permutation(8), seed in any::<u64>()) {
        let q = random_permutation(p.n(), &mut ChaCha8Rng::seed_from_u64(seed));
        let t = oddeven_connect(&p, &q).unwrap();
        prop_assert!(t.height() <= p.n() + 1);
        prop_assert_eq!(t.first(), &p);
        prop_assert_eq!(t.last(), &q);
        prop_assert!(list_of_tangle(&t).is_simple());
    }

    #[test]
    fn shorten_bounds(n in 2usize..=5, h in 1usize..=12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tangle(Permutation::identity(n), h, &mut rng);
        let l = list_of_tangle(&t);
        let p = random_witness_set(&t, &mut rng);
        let s = shorten(&t, &p).unwrap();
        let ls = list_of_tangle(&s);
        for i in 1..=n {
            for j in i + 1..=n {
                prop_assert!(ls.get(i, j) <= l.get(i, j).min(p.len() as u32 - 1));
            }
        }
        prop_assert_eq!(ls.type_of(), l.type_of());
        prop_assert!(validate_tangle(&s, &ls, t.first()).is_ok());
        prop_assert_eq!(s.last(), t.last());
    }
}

/// First and last layer plus, for each swapped pair, one random layer where
/// it is inverted, plus a few random extra layers.
fn random_witness_set<R: Rng>(t: &Tangle, rng: &mut R) -> Vec<usize> {
    let h = t.height();
    let mut p = vec![1, h];
    for (i, j, _) in list_of_tangle(t).entries() {
        let cands: Vec<usize> = (1..=h)
            .filter(|&k| t.layers()[k - 1].position(j) < t.layers()[k - 1].position(i))
            .collect();
        p.push(cands[rng.gen_range(0..cands.len())]);
    }
    for _ in 0..rng.gen_range(0..3) {
        p.push(rng.gen_range(1..=h));
    }
    p.sort_unstable();
    p.dedup();
    p
}

#[test]
fn shorten_example_double_swap() {
    let layers: Vec<Permutation> = ["12", "21", "12", "21", "12"].iter().map(|s| s.parse().unwrap()).collect();
    let t = Tangle::new(layers).unwrap();
    let s = shorten(&t, &[1, 4, 5]).unwrap();
    assert_eq!(list_of_tangle(&s).get(1, 2), 2);
}
