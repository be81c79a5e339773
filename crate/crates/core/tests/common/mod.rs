#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use tangle_core::model::{Permutation, SwapList, Tangle};

/// Every permutation of `1..=n` as a display sequence, lexicographic.
pub fn all_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_sequences(n - 1) {
        for k in 0..=rest.len() {
            let mut s = rest.clone();
            s.insert(k, n);
            out.push(s);
        }
    }
    out.sort();
    out
}

pub fn all_permutations(n: usize) -> Vec<Permutation> {
    all_sequences(n)
        .iter()
        .map(|s| Permutation::from_sequence(s).unwrap())
        .collect()
}

/// All lists of order `n` with entries in `0..=max`.
pub fn all_lists(n: usize, max: u32) -> Vec<SwapList> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let radix = max as usize + 1;
    let total = radix.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut l = SwapList::new(n);
            for &(i, j) in &pairs {
                l.set(i, j, (code % radix) as u32).unwrap();
                code /= radix;
            }
            l
        })
        .collect()
}

/// A random walk of `height` layers from `start`; each step applies a
/// uniformly chosen non-empty set of disjoint neighbour swaps.
pub fn random_tangle<R: Rng>(start: Permutation, height: usize, rng: &mut R) -> Tangle {
    let mut layers = vec![start];
    while layers.len() < height {
        let nb = layers.last().unwrap().neighbors();
        if nb.is_empty() {
            break;
        }
        layers.push(nb.choose(rng).unwrap().clone());
    }
    Tangle::new(layers).unwrap()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut s: Vec<usize> = (1..=n).collect();
    s.shuffle(rng);
    Permutation::from_sequence(&s).unwrap()
}

pub fn arb_permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|s| Permutation::from_sequence(&s).unwrap())
}

pub fn arb_list(min_n: usize, max_n: usize, max_entry: u32) -> impl Strategy<Value = SwapList> {
    (min_n..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_entry, n * (n - 1) / 2).prop_map(move |v| {
            let mut l = SwapList::new(n);
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    l.set(i, j, v[k]).unwrap();
                    k += 1;
                }
            }
            l
        })
    })
}

pub fn fib(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}
