//! Tangles (sequences of pairwise-adjacent permutations) and their swap sets.

use std::fmt;

use crate::error::{Result, TangleError};
use crate::model::{Permutation, SwapList};

/// A set of pairwise-disjoint swaps `(i, j)`, `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SwapSet {
    pairs: Vec<(usize, usize)>,
}

impl SwapSet {
    pub(crate) fn from_sorted_disjoint(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        SwapSet { pairs }
    }

    /// Normalizes each pair to `i < j`; rejects pairs that share a wire.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(TangleError::invalid(format!("swap ({a},{b}) on a single wire")));
            }
            let pair = (a.min(b), a.max(b));
            if out.iter().any(|&(x, y)| x == pair.0 || x == pair.1 || y == pair.0 || y == pair.1) {
                return Err(TangleError::invalid(format!(
                    "swap ({},{}) shares a wire with another swap",
                    pair.0, pair.1
                )));
            }
            out.push(pair);
        }
        Ok(SwapSet::from_sorted_disjoint(out))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.binary_search(&(i.min(j), i.max(j))).is_ok()
    }
}

/// A non-empty sequence of pairwise-adjacent permutations of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tangle {
    layers: Vec<Permutation>,
}

impl Tangle {
    pub fn new(layers: Vec<Permutation>) -> Result<Self> {
        let Some(first) = layers.first() else {
            return Err(TangleError::invalid("a tangle needs at least one layer"));
        };
        let n = first.n();
        for (t, w) in layers.windows(2).enumerate() {
            if w[1].n() != n {
                return Err(TangleError::invalid(format!(
                    "layer {} has {} wires, expected {n}",
                    t + 2,
                    w[1].n()
                )));
            }
            if !w[0].adjacent_unchecked(&w[1]) {
                return Err(TangleError::invalid(format!(
                    "layers {} and {} are not adjacent",
                    t + 1,
                    t + 2
                )));
            }
        }
        Ok(Tangle { layers })
    }

    pub(crate) fn from_layers_unchecked(layers: Vec<Permutation>) -> Self {
        debug_assert!(Tangle::new(layers.clone()).is_ok());
        Tangle { layers }
    }

    /// The height-1 tangle `⟨perm⟩`.
    pub fn single(perm: Permutation) -> Self {
        Tangle { layers: vec![perm] }
    }

    pub fn height(&self) -> usize {
        self.layers.len()
    }

    pub fn n(&self) -> usize {
        self.layers[0].n()
    }

    pub fn layers(&self) -> &[Permutation] {
        &self.layers
    }

    pub fn first(&self) -> &Permutation {
        &self.layers[0]
    }

    pub fn last(&self) -> &Permutation {
        self.layers.last().expect("non-empty")
    }

    /// Layers `p..=q` (1-based, inclusive).
    pub fn subtangle(&self, p: usize, q: usize) -> Result<Tangle> {
        if p == 0 || p > q || q > self.height() {
            return Err(TangleError::invalid(format!(
                "subtangle {p}..={q} out of range for height {}",
                self.height()
            )));
        }
        Ok(Tangle {
            layers: self.layers[p - 1..q].to_vec(),
        })
    }

    /// `diff(π_t, π_{t+1})` for every step.
    pub fn steps(&self) -> impl Iterator<Item = SwapSet> + '_ {
        self.layers
            .windows(2)
            .map(|w| w[0].diff(&w[1]).expect("layers are adjacent"))
    }

    pub fn into_layers(self) -> Vec<Permutation> {
        self.layers
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (k, layer) in self.layers.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{layer}")?;
        }
        f.write_str("⟩")
    }
}

/// `L(T)`: how often each pair swaps along `tangle`.
pub fn list_of_tangle(tangle: &Tangle) -> SwapList {
    let mut list = SwapList::new(tangle.n());
    for step in tangle.steps() {
        for &(i, j) in step.pairs() {
            list.add(i, j, 1).expect("pair in range");
        }
    }
    list
}

/// The first condition a tangle fails when checked against a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeMismatch { tangle: usize, list: usize },
    StartMismatch,
    NotAdjacent { layer: usize },
    ListMismatch { i: usize, j: usize, expected: u32, found: u32 },
}

impl Violation {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::SizeMismatch { .. } => "size-mismatch",
            Violation::StartMismatch => "start-mismatch",
            Violation::NotAdjacent { .. } => "not-adjacent",
            Violation::ListMismatch { .. } => "list-mismatch",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { tangle, list } => {
                write!(f, "size-mismatch: tangle has {tangle} wires, list has order {list}")
            }
            Violation::StartMismatch => f.write_str("start-mismatch: first layer is not the start permutation"),
            Violation::NotAdjacent { layer } => {
                write!(f, "not-adjacent: layers {layer} and {} differ by more than neighbour swaps", layer + 1)
            }
            Violation::ListMismatch { i, j, expected, found } => write!(
                f,
                "list-mismatch: pair ({i},{j}) swaps {found} times, list requires {expected}"
            ),
        }
    }
}

/// Checks that `tangle` starts at `start` and realizes exactly `list`.
pub fn validate_tangle(tangle: &Tangle, list: &SwapList, start: &Permutation) -> Result<(), Violation> {
    let n = tangle.n();
    if n != list.n() || n != start.n() {
        return Err(Violation::SizeMismatch {
            tangle: n,
            list: list.n(),
        });
    }
    if tangle.first() != start {
        return Err(Violation::StartMismatch);
    }
    if let Some(t) = tangle
        .layers()
        .windows(2)
        .position(|w| !w[0].adjacent_unchecked(&w[1]))
    {
        return Err(Violation::NotAdjacent { layer: t + 1 });
    }
    let realized = list_of_tangle(tangle);
    for i in 1..=n {
        for j in i + 1..=n {
            let (expected, found) = (list.get(i, j), realized.get(i, j));
            if expected != found {
                return Err(Violation::ListMismatch { i, j, expected, found });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::final_map;

    fn tangle(seqs: &[&str]) -> Tangle {
        Tangle::new(seqs.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn list_of_tangle_examples() {
        assert!(list_of_tangle(&tangle(&["1234"])).is_empty());
        let t = tangle(&["1234", "2134", "2314"]);
        assert_eq!(list_of_tangle(&t), SwapList::from_pairs(4, &[(1, 2), (1, 3)]).unwrap());
        let map = final_map(t.first(), &list_of_tangle(&t)).unwrap();
        assert_eq!(map, t.last().positions().iter().map(|&p| p as i64).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_adjacent_layers() {
        let layers = vec!["1234".parse().unwrap(), "3214".parse().unwrap()];
        assert!(Tangle::new(layers).is_err());
        assert!(Tangle::new(Vec::new()).is_err());
    }

    #[test]
    fn validation_examples() {
        let id = Permutation::identity(4);
        let t = tangle(&["1234", "2134"]);
        assert!(validate_tangle(&t, &SwapList::from_pairs(4, &[(1, 2)]).unwrap(), &id).is_ok());
        let err = validate_tangle(&t, &SwapList::from_pairs(4, &[(1, 3)]).unwrap(), &id).unwrap_err();
        assert_eq!(err.code(), "list-mismatch");
        let err = validate_tangle(&t, &SwapList::from_pairs(4, &[(1, 2)]).unwrap(), &"2134".parse().unwrap())
            .unwrap_err();
        assert_eq!(err.code(), "start-mismatch");
    }

    #[test]
    fn sample_tangle_realizes_its_list() {
        // Height-4 realization of {(1,2),(1,3),(1,4),(2,3)}.
        let t = tangle(&["1234", "2134", "2314", "3241"]);
        let l = SwapList::from_pairs(4, &[(1, 2), (1, 3), (1, 4), (2, 3)]).unwrap();
        assert!(validate_tangle(&t, &l, &Permutation::identity(4)).is_ok());
    }

    #[test]
    fn swap_set_rejects_overlap() {
        assert!(SwapSet::new([(1, 2), (2, 3)]).is_err());
        let s = SwapSet::new([(4, 3), (1, 2)]).unwrap();
        assert_eq!(s.pairs(), &[(1, 2), (3, 4)]);
        assert!(s.contains(4, 3));
    }
}
