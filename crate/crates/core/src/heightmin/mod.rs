//! Minimum-height tangles.
//!
//! * [`bfs_min_height_simple`]: breadth-first search over permutations for
//!   simple lists.
//! * [`dp_min_height`]: dynamic program over all sublists for arbitrary lists.
//! * [`oddeven_connect`] and [`shorten`]: constructive helpers built on
//!   odd-even transposition sort.

mod bfs;
mod connect;
mod dp;

use std::fmt;

pub use bfs::bfs_min_height_simple;
pub use connect::{oddeven_connect, shorten};
pub use dp::{dp_min_height, HeightTable};

use crate::model::Tangle;

/// A tangle height (number of layers), or `Infinite` for infeasible lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Height {
    Finite(u32),
    Infinite,
}

impl Height {
    pub fn is_finite(self) -> bool {
        matches!(self, Height::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Height::Finite(h) => Some(h),
            Height::Infinite => None,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{h}"),
            Height::Infinite => f.write_str("∞"),
        }
    }
}

/// Result of a height minimization: the optimum and, when finite, a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinHeight {
    pub height: Height,
    pub witness: Option<Tangle>,
}

impl MinHeight {
    pub(crate) fn infeasible() -> Self {
        MinHeight {
            height: Height::Infinite,
            witness: None,
        }
    }
}
