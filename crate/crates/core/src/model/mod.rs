//! The tangle data model: permutations, swap lists, tangles and the
//! structural maps between them.

mod list;
mod permutation;
mod tangle;

pub use list::{
    extends, final_map, final_permutation, is_consistent, is_non_separable, separating_triple,
    simple_list_of, SwapList,
};
pub use permutation::{IndependentMasks, Permutation};
pub use tangle::{list_of_tangle, validate_tangle, SwapSet, Tangle, Violation};
