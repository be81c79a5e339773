//! Exact solvers for tangles: feasibility and minimum height of swap lists.

pub mod error;
pub mod feasibility;
pub mod heightmin;
pub mod instances;
pub mod io;
pub mod model;
pub mod oracle;
pub mod sublist;

pub use error::{Result, TangleError};
pub use heightmin::{Height, MinHeight};
pub use model::{Permutation, SwapList, SwapSet, Tangle, Violation};
pub use sublist::Limits;
