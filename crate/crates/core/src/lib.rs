//! Exact computation of unipotent character degrees, self-dual polynomial
//! censuses, Jordan-decomposition degree sums and involution counts for
//! `Sp(2n, q)` and `SO(2n+1, q)`, with independent cross-checks of the
//! generating functions relating them.

pub mod brutegroups;
pub mod cli;
pub mod error;
pub mod exact;
pub mod ffcensus;
pub mod jordan;
pub mod partitions;
pub mod qseries;
pub mod symbols;
pub mod unipotent;
pub mod verify;

pub use error::{Error, Result};
