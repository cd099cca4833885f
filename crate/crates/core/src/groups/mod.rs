//! Finite permutation groups by full enumeration: subgroups, left cosets and
//! generation tests.

mod group;
mod perm;

pub use group::{CosetTable, PermGroup, Subgroup, DEFAULT_GROUP_CAP};
pub use perm::Perm;
