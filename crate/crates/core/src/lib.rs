//! Finite Tits geometry: Coxeter groups, chamber systems, gallery homotopy,
//! 2-coverings, and building / C3-geometry verification.

pub mod catalog;
pub mod chamber;
pub mod covers;
pub mod coxeter;
pub mod error;
pub mod groups;
pub mod unionfind;
pub mod verify;

pub use error::{Error, Result};
