//! Coxeter matrices, the word problem, group tables and Coxeter complexes.

mod classify;
mod matrix;
mod table;
mod word;

pub use classify::{classify, classify_component, FiniteType};
pub use matrix::{CoxeterMatrix, DiagramComponents};
pub use table::{CoxeterGroupTable, DEFAULT_ELEMENT_CAP};
pub use word::{braid_closure, braid_neighbours, reduce, WElement, Word, DEFAULT_REWRITE_BUDGET};
