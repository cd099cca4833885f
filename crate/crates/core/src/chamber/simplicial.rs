use serde::Serialize;

use super::system::ChamberSystem;
use crate::error::{Error, Result};

/// Default cap on chamber count for pair-quadratic scans.
pub const DEFAULT_PAIR_BUDGET: usize = 2000;

/// Why a chamber system fails to be simplicial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimplicialWitness {
    /// Two chambers with the same vertex of every cotype.
    SameVertices { x: usize, y: usize },
    /// `x` and `y` share the vertices of cotypes `shared` (1-based) but lie
    /// in no common residue of the complementary type.
    NoCommonFace { x: usize, y: usize, shared: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialReport {
    pub simplicial: bool,
    pub witness: Option<SimplicialWitness>,
}

/// Vertex ids of every chamber: `vertices[i][c]` is the id of the residue of
/// type `I \ {i}` containing `c`.
pub fn vertex_ids(sys: &ChamberSystem) -> Vec<Vec<usize>> {
    let k = sys.rank();
    (0..k)
        .map(|i| {
            let others: Vec<usize> = (0..k).filter(|&t| t != i).collect();
            sys.residue_labels(&others).0
        })
        .collect()
}

/// Checks that chambers are determined by their vertices and that any two
/// chambers meet in a common face (a residue of the type complementary to
/// their shared cotypes).
pub fn is_simplicial(sys: &ChamberSystem) -> Result<SimplicialReport> {
    is_simplicial_with_budget(sys, DEFAULT_PAIR_BUDGET)
}

pub fn is_simplicial_with_budget(sys: &ChamberSystem, budget: usize) -> Result<SimplicialReport> {
    let n = sys.len();
    if n > budget {
        return Err(Error::BudgetExceeded { what: "simpliciality pair scan", limit: budget });
    }
    let k = sys.rank();
    let vertices = vertex_ids(sys);
    // residue labels for every type subset, indexed by bitmask
    let subsets = 1usize << k;
    let residue_of: Vec<Vec<usize>> = (0..subsets)
        .map(|mask| {
            let types: Vec<usize> = (0..k).filter(|t| mask & (1 << t) != 0).collect();
            sys.residue_labels(&types).0
        })
        .collect();
    for x in 0..n {
        for y in x + 1..n {
            let shared: usize = (0..k).filter(|&i| vertices[i][x] == vertices[i][y]).fold(0, |m, i| m | (1 << i));
            if shared == subsets - 1 {
                return Ok(SimplicialReport {
                    simplicial: false,
                    witness: Some(SimplicialWitness::SameVertices { x, y }),
                });
            }
            let face = (subsets - 1) & !shared;
            if residue_of[face][x] != residue_of[face][y] {
                let shared = (0..k).filter(|i| shared & (1 << i) != 0).map(|i| i + 1).collect();
                return Ok(SimplicialReport {
                    simplicial: false,
                    witness: Some(SimplicialWitness::NoCommonFace { x, y, shared }),
                });
            }
        }
    }
    Ok(SimplicialReport { simplicial: true, witness: None })
}
