//! Rank-2 residues as bipartite incidence graphs, and type-matrix inference.
//!
//! The incidence graph of a rank-2 system has the 1-panels and 2-panels as
//! vertices and one edge per chamber. It is a generalized `m`-gon when its
//! diameter is `m` and its girth is `2m`.

use std::collections::VecDeque;

use super::system::ChamberSystem;
use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};

/// Bipartite multigraph: vertices `0..a` are 1-panels, `a..a+b` are 2-panels.
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    pub left: usize,
    pub right: usize,
    /// `(vertex, edge id)` lists; edge ids are chamber ids.
    pub adj: Vec<Vec<(usize, usize)>>,
}

impl IncidenceGraph {
    pub fn of(sys: &ChamberSystem) -> Result<Self> {
        if sys.rank() != 2 {
            return Err(Error::WrongRank { expected: 2, found: sys.rank() });
        }
        let left = sys.panels(0).len();
        let right = sys.panels(1).len();
        let mut adj = vec![Vec::new(); left + right];
        for c in 0..sys.len() {
            let a = sys.panel_id(0, c);
            let b = left + sys.panel_id(1, c);
            adj[a].push((b, c));
            adj[b].push((a, c));
        }
        Ok(IncidenceGraph { left, right, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    fn bfs(&self, root: usize) -> (Vec<u32>, Option<u32>) {
        let n = self.vertex_count();
        let mut dist = vec![u32::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[root] = 0;
        let mut shortest_cycle: Option<u32> = None;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &self.adj[u] {
                if e == via[u] {
                    continue;
                }
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    via[v] = e;
                    queue.push_back(v);
                } else {
                    let len = dist[u] + dist[v] + 1;
                    shortest_cycle = Some(shortest_cycle.map_or(len, |s| s.min(len)));
                }
            }
        }
        (dist, shortest_cycle)
    }

    /// Length of a shortest cycle, `None` for forests. Parallel edges count
    /// as 2-cycles.
    pub fn girth(&self) -> Option<u32> {
        (0..self.vertex_count()).filter_map(|r| self.bfs(r).1).min()
    }

    /// Largest distance, `None` if disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for r in 0..self.vertex_count() {
            let (dist, _) = self.bfs(r);
            let far = *dist.iter().max().unwrap();
            if far == u32::MAX {
                return None;
            }
            best = best.max(far);
        }
        Some(best)
    }

    /// `Some(m)` when the graph is a generalized `m`-gon.
    pub fn polygon_order(&self) -> Option<u32> {
        let d = self.diameter()?;
        let g = self.girth()?;
        (d >= 2 && g == 2 * d).then_some(d)
    }
}

/// Whether a rank-2 chamber system is a generalized `m`-gon.
pub fn is_generalized_mgon(sys: &ChamberSystem, m: u32) -> Result<bool> {
    let g = IncidenceGraph::of(sys)?;
    Ok(g.diameter() == Some(m) && g.girth() == Some(2 * m))
}

/// `(girth, diameter)` of a rank-2 system's incidence graph.
pub fn polygon_parameters(sys: &ChamberSystem) -> Result<(Option<u32>, Option<u32>)> {
    let g = IncidenceGraph::of(sys)?;
    Ok((g.girth(), g.diameter()))
}

/// The rank-2 residue of `c` of types `{i, j}`, as its own system.
pub fn rank2_residue(sys: &ChamberSystem, i: usize, j: usize, c: usize) -> Result<ChamberSystem> {
    let r = sys.residue(&[i, j], c)?;
    Ok(sys.restrict(&r.chambers, &[i, j]))
}

/// Infers `(m_ij)` from the polygon order of every rank-2 residue.
pub fn infer_type_matrix(sys: &ChamberSystem) -> Result<CoxeterMatrix> {
    let k = sys.rank();
    let mut rows = vec![vec![Some(1u32); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let mut found: Option<u32> = None;
            for residue in sys.residues(&[i, j]) {
                let local = sys.restrict(&residue, &[i, j]);
                let m = IncidenceGraph::of(&local)?
                    .polygon_order()
                    .ok_or(Error::ResidueNotPolygon(i + 1, j + 1, residue[0] as usize))?;
                match found {
                    None => found = Some(m),
                    Some(prev) if prev != m => {
                        return Err(Error::InconsistentResidues {
                            i: i + 1,
                            j: j + 1,
                            m1: prev as usize,
                            m2: m as usize,
                        })
                    }
                    _ => {}
                }
            }
            rows[i][j] = found;
            rows[j][i] = found;
        }
    }
    CoxeterMatrix::new(rows)
}
