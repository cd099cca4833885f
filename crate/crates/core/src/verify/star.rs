use serde::Serialize;

use crate::chamber::HomogeneousSpec;
use crate::error::{Error, Result};
use crate::groups::{PermGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarWitness {
    /// Coset ids of the line and of the two points.
    pub line: usize,
    pub points: [usize; 2],
    /// An element fixing both points but not the line, as an image array.
    pub element: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub point_type: usize,
    pub line_type: usize,
    pub holds: bool,
    pub witness: Option<StarWitness>,
}

/// Membership mask of `g K g^{-1}`, the stabilizer of the coset `gK`.
fn conjugate_mask(group: &PermGroup, k: &Subgroup, g: usize) -> Vec<bool> {
    let gi = group.inv(g);
    let mut mask = vec![false; group.order()];
    for &x in k.members() {
        mask[group.mul(group.mul(g, x as usize), gi)] = true;
    }
    mask
}

/// Checks `G_q ∩ G_q' ⊆ G_xq ∩ G_xq'` for every line `x` and distinct points
/// `q, q'` incident to it, where vertices are cosets of the vertex groups
/// and `G_xq = G_x ∩ G_q` is a flag stabilizer. Equivalently, whatever fixes
/// two points of a line fixes the line. Types are 0-based.
pub fn check_star(spec: &HomogeneousSpec, point_type: usize, line_type: usize) -> Result<StarReport> {
    let vertices = spec.vertices.as_ref().ok_or(Error::MissingVertexGroups)?;
    let k = spec.rank();
    if point_type >= k || line_type >= k || point_type == line_type {
        return Err(Error::InvalidInput(format!("invalid point/line types {} and {}", point_type + 1, line_type + 1)));
    }
    let g = &spec.group;
    let (gq, gr) = (&vertices[point_type], &vertices[line_type]);
    let points = g.left_cosets(gq)?;
    let lines = g.left_cosets(gr)?;
    let mut point_stab: Vec<Option<Vec<bool>>> = vec![None; points.index()];
    for (x, &a) in lines.representatives.iter().enumerate() {
        let line_stab = conjugate_mask(g, gr, a as usize);
        let mut incident: Vec<usize> =
            gr.members().iter().map(|&h| points.coset_of[g.mul(a as usize, h as usize)] as usize).collect();
        incident.sort_unstable();
        incident.dedup();
        for (s, &p) in incident.iter().enumerate() {
            for &p2 in &incident[s + 1..] {
                for &q in &[p, p2] {
                    if point_stab[q].is_none() {
                        point_stab[q] = Some(conjugate_mask(g, gq, points.representatives[q] as usize));
                    }
                }
                let (m1, m2) = (point_stab[p].as_ref().unwrap(), point_stab[p2].as_ref().unwrap());
                if let Some(h) = (0..g.order()).find(|&h| m1[h] && m2[h] && !line_stab[h]) {
                    return Ok(StarReport {
                        point_type: point_type + 1,
                        line_type: line_type + 1,
                        holds: false,
                        witness: Some(StarWitness { line: x, points: [p, p2], element: g.element(h).images().to_vec() }),
                    });
                }
            }
        }
    }
    Ok(StarReport { point_type: point_type + 1, line_type: line_type + 1, holds: true, witness: None })
}
