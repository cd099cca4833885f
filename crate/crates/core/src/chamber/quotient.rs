use super::system::ChamberSystem;
use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup, DEFAULT_GROUP_CAP};
use crate::unionfind::UnionFind;

/// A quotient by a group of chamber automorphisms.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub system: ChamberSystem,
    /// `projection[c]` is the orbit of chamber `c`.
    pub projection: Vec<u32>,
    /// The acting group, as permutations of the chambers.
    pub group: PermGroup,
}

fn check_generators(sys: &ChamberSystem, gens: &[Perm]) -> Result<PermGroup> {
    for (k, g) in gens.iter().enumerate() {
        if g.degree() != sys.len() {
            return Err(Error::DegreeMismatch { expected: sys.len(), found: g.degree() });
        }
        if !sys.is_automorphism(g.images()) {
            return Err(Error::NotAutomorphism(k));
        }
    }
    PermGroup::from_generators(sys.len(), gens.to_vec(), DEFAULT_GROUP_CAP)
}

/// Orbit quotient by the group generated by `gens`, which must act freely.
///
/// Chambers of the quotient are orbits numbered by least member; two orbits
/// are `i`-adjacent when they contain `i`-adjacent chambers. No residue
/// condition is checked, so the projection need not be a covering.
pub fn orbit_quotient(sys: &ChamberSystem, gens: &[Perm]) -> Result<Quotient> {
    let group = check_generators(sys, gens)?;
    for g in group.elements().iter().filter(|g| !g.is_identity()) {
        if let Some(c) = (0..sys.len()).find(|&c| g.apply(c) == c) {
            return Err(Error::ActionNotFree(c));
        }
    }
    let n = sys.len();
    let mut orbits = UnionFind::new(n);
    for g in group.generators() {
        for c in 0..n {
            orbits.union(c, g.apply(c));
        }
    }
    let (projection, count) = orbits.labels();
    let mut ids = Vec::with_capacity(sys.rank());
    for t in 0..sys.rank() {
        let panels = sys.panels(t).len();
        let mut panel_orbits = UnionFind::new(panels);
        for g in group.generators() {
            for (p, panel) in sys.panels(t).iter().enumerate() {
                panel_orbits.union(p, sys.panel_id(t, g.apply(panel[0] as usize)));
            }
        }
        let mut id = vec![0usize; count];
        for c in 0..n {
            id[projection[c]] = panel_orbits.find(sys.panel_id(t, c));
        }
        ids.push(id);
    }
    Ok(Quotient {
        system: ChamberSystem::from_class_ids(count, sys.rank(), &ids),
        projection: projection.into_iter().map(|o| o as u32).collect(),
        group,
    })
}

/// Type pairs whose residues must be mapped injectively by a covering:
/// all `{i, j}` for rank at least 2, the full type set otherwise.
pub(crate) fn rank2_type_sets(rank: usize) -> Vec<Vec<usize>> {
    if rank < 2 {
        return vec![(0..rank).collect()];
    }
    let mut out = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            out.push(vec![i, j]);
        }
    }
    out
}

/// Orbit quotient that is guaranteed to be a 2-covering: additionally no
/// nontrivial element may meet its own image on a rank-2 residue.
pub fn quotient(sys: &ChamberSystem, gens: &[Perm]) -> Result<Quotient> {
    let q = orbit_quotient(sys, gens)?;
    for types in rank2_type_sets(sys.rank()) {
        let (labels, _) = sys.residue_labels(&types);
        for g in q.group.elements().iter().filter(|g| !g.is_identity()) {
            if let Some(c) = (0..sys.len()).find(|&c| labels[g.apply(c)] == labels[c]) {
                let i = types.first().map_or(0, |&i| i + 1);
                let j = types.get(1).map_or(i, |&j| j + 1);
                return Err(Error::ResidueCollision(i, j, c));
            }
        }
    }
    Ok(q)
}
