//! Covers of coset chamber systems from homomorphisms of the face groups.
//!
//! Given `φ_i : G_i → π` agreeing on `H`, the groups `Ĝ_i` are the graphs
//! of `φ_i` inside `Ĝ = G × π`, `Ĥ` is the common graph over `H`, and
//! `Ĝ/Ĥ → G/H` is the projection.

use super::map::CoveringMap;
use crate::chamber::HomogeneousSpec;
use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup, Subgroup};

/// Output of [`cover_from_lift`].
#[derive(Clone, Debug)]
pub struct LiftedCover {
    pub covering: CoveringMap,
    pub spec: HomogeneousSpec,
    /// Whether the `Ĝ_i` generate `Ĝ`.
    pub connected: bool,
    /// Whether `|⟨Ĝ_i, Ĝ_j⟩| = |⟨G_i, G_j⟩|` for all `i < j`, i.e. rank-2
    /// residues map isomorphically.
    pub rank2_isomorphic: bool,
}

/// `phi[i]` lists pairs `(g, φ_i(g))` for a generating set of `G_i`.
pub fn cover_from_lift(
    spec: &HomogeneousSpec,
    pi: &PermGroup,
    phi: &[Vec<(Perm, Perm)>],
    cap: usize,
) -> Result<LiftedCover> {
    let k = spec.rank();
    if phi.len() != k {
        return Err(Error::InvalidInput(format!("expected lift data for {k} types, found {}", phi.len())));
    }
    let g = &spec.group;
    let d = g.degree();
    let hat = g.direct_product(pi, cap)?;
    let mut faces = Vec::with_capacity(k);
    let mut principal: Option<Subgroup> = None;
    for (i, pairs) in phi.iter().enumerate() {
        for (a, x) in pairs {
            if !g.index_of(a).is_some_and(|id| spec.faces[i].contains_id(id)) || !pi.contains(x) {
                return Err(Error::NotHomomorphism(i + 1));
            }
        }
        let sources: Vec<Perm> = pairs.iter().map(|(a, _)| a.clone()).collect();
        if g.subgroup_generated(&sources)? != spec.faces[i] {
            return Err(Error::NotHomomorphism(i + 1));
        }
        let graph_gens: Vec<Perm> = pairs.iter().map(|(a, x)| a.direct_sum(x)).collect();
        let graph = hat.subgroup_generated(&graph_gens)?;
        if graph.order() != spec.faces[i].order() {
            return Err(Error::NotHomomorphism(i + 1));
        }
        let over_h: Vec<u32> = graph
            .members()
            .iter()
            .copied()
            .filter(|&e| {
                let a = hat.element(e as usize).restrict(0, d);
                spec.principal.contains_id(g.index_of(&a).expect("projection lies in G"))
            })
            .collect();
        match &principal {
            None => principal = Some(hat.subgroup_from_ids(over_h)?),
            Some(h) if h.members() != over_h.as_slice() => return Err(Error::IncompatibleOnH),
            _ => {}
        }
        faces.push(graph);
    }
    let principal = principal.unwrap_or_else(|| hat.trivial_subgroup());
    let connected = hat.generates(&faces.iter().collect::<Vec<_>>());
    let mut rank2_isomorphic = true;
    for i in 0..k {
        for j in i + 1..k {
            let up = hat.join(&[&faces[i], &faces[j]])?.order();
            let down = g.join(&[&spec.faces[i], &spec.faces[j]])?.order();
            rank2_isomorphic &= up == down;
        }
    }
    let hat_spec = HomogeneousSpec::new(hat, principal, faces, None)?;
    let (cover, cosets) = hat_spec.coset_chambers()?;
    let (base, base_cosets) = spec.coset_chambers()?;
    let map = cosets
        .representatives
        .iter()
        .map(|&r| {
            let a = hat_spec.group.element(r as usize).restrict(0, d);
            base_cosets.coset_of[g.index_of(&a).expect("projection lies in G")]
        })
        .collect();
    Ok(LiftedCover { covering: CoveringMap::new(cover, base, map)?, spec: hat_spec, connected, rank2_isomorphic })
}
