use serde::Serialize;

use crate::chamber::{rank2_type_sets, ChamberSystem, TypedGallery};
use crate::coxeter::Word;
use crate::error::{Error, Result};

/// A chamber map `cover -> base` claimed to be a 2-covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMap {
    pub cover: ChamberSystem,
    pub base: ChamberSystem,
    pub map: Vec<u32>,
}

/// Outcome of [`is_covering`]; `diagnostic` names the first violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub covering: bool,
    pub diagnostic: Option<String>,
}

impl CoveringReport {
    fn fail(msg: String) -> Self {
        CoveringReport { covering: false, diagnostic: Some(msg) }
    }
}

impl CoveringMap {
    pub fn new(cover: ChamberSystem, base: ChamberSystem, map: Vec<u32>) -> Result<Self> {
        if cover.rank() != base.rank() {
            return Err(Error::WrongRank { expected: base.rank(), found: cover.rank() });
        }
        if map.len() != cover.len() {
            return Err(Error::InvalidInput(format!("map has {} entries for {} chambers", map.len(), cover.len())));
        }
        if let Some(&c) = map.iter().find(|&&c| c as usize >= base.len()) {
            return Err(Error::InvalidInput(format!("map image {c} out of range")));
        }
        Ok(CoveringMap { cover, base, map })
    }

    /// The identity covering of `sys`.
    pub fn identity(sys: &ChamberSystem) -> Self {
        CoveringMap { cover: sys.clone(), base: sys.clone(), map: (0..sys.len() as u32).collect() }
    }

    pub fn image(&self, c: usize) -> usize {
        self.map[c] as usize
    }

    /// Cover chambers over base chamber `b`, ascending.
    pub fn fiber(&self, b: usize) -> Vec<usize> {
        (0..self.cover.len()).filter(|&c| self.image(c) == b).collect()
    }

    /// Sizes of all fibers, indexed by base chamber.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.base.len()];
        for &b in &self.map {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// Image of a cover gallery.
    pub fn project(&self, g: &TypedGallery) -> TypedGallery {
        TypedGallery { chambers: g.chambers.iter().map(|&c| self.map[c as usize]).collect(), types: g.types.clone() }
    }
}

/// Checks type preservation, surjectivity, and that every rank-2 residue of
/// the cover maps bijectively and adjacency-preservingly onto a rank-2
/// residue of the base.
pub fn is_covering(p: &CoveringMap) -> CoveringReport {
    let (cover, base) = (&p.cover, &p.base);
    if cover.rank() != base.rank() || p.map.len() != cover.len() || p.map.iter().any(|&b| b as usize >= base.len()) {
        return CoveringReport::fail("map is not a total chamber map between systems of equal rank".into());
    }
    for t in 0..cover.rank() {
        for panel in cover.panels(t) {
            let target = base.panel_id(t, p.image(panel[0] as usize));
            if let Some(&c) = panel.iter().find(|&&c| base.panel_id(t, p.image(c as usize)) != target) {
                return CoveringReport::fail(format!(
                    "type {} panel of chamber {} is not mapped into a panel (chamber {c})",
                    t + 1,
                    panel[0]
                ));
            }
        }
    }
    let sizes = p.fiber_sizes();
    if let Some(b) = sizes.iter().position(|&s| s == 0) {
        return CoveringReport::fail(format!("base chamber {b} is not covered"));
    }
    for types in rank2_type_sets(cover.rank()) {
        let base_labels = base.residue_labels(&types).0;
        let base_sizes = {
            let mut s = vec![0usize; base.len()];
            for &l in &base_labels {
                s[l] += 1;
            }
            s
        };
        let one_based: Vec<usize> = types.iter().map(|t| t + 1).collect();
        for residue in cover.residues(&types) {
            let mut images: Vec<u32> = residue.iter().map(|&c| p.map[c as usize]).collect();
            images.sort_unstable();
            if images.windows(2).any(|w| w[0] == w[1]) {
                return CoveringReport::fail(format!(
                    "{one_based:?}-residue of chamber {} is not mapped injectively",
                    residue[0]
                ));
            }
            if images.len() != base_sizes[base_labels[images[0] as usize]] {
                return CoveringReport::fail(format!(
                    "{one_based:?}-residue of chamber {} does not map onto a residue",
                    residue[0]
                ));
            }
            for &c in &residue {
                for &t in &types {
                    if cover.panel(t, c as usize).len() != base.panel(t, p.image(c as usize)).len() {
                        return CoveringReport::fail(format!(
                            "type {} panel of chamber {c} does not map onto a panel",
                            t + 1
                        ));
                    }
                }
            }
        }
    }
    CoveringReport { covering: true, diagnostic: None }
}

/// The unique gallery over `g` starting at cover chamber `start`.
pub fn lift_gallery(p: &CoveringMap, g: &TypedGallery, start: usize) -> Result<TypedGallery> {
    if start >= p.cover.len() || p.image(start) != g.start() {
        return Err(Error::NotCovering(format!("chamber {start} does not lie over the gallery start")));
    }
    let mut chambers = vec![start as u32];
    let mut cur = start;
    for (j, &t) in g.types.letters().iter().enumerate() {
        let target = g.chambers[j + 1] as usize;
        if target != g.chambers[j] as usize {
            let mut over = p.cover.panel(t as usize, cur).iter().filter(|&&c| p.image(c as usize) == target);
            cur = match (over.next(), over.next()) {
                (Some(&c), None) => c as usize,
                (None, _) => {
                    return Err(Error::NotCovering(format!(
                        "no lift of the type {} step to {target} at chamber {cur}",
                        t + 1
                    )))
                }
                _ => {
                    return Err(Error::NotCovering(format!(
                        "ambiguous lift of the type {} step to {target} at chamber {cur}",
                        t + 1
                    )))
                }
            };
        }
        chambers.push(cur as u32);
    }
    Ok(TypedGallery { chambers, types: Word(g.types.letters().to_vec()) })
}
