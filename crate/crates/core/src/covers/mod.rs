//! Gallery homotopy, 2-coverings, universal covers and deck transformations.

mod deck;
mod homotopy;
mod lift;
mod map;
mod universal;

use serde::Serialize;

pub use deck::{deck_transformations, extend_deck};
pub use homotopy::{elementary_homotopic, homotopic, homotopy_search, Homotopy, DEFAULT_HOMOTOPY_BUDGET};
pub use lift::{cover_from_lift, LiftedCover};
pub use map::{is_covering, lift_gallery, CoveringMap, CoveringReport};
pub use universal::DEFAULT_MAX_CHAMBERS;

use crate::chamber::{ChamberSystem, ChamberSystemJson};
use crate::error::Result;
use crate::groups::Perm;

/// A universal 2-cover together with its deck group.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub covering: CoveringMap,
    pub base_chamber: usize,
    pub truncated: bool,
    /// Empty when truncated.
    pub deck: Vec<Perm>,
    pub regular: bool,
}

impl CoverResult {
    pub fn fiber_size(&self) -> usize {
        self.covering.fiber(self.base_chamber).len()
    }

    pub fn to_json(&self) -> CoverResultJson {
        CoverResultJson {
            base: self.covering.base.to_json(),
            cover: self.covering.cover.to_json(),
            map: self.covering.map.clone(),
            base_chamber: self.base_chamber,
            truncated: self.truncated,
            chambers: self.covering.cover.len(),
            fiber_size: self.fiber_size(),
            deck_order: self.deck.len(),
            regular: self.regular,
            deck: self.deck.iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverResultJson {
    pub chambers: usize,
    pub fiber_size: usize,
    pub deck_order: usize,
    pub regular: bool,
    pub truncated: bool,
    pub base_chamber: usize,
    pub map: Vec<u32>,
    pub deck: Vec<Vec<u32>>,
    pub base: ChamberSystemJson,
    pub cover: ChamberSystemJson,
}

/// The universal 2-cover of a connected system, glued from `c0`; cover
/// chamber 0 lies over `c0`. Truncation at `max_chambers` is reported, in
/// which case the cover is partial and carries no deck data.
pub fn universal_cover(sys: &ChamberSystem, c0: usize, max_chambers: usize) -> Result<CoverResult> {
    let glued = universal::glue(sys, c0, max_chambers)?;
    let covering = CoveringMap::new(glued.cover, sys.clone(), glued.map)?;
    let (deck, regular) = if glued.truncated { (Vec::new(), false) } else { deck_transformations(&covering)? };
    Ok(CoverResult { covering, base_chamber: c0, truncated: glued.truncated, deck, regular })
}
