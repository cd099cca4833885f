use std::collections::VecDeque;

use super::map::CoveringMap;
use crate::error::{Error, Result};
use crate::groups::Perm;

/// The deck transformation `φ` of a connected cover with `φ(from) = to`, if
/// one exists. Each step is forced: the image of a neighbour is the unique
/// chamber of the corresponding panel lying over the same base chamber.
pub fn extend_deck(p: &CoveringMap, from: usize, to: usize) -> Option<Perm> {
    let cover = &p.cover;
    let n = cover.len();
    if p.image(from) != p.image(to) {
        return None;
    }
    let mut phi = vec![u32::MAX; n];
    let mut hit = vec![false; n];
    phi[from] = to as u32;
    hit[to] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        let y = phi[x] as usize;
        for (t, z) in cover.neighbours(x) {
            let want = p.image(z);
            let mut over = cover.panel(t, y).iter().filter(|&&w| p.image(w as usize) == want);
            let w = match (over.next(), over.next()) {
                (Some(&w), None) => w,
                _ => return None,
            };
            if phi[z] == u32::MAX {
                if hit[w as usize] {
                    return None;
                }
                phi[z] = w;
                hit[w as usize] = true;
                queue.push_back(z);
            } else if phi[z] != w {
                return None;
            }
        }
    }
    if phi.contains(&u32::MAX) || !cover.is_automorphism(&phi) {
        return None;
    }
    Some(Perm::from_images(phi).expect("bijective by construction"))
}

/// All deck transformations of a connected cover, ordered by the image of
/// chamber 0, and whether they act transitively on that fiber.
pub fn deck_transformations(p: &CoveringMap) -> Result<(Vec<Perm>, bool)> {
    if !p.cover.is_connected() {
        return Err(Error::Disconnected);
    }
    let fiber = p.fiber(p.image(0));
    let deck: Vec<Perm> = fiber.iter().filter_map(|&f| extend_deck(p, 0, f)).collect();
    let regular = deck.len() == fiber.len();
    Ok((deck, regular))
}
