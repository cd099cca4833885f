use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::system::ChamberSystem;
use crate::coxeter::Word;
use crate::error::{Error, Result};

/// Default cap on the number of distinct minimal-gallery types per chamber
/// pair.
pub const DEFAULT_TYPE_SET_CAP: usize = 10_000;

/// A gallery `C_0, ..., C_m` together with its type word `i_1 ... i_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypedGallery {
    pub chambers: Vec<u32>,
    pub types: Word,
}

impl TypedGallery {
    /// The empty gallery at `c`.
    pub fn at(c: usize) -> Self {
        TypedGallery { chambers: vec![c as u32], types: Word::empty() }
    }

    /// Checks consecutive adjacency; stuttering steps (`C_{j-1} = C_j`) are
    /// accepted here and removed by [`TypedGallery::normalized`].
    pub fn new(sys: &ChamberSystem, chambers: Vec<u32>, types: Word) -> Result<Self> {
        if chambers.is_empty() {
            return Err(Error::InvalidGallery("no chambers".into()));
        }
        if chambers.len() != types.len() + 1 {
            return Err(Error::InvalidGallery(format!(
                "{} chambers need {} types, found {}",
                chambers.len(),
                chambers.len() - 1,
                types.len()
            )));
        }
        if let Some(&c) = chambers.iter().find(|&&c| c as usize >= sys.len()) {
            return Err(Error::InvalidGallery(format!("chamber {c} out of range")));
        }
        for (j, &t) in types.letters().iter().enumerate() {
            let (a, b) = (chambers[j] as usize, chambers[j + 1] as usize);
            if t as usize >= sys.rank() {
                return Err(Error::InvalidLetter { letter: t as usize + 1, rank: sys.rank() });
            }
            if sys.panel_id(t as usize, a) != sys.panel_id(t as usize, b) {
                return Err(Error::InvalidGallery(format!(
                    "chambers {a} and {b} are not {}-adjacent",
                    t + 1
                )));
            }
        }
        Ok(TypedGallery { chambers, types })
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn start(&self) -> usize {
        self.chambers[0] as usize
    }

    pub fn end(&self) -> usize {
        *self.chambers.last().unwrap() as usize
    }

    /// Drops stuttering steps.
    pub fn normalized(&self) -> TypedGallery {
        let mut chambers = vec![self.chambers[0]];
        let mut types = Vec::with_capacity(self.types.len());
        for (j, &t) in self.types.letters().iter().enumerate() {
            let next = self.chambers[j + 1];
            if next != *chambers.last().unwrap() {
                chambers.push(next);
                types.push(t);
            }
        }
        TypedGallery { chambers, types: Word(types) }
    }

    pub fn is_normalized(&self) -> bool {
        self.chambers.windows(2).all(|w| w[0] != w[1])
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &TypedGallery) -> Result<TypedGallery> {
        if self.end() != other.start() {
            return Err(Error::InvalidGallery("galleries do not meet".into()));
        }
        let mut chambers = self.chambers.clone();
        chambers.extend_from_slice(&other.chambers[1..]);
        Ok(TypedGallery { chambers, types: self.types.concat(&other.types) })
    }

    pub fn reversed(&self) -> TypedGallery {
        TypedGallery {
            chambers: self.chambers.iter().rev().copied().collect(),
            types: self.types.reversed(),
        }
    }
}

/// BFS distances from `x`, `u32::MAX` where unreachable.
pub fn distances_from(sys: &ChamberSystem, x: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; sys.len()];
    dist[x] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(c) = queue.pop_front() {
        for (_, d) in sys.neighbours(c) {
            if dist[d] == u32::MAX {
                dist[d] = dist[c] + 1;
                queue.push_back(d);
            }
        }
    }
    dist
}

/// A shortest gallery from `x` to `y`, choosing least types and chambers
/// first.
pub fn min_gallery(sys: &ChamberSystem, x: usize, y: usize) -> Result<TypedGallery> {
    let dist = distances_from(sys, y);
    if dist[x] == u32::MAX {
        return Err(Error::Disconnected);
    }
    let mut chambers = vec![x as u32];
    let mut types = Vec::new();
    let mut cur = x;
    while cur != y {
        let (t, next) = sys
            .neighbours(cur)
            .find(|&(_, d)| dist[d] + 1 == dist[cur])
            .expect("a BFS predecessor exists");
        chambers.push(next as u32);
        types.push(t as u8);
        cur = next;
    }
    Ok(TypedGallery { chambers, types: Word(types) })
}

/// Types of all minimal galleries from `x` to every chamber, computed over
/// the BFS predecessor DAG. `None` where unreachable.
pub fn minimal_gallery_types_from(
    sys: &ChamberSystem,
    x: usize,
    cap: usize,
) -> Result<Vec<Option<BTreeSet<Word>>>> {
    let dist = distances_from(sys, x);
    let mut order: Vec<usize> = (0..sys.len()).filter(|&c| dist[c] != u32::MAX).collect();
    order.sort_by_key(|&c| dist[c]);
    let mut types: Vec<Option<HashSet<Vec<u8>>>> = vec![None; sys.len()];
    types[x] = Some(HashSet::from([Vec::new()]));
    for &c in order.iter().skip(1) {
        let mut set = HashSet::new();
        for (t, p) in sys.neighbours(c) {
            if dist[p] + 1 != dist[c] {
                continue;
            }
            for w in types[p].as_ref().expect("predecessor processed") {
                let mut v = w.clone();
                v.push(t as u8);
                set.insert(v);
                if set.len() > cap {
                    return Err(Error::BudgetExceeded { what: "minimal gallery types", limit: cap });
                }
            }
        }
        types[c] = Some(set);
    }
    Ok(types
        .into_iter()
        .map(|s| s.map(|s| s.into_iter().map(Word).collect::<BTreeSet<_>>()))
        .collect())
}

/// Types of all minimal galleries from `x` to `y`, deduplicated.
pub fn minimal_gallery_types(sys: &ChamberSystem, x: usize, y: usize) -> Result<BTreeSet<Word>> {
    minimal_gallery_types_from(sys, x, DEFAULT_TYPE_SET_CAP)?
        .swap_remove(y)
        .ok_or(Error::Disconnected)
}
