//! Elementary homotopies of galleries and a bounded homotopy search.
//!
//! The search explores, from both galleries at once, the galleries reachable
//! by replacing a stretch lying in a rank-2 residue with a minimal gallery of
//! that residue having the same extremities and no greater length. In a
//! building every gallery reaches the minimal galleries this way, so the
//! search is complete there; elsewhere a `Distinct` verdict means this
//! length-non-increasing space was exhausted without meeting.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::chamber::{rank2_type_sets, ChamberSystem, TypedGallery};
use crate::error::{Error, Result};

/// Default cap on galleries visited by [`homotopic`].
pub const DEFAULT_HOMOTOPY_BUDGET: usize = 100_000;

/// Cap on minimal galleries enumerated per residue replacement.
const REPLACEMENT_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Homotopy {
    Homotopic,
    /// The bounded rewrite space was exhausted without meeting.
    Distinct,
    BudgetExceeded,
}

fn key(g: &TypedGallery) -> (Vec<u32>, Vec<u8>) {
    (g.chambers.clone(), g.types.letters().to_vec())
}

/// Whether `a` and `b` differ by one replacement of a stretch inside a
/// rank-2 residue (including no replacement at all).
pub fn elementary_homotopic(sys: &ChamberSystem, a: &TypedGallery, b: &TypedGallery) -> bool {
    let (a, b) = (a.normalized(), b.normalized());
    if a.start() != b.start() || a.end() != b.end() {
        return false;
    }
    if a == b {
        return true;
    }
    let (m, n) = (a.len(), b.len());
    let step_eq = |x: &TypedGallery, i: usize, y: &TypedGallery, j: usize| {
        x.chambers[i + 1] == y.chambers[j + 1] && x.types.letters()[i] == y.types.letters()[j]
    };
    let mut p = 0;
    while p < m.min(n) && step_eq(&a, p, &b, p) {
        p += 1;
    }
    let mut s = 0;
    while s < m.min(n) - p && a.chambers[m - s - 1] == b.chambers[n - s - 1] && step_eq(&a, m - s - 1, &b, n - s - 1) {
        s += 1;
    }
    let mut used: Vec<u8> = a.types.letters()[p..m - s].to_vec();
    used.extend_from_slice(&b.types.letters()[p..n - s]);
    used.sort_unstable();
    used.dedup();
    used.len() <= 2.min(sys.rank()).max(1)
}

/// Minimal galleries from `x` to `y` inside the `types`-residue.
fn residue_minimal_galleries(sys: &ChamberSystem, types: &[usize], x: usize, y: usize) -> Vec<(Vec<u32>, Vec<u8>)> {
    let mut dist: HashMap<usize, u32> = HashMap::from([(y, 0)]);
    let mut queue = VecDeque::from([y]);
    while let Some(c) = queue.pop_front() {
        if c == x {
            break;
        }
        let next = dist[&c] + 1;
        for &t in types {
            for &d in sys.panel(t, c) {
                dist.entry(d as usize).or_insert_with(|| {
                    queue.push_back(d as usize);
                    next
                });
            }
        }
    }
    let Some(&len) = dist.get(&x) else { return Vec::new() };
    let mut out = Vec::new();
    let mut stack = vec![(vec![x as u32], Vec::new())];
    while let Some((chambers, letters)) = stack.pop() {
        let c = *chambers.last().unwrap() as usize;
        if chambers.len() as u32 == len + 1 {
            out.push((chambers, letters));
            if out.len() >= REPLACEMENT_CAP {
                break;
            }
            continue;
        }
        let here = dist[&c];
        for &t in types {
            for &d in sys.panel(t, c) {
                if d as usize != c && dist.get(&(d as usize)) == Some(&(here - 1)) {
                    let mut ch = chambers.clone();
                    ch.push(d);
                    let mut le: Vec<u8> = letters.clone();
                    le.push(t as u8);
                    stack.push((ch, le));
                }
            }
        }
    }
    out
}

fn neighbours(sys: &ChamberSystem, g: &(Vec<u32>, Vec<u8>), pairs: &[Vec<usize>]) -> Vec<(Vec<u32>, Vec<u8>)> {
    let (chambers, letters) = g;
    let m = letters.len();
    let mut out = Vec::new();
    for types in pairs {
        for a in 0..m {
            for b in a + 1..=m {
                if !types.contains(&(letters[b - 1] as usize)) {
                    break;
                }
                for (rc, rl) in residue_minimal_galleries(sys, types, chambers[a] as usize, chambers[b] as usize) {
                    if rl.len() > b - a || (rl.as_slice() == &letters[a..b] && rc.as_slice() == &chambers[a..=b]) {
                        continue;
                    }
                    let mut nc = chambers[..a].to_vec();
                    nc.extend_from_slice(&rc);
                    nc.extend_from_slice(&chambers[b + 1..]);
                    let mut nl = letters[..a].to_vec();
                    nl.extend_from_slice(&rl);
                    nl.extend_from_slice(&letters[b..]);
                    out.push((nc, nl));
                }
            }
        }
    }
    out
}

/// Bidirectional bounded search for a homotopy between `a` and `b`.
pub fn homotopy_search(sys: &ChamberSystem, a: &TypedGallery, b: &TypedGallery, budget: usize) -> Homotopy {
    let (a, b) = (a.normalized(), b.normalized());
    if a.start() != b.start() || a.end() != b.end() {
        return Homotopy::Distinct;
    }
    let (ka, kb) = (key(&a), key(&b));
    if ka == kb {
        return Homotopy::Homotopic;
    }
    let pairs = rank2_type_sets(sys.rank());
    let mut seen = [HashSet::from([ka.clone()]), HashSet::from([kb.clone()])];
    let mut queues = [VecDeque::from([ka]), VecDeque::from([kb])];
    let mut visited = 2;
    while !queues[0].is_empty() || !queues[1].is_empty() {
        let side = if queues[1].is_empty() || (!queues[0].is_empty() && queues[0].len() <= queues[1].len()) {
            0
        } else {
            1
        };
        let g = queues[side].pop_front().unwrap();
        for next in neighbours(sys, &g, &pairs) {
            if seen[1 - side].contains(&next) {
                return Homotopy::Homotopic;
            }
            if seen[side].insert(next.clone()) {
                visited += 1;
                if visited > budget {
                    return Homotopy::BudgetExceeded;
                }
                queues[side].push_back(next);
            }
        }
    }
    Homotopy::Distinct
}

/// Like [`homotopy_search`], with an undecided search reported as an error.
pub fn homotopic(sys: &ChamberSystem, a: &TypedGallery, b: &TypedGallery, budget: usize) -> Result<bool> {
    match homotopy_search(sys, a, b, budget) {
        Homotopy::Homotopic => Ok(true),
        Homotopy::Distinct => Ok(false),
        Homotopy::BudgetExceeded => Err(Error::BudgetExceeded { what: "homotopy search", limit: budget }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::min_gallery;
    use crate::coxeter::{CoxeterMatrix, Word};

    fn gallery_of_type(sys: &ChamberSystem, table: &crate::coxeter::CoxeterGroupTable, word: &str) -> TypedGallery {
        let w = Word::parse(word, sys.rank()).unwrap();
        let mut chambers = vec![0u32];
        let mut cur = 0;
        for &s in w.letters() {
            cur = table.right_mul(cur, s as usize);
            chambers.push(cur as u32);
        }
        TypedGallery::new(sys, chambers, w).unwrap()
    }

    #[test]
    fn braid_forms_are_elementary_homotopic() {
        let table = CoxeterMatrix::a(2).enumerate().unwrap();
        let c = table.coxeter_complex();
        let a = gallery_of_type(&c, &table, "121");
        let b = gallery_of_type(&c, &table, "212");
        assert!(elementary_homotopic(&c, &a, &a));
        assert!(elementary_homotopic(&c, &a, &b));
        assert_eq!(homotopy_search(&c, &a, &b, 1000), Homotopy::Homotopic);
    }

    #[test]
    fn two_stretches_need_two_steps() {
        let table = CoxeterMatrix::a(3).enumerate().unwrap();
        let c = table.coxeter_complex();
        // 121 323 and 212 232 name the same element, differing in two
        // stretches of types {1,2} and {2,3}
        let a = gallery_of_type(&c, &table, "121323");
        let b = gallery_of_type(&c, &table, "212232");
        assert_eq!(a.end(), b.end());
        assert!(!elementary_homotopic(&c, &a, &b));
        let mid = gallery_of_type(&c, &table, "212323");
        assert!(elementary_homotopic(&c, &a, &mid));
        assert!(elementary_homotopic(&c, &mid, &b));
        assert!(homotopic(&c, &a, &b, 10_000).unwrap());
    }

    #[test]
    fn backtracking_is_null_homotopic() {
        let c = CoxeterMatrix::c(3).coxeter_complex().unwrap();
        let g = min_gallery(&c, 0, 47).unwrap();
        let there_and_back = g.concat(&g.reversed()).unwrap();
        assert!(homotopic(&c, &there_and_back, &TypedGallery::at(0), 100_000).unwrap());
    }

    #[test]
    fn different_endpoints_are_distinct() {
        let c = CoxeterMatrix::a(2).coxeter_complex().unwrap();
        let a = min_gallery(&c, 0, 3).unwrap();
        let b = min_gallery(&c, 0, 4).unwrap();
        assert_eq!(homotopy_search(&c, &a, &b, 100), Homotopy::Distinct);
    }

    #[test]
    fn tiny_budget() {
        let c = CoxeterMatrix::c(3).coxeter_complex().unwrap();
        let g = min_gallery(&c, 0, 47).unwrap();
        let loop_ = g.concat(&g.reversed()).unwrap();
        assert!(matches!(homotopic(&c, &loop_, &TypedGallery::at(0), 3), Err(Error::BudgetExceeded { .. })));
    }
}
