//! Type-preserving isomorphisms between chamber systems by backtracking.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::system::ChamberSystem;
use crate::error::{Error, Result};

/// Default cap on backtracking steps.
pub const DEFAULT_ISO_BUDGET: usize = 5_000_000;

/// A type-preserving isomorphism `a -> b`, or `None` if there is none.
pub fn find_isomorphism(a: &ChamberSystem, b: &ChamberSystem) -> Result<Option<Vec<u32>>> {
    find_isomorphism_with_budget(a, b, DEFAULT_ISO_BUDGET)
}

pub fn find_isomorphism_with_budget(
    a: &ChamberSystem,
    b: &ChamberSystem,
    budget: usize,
) -> Result<Option<Vec<u32>>> {
    if a.len() != b.len() || a.rank() != b.rank() || a.panel_size_profile() != b.panel_size_profile() {
        return Ok(None);
    }
    let mut search = Search::new(a, b, budget);
    Ok(search.run()?.then(|| search.map.iter().map(|&y| y as u32).collect()))
}

/// Whether `map` is a type-preserving isomorphism `a -> b`.
pub fn is_isomorphism(a: &ChamberSystem, b: &ChamberSystem, map: &[u32]) -> bool {
    if a.len() != b.len() || a.rank() != b.rank() || map.len() != a.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &y in map {
        if y as usize >= b.len() || seen[y as usize] {
            return false;
        }
        seen[y as usize] = true;
    }
    (0..a.rank()).all(|t| {
        a.panels(t).len() == b.panels(t).len()
            && a.panels(t).iter().all(|panel| {
                let target = b.panel_id(t, map[panel[0] as usize] as usize);
                panel.iter().all(|&c| b.panel_id(t, map[c as usize] as usize) == target)
            })
    })
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    a: &'a ChamberSystem,
    b: &'a ChamberSystem,
    /// Chambers of `a` in assignment order, each with the (type, chamber)
    /// through which its candidates are generated; roots have `None`.
    order: Vec<(usize, Option<(usize, usize)>)>,
    map: Vec<usize>,
    used: Vec<bool>,
    /// Panel correspondences per type, both directions.
    fwd: Vec<Vec<usize>>,
    back: Vec<Vec<usize>>,
    steps: usize,
    budget: usize,
}

impl<'a> Search<'a> {
    fn new(a: &'a ChamberSystem, b: &'a ChamberSystem, budget: usize) -> Self {
        let n = a.len();
        // most-constrained-first: the next chamber is the one with the most
        // placed neighbours, so cycles close early
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut score = vec![0usize; n];
        let mut heap = BinaryHeap::new();
        for root in 0..n {
            if placed[root] {
                continue;
            }
            heap.push((0, Reverse(root)));
            while let Some((s, Reverse(x))) = heap.pop() {
                if placed[x] || s != score[x] {
                    continue;
                }
                placed[x] = true;
                let via = a.neighbours(x).find(|&(_, y)| placed[y] && y != x);
                order.push((x, via));
                for (_, y) in a.neighbours(x) {
                    if !placed[y] {
                        score[y] += 1;
                        heap.push((score[y], Reverse(y)));
                    }
                }
            }
        }
        let fwd = (0..a.rank()).map(|t| vec![NONE; a.panels(t).len()]).collect();
        let back = (0..b.rank()).map(|t| vec![NONE; b.panels(t).len()]).collect();
        Search { a, b, order, map: vec![NONE; n], used: vec![false; n], fwd, back, steps: 0, budget }
    }

    fn fits(&self, x: usize, y: usize) -> bool {
        (0..self.a.rank()).all(|t| {
            let (p, q) = (self.a.panel_id(t, x), self.b.panel_id(t, y));
            (self.fwd[t][p] == NONE || self.fwd[t][p] == q)
                && (self.back[t][q] == NONE || self.back[t][q] == p)
                && self.a.panels(t)[p].len() == self.b.panels(t)[q].len()
        })
    }

    /// Assigns `x -> y`, returning the types whose panel pair was new.
    fn assign(&mut self, x: usize, y: usize) -> Vec<usize> {
        self.map[x] = y;
        self.used[y] = true;
        let mut fresh = Vec::new();
        for t in 0..self.a.rank() {
            let (p, q) = (self.a.panel_id(t, x), self.b.panel_id(t, y));
            if self.fwd[t][p] == NONE {
                self.fwd[t][p] = q;
                self.back[t][q] = p;
                fresh.push(t);
            }
        }
        fresh
    }

    fn unassign(&mut self, x: usize, fresh: &[usize]) {
        let y = self.map[x];
        for &t in fresh {
            let (p, q) = (self.a.panel_id(t, x), self.b.panel_id(t, y));
            self.fwd[t][p] = NONE;
            self.back[t][q] = NONE;
        }
        self.map[x] = NONE;
        self.used[y] = false;
    }

    fn run(&mut self) -> Result<bool> {
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded { what: "isomorphism search", limit: self.budget });
        }
        let (x, via) = self.order[depth];
        let candidates: Vec<usize> = match via {
            Some((t, parent)) => {
                self.b.panel(t, self.map[parent]).iter().map(|&c| c as usize).filter(|&c| !self.used[c]).collect()
            }
            None => (0..self.b.len()).filter(|&c| !self.used[c]).collect(),
        };
        for y in candidates {
            if !self.fits(x, y) {
                continue;
            }
            let fresh = self.assign(x, y);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.unassign(x, &fresh);
        }
        Ok(false)
    }
}
