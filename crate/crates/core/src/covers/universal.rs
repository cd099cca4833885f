//! Universal 2-cover by rank-2 residue gluing.
//!
//! Every cover chamber receives one lifted copy of each rank-2 residue of
//! its image. Copies of different residues through a chamber must agree on
//! their shared panels; disagreements are resolved by identifying chambers
//! (and, transitively, copies), in the manner of coset enumeration. When no
//! chamber lacks a copy and all panels agree, the result is the universal
//! 2-cover.

use std::collections::HashMap;

use crate::chamber::{rank2_type_sets, ChamberSystem};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Default cap on cover chambers.
pub const DEFAULT_MAX_CHAMBERS: usize = 1_000_000;

/// Raw output of the gluing procedure.
pub(crate) struct Glued {
    pub cover: ChamberSystem,
    pub map: Vec<u32>,
    pub truncated: bool,
}

struct Copy {
    set: usize,
    /// Cover chamber per position of the base residue.
    members: Vec<usize>,
}

struct Gluing<'a> {
    base: &'a ChamberSystem,
    sets: Vec<Vec<usize>>,
    /// Per type set: residue label and position within the residue of each
    /// base chamber, and the residues themselves.
    label: Vec<Vec<usize>>,
    position: Vec<Vec<usize>>,
    residues: Vec<Vec<Vec<u32>>>,
    /// Per type: the type sets containing it.
    sets_with: Vec<Vec<usize>>,
    chambers: UnionFind,
    over: Vec<usize>,
    copy_of: Vec<Vec<Option<usize>>>,
    copies: UnionFind,
    copy_data: Vec<Copy>,
    live: usize,
    cap: usize,
}

impl<'a> Gluing<'a> {
    fn new(base: &'a ChamberSystem, cap: usize) -> Self {
        let sets = rank2_type_sets(base.rank());
        let mut label = Vec::new();
        let mut position = Vec::new();
        let mut residues = Vec::new();
        for types in &sets {
            let res = base.residues(types);
            let mut l = vec![0; base.len()];
            let mut p = vec![0; base.len()];
            for (r, members) in res.iter().enumerate() {
                for (k, &c) in members.iter().enumerate() {
                    l[c as usize] = r;
                    p[c as usize] = k;
                }
            }
            label.push(l);
            position.push(p);
            residues.push(res);
        }
        let sets_with = (0..base.rank())
            .map(|t| (0..sets.len()).filter(|&q| sets[q].contains(&t)).collect())
            .collect();
        Gluing {
            base,
            sets,
            label,
            position,
            residues,
            sets_with,
            chambers: UnionFind::new(0),
            over: Vec::new(),
            copy_of: Vec::new(),
            copies: UnionFind::new(0),
            copy_data: Vec::new(),
            live: 0,
            cap,
        }
    }

    fn new_chamber(&mut self, b: usize) -> usize {
        let id = self.chambers.push();
        self.over.push(b);
        self.copy_of.push(vec![None; self.sets.len()]);
        self.live += 1;
        id
    }

    fn copy_for(&mut self, v: usize, q: usize) -> Option<usize> {
        let v = self.chambers.find(v);
        self.copy_of[v][q].map(|c| self.copies.find(c))
    }

    /// Lifts the `q`-residue through root chamber `v`.
    fn attach(&mut self, v: usize, q: usize) {
        let b = self.over[v];
        let res = self.residues[q][self.label[q][b]].clone();
        let copy = self.copies.push();
        let mut members = Vec::with_capacity(res.len());
        for &c in &res {
            let node = if c as usize == b { v } else { self.new_chamber(c as usize) };
            self.copy_of[node][q] = Some(copy);
            members.push(node);
        }
        self.copy_data.push(Copy { set: q, members });
    }

    fn member(&mut self, copy: usize, b: usize) -> usize {
        let q = self.copy_data[copy].set;
        let node = self.copy_data[copy].members[self.position[q][b]];
        self.chambers.find(node)
    }

    /// Identifies two chambers over the same base chamber, with all
    /// consequences.
    fn coincide(&mut self, x: usize, y: usize) {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            let Some((keep, gone)) = self.chambers.union(x, y) else { continue };
            self.live -= 1;
            for q in 0..self.sets.len() {
                let kc = self.copy_of[keep][q].map(|c| self.copies.find(c));
                let gc = self.copy_of[gone][q].map(|c| self.copies.find(c));
                match (kc, gc) {
                    (None, Some(g)) => self.copy_of[keep][q] = Some(g),
                    (Some(k), Some(g)) if k != g => {
                        let (ck, cg) = self.copies.union(k, g).expect("distinct copies");
                        let a = std::mem::take(&mut self.copy_data[cg].members);
                        for (pos, &node) in a.iter().enumerate() {
                            pending.push((self.copy_data[ck].members[pos], node));
                        }
                        self.copy_of[keep][q] = Some(ck);
                    }
                    _ => {}
                }
            }
        }
    }

    /// Makes the panels of root chamber `v` agree across type sets. Returns
    /// whether anything was identified.
    fn reconcile(&mut self, v: usize) -> bool {
        let mut changed = false;
        for t in 0..self.base.rank() {
            let with = self.sets_with[t].clone();
            let panel = self.base.panel(t, self.over[v]).to_vec();
            for w in with.windows(2) {
                for &d in &panel {
                    // copies may merge while the panel is being reconciled
                    let (Some(c0), Some(c1)) = (self.copy_for(v, w[0]), self.copy_for(v, w[1])) else { continue };
                    let (x, y) = (self.member(c0, d as usize), self.member(c1, d as usize));
                    if x != y {
                        self.coincide(x, y);
                        changed = true;
                    }
                }
            }
        }
        changed
    }

    fn run(&mut self, c0: usize) -> bool {
        self.new_chamber(c0);
        loop {
            let mut changed = false;
            let mut v = 0;
            while v < self.over.len() {
                if self.chambers.find(v) == v {
                    for q in 0..self.sets.len() {
                        if self.copy_for(v, q).is_none() {
                            if self.live + self.residues[q][self.label[q][self.over[v]]].len() > self.cap + 1 {
                                return true;
                            }
                            self.attach(v, q);
                            changed = true;
                        }
                    }
                    changed |= self.reconcile(v);
                }
                v += 1;
            }
            if !changed {
                return false;
            }
        }
    }

    fn finish(mut self, truncated: bool) -> Glued {
        let (labels, count) = self.chambers.labels();
        let mut roots = vec![usize::MAX; count];
        for (node, &l) in labels.iter().enumerate() {
            if roots[l] == usize::MAX {
                roots[l] = self.chambers.find(node);
            }
        }
        let mut ids = Vec::with_capacity(self.base.rank());
        for t in 0..self.base.rank() {
            let mut classes: HashMap<(usize, usize), usize> = HashMap::new();
            let mut id = Vec::with_capacity(count);
            for (k, &r) in roots.iter().enumerate() {
                let copy = self.sets_with[t].first().copied().and_then(|q| self.copy_for(r, q));
                let key = match copy {
                    Some(c) => (c, self.base.panel_id(t, self.over[r])),
                    None => (usize::MAX, k),
                };
                let next = classes.len();
                id.push(*classes.entry(key).or_insert(next));
            }
            ids.push(id);
        }
        let cover = ChamberSystem::from_class_ids(count, self.base.rank(), &ids);
        let map = roots.iter().map(|&r| self.over[r] as u32).collect();
        Glued { cover, map, truncated }
    }
}

/// Glues the universal 2-cover of the connected system `base` from
/// chamber `c0`; cover chamber 0 lies over `c0`.
pub(crate) fn glue(base: &ChamberSystem, c0: usize, max_chambers: usize) -> Result<Glued> {
    if c0 >= base.len() {
        return Err(Error::InvalidInput(format!("chamber {c0} out of range")));
    }
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut g = Gluing::new(base, max_chambers);
    let truncated = g.run(c0);
    Ok(g.finish(truncated))
}
