use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// A finite chamber system over the types `{0, ..., k-1}`.
///
/// Chambers are the ids `0..n`. For every type there is a partition of the
/// chambers into panels; two chambers are `i`-adjacent when they are distinct
/// and lie in a common `i`-panel. Panels are stored sorted and each panel list
/// is ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSystem {
    rank: usize,
    n: usize,
    panels: Vec<Vec<Vec<u32>>>,
    panel_of: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

/// A `J`-residue: one `J`-connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub types: Vec<usize>,
    pub chambers: Vec<u32>,
    /// Rank of the ambient chamber system.
    pub ambient_rank: usize,
}

impl Residue {
    pub fn rank(&self) -> usize {
        self.types.len()
    }

    pub fn corank(&self) -> usize {
        self.ambient_rank - self.types.len()
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.chambers.binary_search(&(c as u32)).is_ok()
    }
}

impl ChamberSystem {
    /// Validates one partition of `0..n` per type.
    pub fn from_partitions(n: usize, rank: usize, partitions: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a chamber system needs at least one chamber".into()));
        }
        if partitions.len() != rank {
            return Err(Error::InvalidInput(format!(
                "expected {rank} panel partitions, found {}",
                partitions.len()
            )));
        }
        let mut ids = Vec::with_capacity(rank);
        for (t, parts) in partitions.iter().enumerate() {
            let mut owner = vec![usize::MAX; n];
            for (p, panel) in parts.iter().enumerate() {
                if panel.is_empty() {
                    return Err(Error::InvalidInput(format!("empty panel of type {}", t + 1)));
                }
                for &c in panel {
                    if c >= n {
                        return Err(Error::InvalidInput(format!("chamber {c} out of range 0..{n}")));
                    }
                    if owner[c] != usize::MAX {
                        return Err(Error::DuplicateChamber { type_index: t + 1, chamber: c });
                    }
                    owner[c] = p;
                }
            }
            if let Some(c) = owner.iter().position(|&o| o == usize::MAX) {
                return Err(Error::PartitionNotCovering { type_index: t + 1, chamber: c });
            }
            ids.push(owner);
        }
        Ok(Self::from_class_ids(n, rank, &ids))
    }

    /// Builds a system from per-type class labels (`ids[t][c]` is any label
    /// of the `t`-panel of `c`). Always valid.
    pub fn from_class_ids(n: usize, rank: usize, ids: &[Vec<usize>]) -> Self {
        let mut panels = Vec::with_capacity(rank);
        let mut panel_of = Vec::with_capacity(rank);
        for owner in ids.iter().take(rank) {
            let mut relabel: BTreeMap<usize, u32> = BTreeMap::new();
            let mut list: Vec<Vec<u32>> = Vec::new();
            let mut of = vec![0u32; n];
            // Chambers visited in increasing order, so panels are numbered by
            // least member and come out sorted.
            for c in 0..n {
                let next = list.len() as u32;
                let p = *relabel.entry(owner[c]).or_insert(next);
                if p == next {
                    list.push(Vec::new());
                }
                list[p as usize].push(c as u32);
                of[c] = p;
            }
            panels.push(list);
            panel_of.push(of);
        }
        ChamberSystem { rank, n, panels, panel_of, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!("{} labels for {} chambers", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, c: usize) -> String {
        match &self.labels {
            Some(l) => l[c].clone(),
            None => c.to_string(),
        }
    }

    pub fn panels(&self, t: usize) -> &[Vec<u32>] {
        &self.panels[t]
    }

    pub fn panel_id(&self, t: usize, c: usize) -> usize {
        self.panel_of[t][c] as usize
    }

    pub fn panel(&self, t: usize, c: usize) -> &[u32] {
        &self.panels[t][self.panel_of[t][c] as usize]
    }

    pub fn adjacent(&self, t: usize, x: usize, y: usize) -> bool {
        x != y && self.panel_of[t][x] == self.panel_of[t][y]
    }

    /// Types `t` with `x ~_t y`.
    pub fn adjacency_types(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&t| self.adjacent(t, x, y))
    }

    /// `(type, chamber)` for every chamber adjacent to `c`.
    pub fn neighbours(&self, c: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rank).flat_map(move |t| {
            self.panel(t, c).iter().filter(move |&&d| d as usize != c).map(move |&d| (t, d as usize))
        })
    }

    /// Every panel has exactly two chambers.
    pub fn is_thin(&self) -> bool {
        self.panels.iter().all(|ps| ps.iter().all(|p| p.len() == 2))
    }

    /// Every panel has at least three chambers.
    pub fn is_thick(&self) -> bool {
        self.panels.iter().all(|ps| ps.iter().all(|p| p.len() >= 3))
    }

    /// Sorted multiset of panel sizes per type.
    pub fn panel_size_profile(&self) -> Vec<Vec<usize>> {
        self.panels
            .iter()
            .map(|ps| {
                let mut s: Vec<usize> = ps.iter().map(Vec::len).collect();
                s.sort_unstable();
                s
            })
            .collect()
    }

    /// Component label of every chamber for the `J`-residue partition.
    pub fn residue_labels(&self, types: &[usize]) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.n);
        for &t in types {
            for panel in &self.panels[t] {
                for w in panel.windows(2) {
                    uf.union(w[0] as usize, w[1] as usize);
                }
            }
        }
        uf.labels()
    }

    /// All `J`-residues, each sorted, listed by least member.
    pub fn residues(&self, types: &[usize]) -> Vec<Vec<u32>> {
        let (labels, count) = self.residue_labels(types);
        let mut out = vec![Vec::new(); count];
        for (c, &l) in labels.iter().enumerate() {
            out[l].push(c as u32);
        }
        out
    }

    /// The `J`-residue containing `c`.
    pub fn residue(&self, types: &[usize], c: usize) -> Result<Residue> {
        if let Some(&t) = types.iter().find(|&&t| t >= self.rank) {
            return Err(Error::InvalidLetter { letter: t + 1, rank: self.rank });
        }
        let mut seen = vec![false; self.n];
        seen[c] = true;
        let mut out = vec![c as u32];
        let mut queue = VecDeque::from([c]);
        while let Some(x) = queue.pop_front() {
            for &t in types {
                for &y in self.panel(t, x) {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        out.push(y);
                        queue.push_back(y as usize);
                    }
                }
            }
        }
        out.sort_unstable();
        let mut types = types.to_vec();
        types.sort_unstable();
        types.dedup();
        Ok(Residue { types, chambers: out, ambient_rank: self.rank })
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.rank).collect();
        self.residue_labels(&all).1 == 1
    }

    /// The chamber system on `chambers` (sorted) using only `types`, with
    /// chamber `chambers[a]` renamed to `a` and type `types[b]` to `b`.
    pub fn restrict(&self, chambers: &[u32], types: &[usize]) -> ChamberSystem {
        let ids: Vec<Vec<usize>> = types
            .iter()
            .map(|&t| chambers.iter().map(|&c| self.panel_of[t][c as usize] as usize).collect())
            .collect();
        let mut sub = Self::from_class_ids(chambers.len(), types.len(), &ids);
        if let Some(l) = &self.labels {
            sub.labels = Some(chambers.iter().map(|&c| l[c as usize].clone()).collect());
        }
        sub
    }

    /// Whether `perm` (a map on chamber ids) preserves every panel partition.
    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        if perm.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &y in perm {
            if y as usize >= self.n || seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        (0..self.rank).all(|t| {
            self.panels[t].iter().all(|panel| {
                let target = self.panel_of[t][perm[panel[0] as usize] as usize];
                panel.iter().all(|&c| self.panel_of[t][perm[c as usize] as usize] == target)
                    && self.panels[t][target as usize].len() == panel.len()
            })
        })
    }

    pub fn to_json(&self) -> ChamberSystemJson {
        let panels = (0..self.rank).map(|t| ((t + 1).to_string(), self.panels[t].clone())).collect();
        ChamberSystemJson { rank: self.rank, n: self.n, panels, labels: self.labels.clone(), metadata: BTreeMap::new() }
    }

    pub fn from_json(raw: ChamberSystemJson) -> Result<Self> {
        let mut partitions = Vec::with_capacity(raw.rank);
        for t in 1..=raw.rank {
            let parts = raw
                .panels
                .get(&t.to_string())
                .ok_or_else(|| Error::InvalidInput(format!("missing panels for type {t}")))?;
            partitions.push(parts.iter().map(|p| p.iter().map(|&c| c as usize).collect()).collect());
        }
        if raw.panels.len() != raw.rank {
            return Err(Error::InvalidInput("panel keys must be exactly 1..rank".into()));
        }
        let sys = Self::from_partitions(raw.n, raw.rank, partitions)?;
        match raw.labels {
            Some(l) => sys.with_labels(l),
            None => Ok(sys),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("chamber systems serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(serde_json::from_str(s)?)
    }
}

/// Canonical JSON form: `{"rank": k, "n": n, "panels": {"1": [[...]], ...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChamberSystemJson {
    pub rank: usize,
    pub n: usize,
    pub panels: BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Free-form provenance; ignored when reading.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl Serialize for ChamberSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChamberSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ChamberSystemJson::deserialize(d)?;
        ChamberSystem::from_json(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        let one = ChamberSystem::from_partitions(2, 1, vec![vec![vec![0, 1]]]).unwrap();
        assert!(one.adjacent(0, 0, 1));
        assert!(one.is_connected());
        let split = ChamberSystem::from_partitions(2, 1, vec![vec![vec![0], vec![1]]]).unwrap();
        assert!(!split.adjacent(0, 0, 1));
        assert!(!split.is_connected());
        let dup = ChamberSystem::from_partitions(3, 1, vec![vec![vec![0, 1], vec![1, 2]]]);
        assert!(matches!(dup, Err(Error::DuplicateChamber { type_index: 1, chamber: 1 })));
        let gap = ChamberSystem::from_partitions(3, 1, vec![vec![vec![0, 1]]]);
        assert!(matches!(gap, Err(Error::PartitionNotCovering { type_index: 1, chamber: 2 })));
    }

    #[test]
    fn panels_are_canonicalised() {
        let c = ChamberSystem::from_partitions(4, 1, vec![vec![vec![3, 1], vec![2, 0]]]).unwrap();
        assert_eq!(c.panels(0), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn residues_of_a_square() {
        // a 4-cycle alternating types 1 and 2
        let c = ChamberSystem::from_partitions(
            4,
            2,
            vec![vec![vec![0, 1], vec![2, 3]], vec![vec![1, 2], vec![3, 0]]],
        )
        .unwrap();
        assert_eq!(c.residue(&[], 2).unwrap().chambers, vec![2]);
        assert_eq!(c.residue(&[0, 1], 2).unwrap().chambers, vec![0, 1, 2, 3]);
        assert_eq!(c.residue(&[0], 2).unwrap().chambers, vec![2, 3]);
        assert_eq!(c.residues(&[1]), vec![vec![0, 3], vec![1, 2]]);
        let r = c.residue(&[0], 0).unwrap();
        assert_eq!((r.rank(), r.corank()), (1, 1));
    }

    #[test]
    fn json_round_trip() {
        let c = ChamberSystem::from_partitions(3, 2, vec![vec![vec![0, 1], vec![2]], vec![vec![0], vec![1, 2]]])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let s = c.to_json_string();
        assert_eq!(
            s,
            r#"{"rank":2,"n":3,"panels":{"1":[[0,1],[2]],"2":[[0],[1,2]]},"labels":["a","b","c"]}"#
        );
        assert_eq!(ChamberSystem::from_json_str(&s).unwrap(), c);
        assert!(ChamberSystem::from_json_str(r#"{"rank":1,"n":2,"panels":{"1":[[0]]}}"#).is_err());
    }
}
