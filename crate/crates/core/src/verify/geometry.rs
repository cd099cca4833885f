use std::collections::BTreeSet;

use serde::Serialize;

use crate::chamber::{vertex_ids, ChamberSystem};

/// A vertex: its cotype (0-based) and its id among vertices of that cotype.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub cotype: usize,
    pub id: usize,
}

/// Vertices are the corank-1 residues; two vertices are incident when their
/// residues share a chamber.
#[derive(Clone, Debug)]
pub struct IncidenceGeometry {
    rank: usize,
    /// `vertex_of[i][c]`: the cotype-`i` vertex of chamber `c`.
    vertex_of: Vec<Vec<usize>>,
    counts: Vec<usize>,
    /// `incident[i][a]`: incident vertices of other cotypes, sorted.
    incident: Vec<Vec<BTreeSet<Vertex>>>,
    names: Vec<Vec<String>>,
}

impl IncidenceGeometry {
    pub fn of(sys: &ChamberSystem) -> Self {
        let k = sys.rank();
        let vertex_of = vertex_ids(sys);
        let counts: Vec<usize> = vertex_of.iter().map(|v| v.iter().max().map_or(0, |&m| m + 1)).collect();
        let mut incident: Vec<Vec<BTreeSet<Vertex>>> = counts.iter().map(|&n| vec![BTreeSet::new(); n]).collect();
        let mut first: Vec<Vec<usize>> = counts.iter().map(|&n| vec![usize::MAX; n]).collect();
        for c in 0..sys.len() {
            for i in 0..k {
                let a = vertex_of[i][c];
                first[i][a] = first[i][a].min(c);
                for j in 0..k {
                    if j != i {
                        incident[i][a].insert(Vertex { cotype: j, id: vertex_of[j][c] });
                    }
                }
            }
        }
        // a vertex is named by the matching token of its first chamber's
        // label, when labels split into one token per type
        let names = (0..k)
            .map(|i| {
                (0..counts[i])
                    .map(|a| {
                        sys.labels()
                            .and_then(|l| {
                                let tokens: Vec<&str> = l[first[i][a]].split_whitespace().collect();
                                (tokens.len() == k).then(|| tokens[i].to_string())
                            })
                            .unwrap_or_else(|| format!("v{}.{a}", i + 1))
                    })
                    .collect()
            })
            .collect();
        IncidenceGeometry { rank: k, vertex_of, counts, incident, names }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of vertices of each cotype.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn vertex_of(&self, cotype: usize, chamber: usize) -> Vertex {
        Vertex { cotype, id: self.vertex_of[cotype][chamber] }
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.cotype][v.id]
    }

    pub fn incident(&self, u: Vertex, v: Vertex) -> bool {
        u.cotype != v.cotype && self.incident[u.cotype][u.id].contains(&v)
    }

    /// Number of unordered incident pairs.
    pub fn incidence_count(&self) -> usize {
        self.incident.iter().flatten().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Vertex ids of cotype `t` incident to `v`, ascending.
    pub fn shadow(&self, v: Vertex, t: usize) -> Vec<usize> {
        self.incident[v.cotype][v.id].iter().filter(|u| u.cotype == t).map(|u| u.id).collect()
    }

    /// Whether the vertices incident to `v` form a connected graph under
    /// incidence.
    pub fn residue_connected(&self, v: Vertex) -> bool {
        let nbrs: Vec<Vertex> = self.incident[v.cotype][v.id].iter().copied().collect();
        if nbrs.is_empty() {
            return true;
        }
        let mut seen = vec![false; nbrs.len()];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for b in 0..nbrs.len() {
                if !seen[b] && self.incident(nbrs[a], nbrs[b]) {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Two distinct points on two distinct lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LlWitness {
    pub points: [usize; 2],
    pub lines: [usize; 2],
    pub point_names: [String; 2],
    pub line_names: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LlReport {
    /// 1-based cotypes playing points and lines.
    pub point_type: usize,
    pub line_type: usize,
    pub holds: bool,
    pub witness: Option<LlWitness>,
}

/// Axiom (LL): two distinct lines share at most one point. Point pairs are
/// scanned in increasing order; the witness is the first pair on two lines.
pub fn check_ll(geom: &IncidenceGeometry, point_type: usize, line_type: usize) -> LlReport {
    let points = geom.counts()[point_type];
    for p in 0..points {
        let lines_p = geom.shadow(Vertex { cotype: point_type, id: p }, line_type);
        for q in p + 1..points {
            let lines_q = geom.shadow(Vertex { cotype: point_type, id: q }, line_type);
            let common: Vec<usize> = lines_p.iter().copied().filter(|l| lines_q.binary_search(l).is_ok()).collect();
            if common.len() >= 2 {
                let name = |cotype, id| geom.name(Vertex { cotype, id }).to_string();
                return LlReport {
                    point_type: point_type + 1,
                    line_type: line_type + 1,
                    holds: false,
                    witness: Some(LlWitness {
                        points: [p, q],
                        lines: [common[0], common[1]],
                        point_names: [name(point_type, p), name(point_type, q)],
                        line_names: [name(line_type, common[0]), name(line_type, common[1])],
                    }),
                };
            }
        }
    }
    LlReport { point_type: point_type + 1, line_type: line_type + 1, holds: true, witness: None }
}
