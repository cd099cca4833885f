//! The rank-3 geometry of `A7` on 7 points, 35 triples and one orbit of 15
//! Fano planes. It is of type C3 but violates (LL).

use std::collections::{BTreeSet, HashMap};

use super::flags::flag_system;
use crate::chamber::{ChamberSystem, HomogeneousSpec};
use crate::error::Result;
use crate::groups::{Perm, PermGroup};

type Triple = [u8; 3];
/// A Fano plane as the sorted indices of its seven lines.
type Plane = Vec<usize>;

fn triples() -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn triple_index(t: &[Triple], mut x: Triple) -> usize {
    x.sort_unstable();
    t.binary_search(&x).expect("a triple")
}

/// All 30 Fano planes on `{0, ..., 6}`, sorted.
fn fano_planes(t: &[Triple]) -> Vec<Plane> {
    fn extend(t: &[Triple], covered: &mut [[bool; 7]; 7], chosen: &mut Vec<usize>, out: &mut Vec<Plane>) {
        let Some((a, b)) = (0..7).flat_map(|a| (a + 1..7).map(move |b| (a, b))).find(|&(a, b)| !covered[a][b]) else {
            out.push(chosen.clone());
            return;
        };
        for (k, tr) in t.iter().enumerate() {
            let fits = tr.contains(&(a as u8))
                && tr.contains(&(b as u8))
                && (0..3).all(|i| (i + 1..3).all(|j| !covered[tr[i] as usize][tr[j] as usize]));
            if fits {
                let set = |cov: &mut [[bool; 7]; 7], v| {
                    for i in 0..3 {
                        for j in i + 1..3 {
                            cov[tr[i] as usize][tr[j] as usize] = v;
                        }
                    }
                };
                set(covered, true);
                chosen.push(k);
                extend(t, covered, chosen, out);
                chosen.pop();
                set(covered, false);
            }
        }
    }
    let mut out = Vec::new();
    extend(t, &mut [[false; 7]; 7], &mut Vec::new(), &mut out);
    for p in &mut out {
        p.sort_unstable();
    }
    out.sort();
    out
}

fn plane_image(t: &[Triple], g: &Perm, plane: &[usize]) -> Plane {
    let mut img: Plane =
        plane.iter().map(|&k| triple_index(t, t[k].map(|x| g.apply(x as usize) as u8))).collect();
    img.sort_unstable();
    img
}

/// `A7 = ⟨(0 1 2), (0 1 2 3 4 5 6)⟩` on seven points.
pub fn a7() -> Result<PermGroup> {
    let gens = vec![Perm::from_cycles(7, &[&[0, 1, 2]])?, Perm::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]])?];
    PermGroup::from_generators(7, gens, 5040)
}

/// Points, lines and planes of the geometry, with the group acting.
pub struct Neumaier {
    pub group: PermGroup,
    pub lines: Vec<Triple>,
    pub planes: Vec<Plane>,
    /// Chambers `(point, line, plane)` as indices, sorted.
    pub flags: Vec<[usize; 3]>,
}

impl Neumaier {
    pub fn new() -> Result<Self> {
        let group = a7()?;
        let lines = triples();
        let all = fano_planes(&lines);
        let orbit: BTreeSet<Plane> = group.elements().iter().map(|g| plane_image(&lines, g, &all[0])).collect();
        let planes: Vec<Plane> = orbit.into_iter().collect();
        let mut flags = Vec::new();
        for p in 0..7u8 {
            for (l, _) in lines.iter().enumerate().filter(|(_, tr)| tr.contains(&p)) {
                for (q, plane) in planes.iter().enumerate() {
                    if plane.binary_search(&l).is_ok() {
                        flags.push([p as usize, l, q]);
                    }
                }
            }
        }
        Ok(Neumaier { group, lines, planes, flags })
    }

    /// The flag system: type 1 changes the point, type 2 the line, type 3
    /// the plane. Labels look like `p0 L012 P0`.
    pub fn chamber_system(&self) -> Result<ChamberSystem> {
        let flags: Vec<Vec<usize>> = self.flags.iter().map(|f| f.to_vec()).collect();
        let names = vec![
            (0..7).map(|p| format!("p{p}")).collect(),
            self.lines.iter().map(|t| format!("L{}{}{}", t[0], t[1], t[2])).collect(),
            (0..self.planes.len()).map(|q| format!("P{q}")).collect(),
        ];
        flag_system(&flags, &names)
    }

    fn plane_of(&self) -> HashMap<&Plane, usize> {
        self.planes.iter().enumerate().map(|(q, p)| (p, q)).collect()
    }

    /// The group acting on flags, with chamber 0's stabilizer, the
    /// stabilizers of its panels and of its point, line and plane.
    pub fn spec(&self) -> Result<HomogeneousSpec> {
        let g = &self.group;
        let [p0, l0, q0] = self.flags[0];
        let index = self.plane_of();
        let line = self.lines[l0];
        let fixes_point = |h: &Perm| h.apply(p0) == p0;
        let fixes_line = |h: &Perm| {
            let img = line.map(|x| h.apply(x as usize) as u8);
            triple_index(&self.lines, img) == l0
        };
        let fixes_plane = |h: &Perm| index[&plane_image(&self.lines, h, &self.planes[q0])] == q0;
        let vertices = vec![g.stabilizer(fixes_point)?, g.stabilizer(fixes_line)?, g.stabilizer(fixes_plane)?];
        let faces = vec![
            g.intersection(&vertices[1], &vertices[2])?,
            g.intersection(&vertices[0], &vertices[2])?,
            g.intersection(&vertices[0], &vertices[1])?,
        ];
        let principal = g.intersection(&faces[0], &vertices[0])?;
        HomogeneousSpec::new(g.clone(), principal, faces, Some(vertices))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::{find_isomorphism, from_cosets};

    #[test]
    fn counts() {
        let t = triples();
        assert_eq!(t.len(), 35);
        assert_eq!(fano_planes(&t).len(), 30);
        let n = Neumaier::new().unwrap();
        assert_eq!(n.group.order(), 2520);
        assert_eq!(n.planes.len(), 15);
        assert_eq!(n.flags.len(), 315);
        let c = n.chamber_system().unwrap();
        assert_eq!(c.label(0), "p0 L012 P0");
        assert!((0..3).all(|t| c.panels(t).iter().all(|p| p.len() == 3)));
    }

    #[test]
    fn coset_model_matches() {
        let n = Neumaier::new().unwrap();
        let spec = n.spec().unwrap();
        assert_eq!(spec.principal.order(), 8);
        assert_eq!(spec.faces.iter().map(|f| f.order()).collect::<Vec<_>>(), [24, 24, 24]);
        assert_eq!(spec.vertices.as_ref().unwrap().iter().map(|v| v.order()).collect::<Vec<_>>(), [360, 72, 168]);
        let cosets = from_cosets(&spec).unwrap();
        assert!(find_isomorphism(&n.chamber_system().unwrap(), &cosets).unwrap().is_some());
    }
}
