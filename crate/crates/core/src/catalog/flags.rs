//! Flag complexes of small incidence structures over F₂.

use std::collections::HashMap;

use super::f2::{self, Linear};
use crate::chamber::{ChamberSystem, HomogeneousSpec};
use crate::error::Result;
use crate::groups::{Perm, PermGroup};

/// A chamber system whose chambers are the given flags (one vertex key per
/// cotype); type-`i` neighbours agree everywhere except at position `i`.
/// Flags must be distinct; labels are the space-joined vertex names.
pub fn flag_system(flags: &[Vec<usize>], names: &[Vec<String>]) -> Result<ChamberSystem> {
    let rank = flags.first().map_or(0, Vec::len);
    let mut ids = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut class: HashMap<Vec<usize>, usize> = HashMap::new();
        let row = flags
            .iter()
            .map(|f| {
                let mut key = f.clone();
                key.remove(i);
                let next = class.len();
                *class.entry(key).or_insert(next)
            })
            .collect();
        ids.push(row);
    }
    let labels = flags
        .iter()
        .map(|f| f.iter().enumerate().map(|(i, &v)| names[i][v].as_str()).collect::<Vec<_>>().join(" "))
        .collect();
    ChamberSystem::from_class_ids(flags.len(), rank, &ids).with_labels(labels)
}

/// Chain flags `V_1 < ... < V_{n-1}` of `F₂^n` for `n ≤ 4`, sorted by the
/// point lists of their members. Also returns the subspaces by dimension.
fn chain_flags(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<u16>>) {
    let spaces: Vec<Vec<u16>> = (1..n).map(|k| f2::subspaces(n, k)).collect();
    let mut flags = vec![Vec::new()];
    for (d, level) in spaces.iter().enumerate() {
        let mut next = Vec::new();
        for f in &flags {
            for (a, &s) in level.iter().enumerate() {
                let below = d == 0 || {
                    let prev: u16 = spaces[d - 1][f[d - 1]];
                    prev & s == prev
                };
                if below {
                    let mut g = f.clone();
                    g.push(a);
                    next.push(g);
                }
            }
        }
        flags = next;
    }
    (flags, spaces)
}

fn space_names(spaces: &[Vec<u16>]) -> Vec<Vec<String>> {
    const PREFIX: [&str; 3] = ["p", "L", "P"];
    spaces.iter().enumerate().map(|(d, l)| l.iter().map(|&s| format!("{}{}", PREFIX[d], f2::name(s))).collect()).collect()
}

/// The flag complex of `PG(n-1, 2)`: type `i` changes the `i`-dimensional
/// member of the flag. Rank `n - 1`, type `A_{n-1}`.
pub fn projective_flags(n: usize) -> Result<ChamberSystem> {
    let (flags, spaces) = chain_flags(n);
    flag_system(&flags, &space_names(&spaces))
}

/// Chamber permutation induced by a linear map on the chain flags of
/// `F₂^N`.
pub fn flag_action<const N: usize>(g: &Linear<N>) -> Perm {
    let (flags, spaces) = chain_flags(N);
    let index: HashMap<&Vec<usize>, usize> = flags.iter().enumerate().map(|(c, f)| (f, c)).collect();
    let pos: Vec<HashMap<u16, usize>> =
        spaces.iter().map(|l| l.iter().enumerate().map(|(a, &s)| (s, a)).collect()).collect();
    let images = flags
        .iter()
        .map(|f| {
            let img: Vec<usize> = f.iter().enumerate().map(|(d, &a)| pos[d][&g.apply_space(spaces[d][a])]).collect();
            index[&img] as u32
        })
        .collect();
    Perm::from_images(images).expect("linear maps permute flags")
}

/// Points and totally isotropic lines of the symplectic form on `F₂^4`:
/// the generalized quadrangle `W(2)`. Type 1 changes the point, type 2 the
/// line.
pub fn symplectic_quadrangle() -> Result<ChamberSystem> {
    let points = f2::subspaces(4, 1);
    let lines: Vec<u16> = f2::subspaces(4, 2)
        .into_iter()
        .filter(|&l| {
            let pts = f2::points_of(l);
            pts.iter().all(|&x| pts.iter().all(|&y| !f2::symplectic(x, y)))
        })
        .collect();
    let mut flags = Vec::new();
    for (a, &p) in points.iter().enumerate() {
        for (b, &l) in lines.iter().enumerate() {
            if p & l == p {
                flags.push(vec![a, b]);
            }
        }
    }
    flag_system(&flags, &space_names(&[points, lines]))
}

/// `GL(4, 2)` acting on the 15 nonzero vectors of `F₂^4` (point `v - 1` for
/// vector `v`), with the stabilizers of the standard flag
/// `⟨e1⟩ < ⟨e1, e2⟩ < ⟨e1, e2, e3⟩`: Borel, minimal parabolics as face
/// groups and maximal parabolics as vertex groups.
pub fn gl4_spec() -> Result<HomogeneousSpec> {
    let gens = f2::gl4_generators().iter().map(Linear::point_perm).collect();
    let g = PermGroup::from_generators(15, gens, 30_000)?;
    let standard = [f2::span(&[1]), f2::span(&[1, 2]), f2::span(&[1, 2, 4])];
    let fixes = |s: u16| move |p: &Perm| f2::points_of(s).iter().all(|&v| s & (1 << (p.apply(v as usize - 1) + 1)) != 0);
    let vertices: Vec<_> = standard.iter().map(|&s| g.stabilizer(fixes(s))).collect::<Result<_>>()?;
    let borel = g.intersection(&g.intersection(&vertices[0], &vertices[1])?, &vertices[2])?;
    let faces = (0..3)
        .map(|i| {
            let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
            g.intersection(&vertices[others[0]], &vertices[others[1]])
        })
        .collect::<Result<_>>()?;
    HomogeneousSpec::new(g, borel, faces, Some(vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::{find_isomorphism, from_cosets, polygon_parameters};

    #[test]
    fn fano_flags() {
        let c = projective_flags(3).unwrap();
        assert_eq!(c.len(), 21);
        assert_eq!(c.label(0), "p1 L123");
        assert!(c.panels(0).iter().chain(c.panels(1)).all(|p| p.len() == 3));
    }

    #[test]
    fn a3_flags_and_cosets_agree() {
        let direct = projective_flags(4).unwrap();
        assert_eq!(direct.len(), 315);
        let spec = gl4_spec().unwrap();
        assert_eq!(spec.group.order(), 20160);
        assert_eq!(spec.principal.order(), 64);
        assert_eq!(spec.vertices.as_ref().unwrap().iter().map(|v| v.order()).collect::<Vec<_>>(), [1344, 576, 1344]);
        let cosets = from_cosets(&spec).unwrap();
        assert!(find_isomorphism(&direct, &cosets).unwrap().is_some());
    }

    #[test]
    fn quadrangle() {
        let c = symplectic_quadrangle().unwrap();
        assert_eq!(c.len(), 45);
        let g = polygon_parameters(&c).unwrap();
        assert_eq!(g, (Some(8), Some(4)));
    }

    #[test]
    fn linear_maps_act() {
        let d = projective_flags(4).unwrap();
        let s = flag_action(&f2::SINGER4);
        assert!(d.is_automorphism(s.images()));
        assert_eq!(s.order(), 15);
    }
}
