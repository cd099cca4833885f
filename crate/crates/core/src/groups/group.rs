use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the number of elements a group enumeration may produce.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are sorted lexicographically by image array, so index 0 is the
/// identity and ids are reproducible across runs.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    fingerprint: u64,
}

/// A subgroup, stored as sorted element ids of its parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent: u64,
    members: Vec<u32>,
    mask: Vec<bool>,
    generators: Vec<u32>,
}

/// The left cosets `gH` of a subgroup.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// Least element id of each coset, in increasing order.
    pub representatives: Vec<u32>,
    /// Coset id of every element.
    pub coset_of: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }
}

impl PermGroup {
    /// Enumerates `⟨gens⟩` by breadth-first closure.
    pub fn from_generators(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::CapExceeded(0));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, u32> = HashMap::new();
        seen.insert(id.clone(), 0);
        let mut list = vec![id];
        let mut head = 0;
        while head < list.len() {
            let cur = list[head].clone();
            head += 1;
            for g in &gens {
                let next = g.compose(&cur);
                if !seen.contains_key(&next) {
                    if list.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    seen.insert(next.clone(), list.len() as u32);
                    list.push(next);
                }
            }
        }
        list.sort();
        let index = list.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let mut h = DefaultHasher::new();
        degree.hash(&mut h);
        gens.hash(&mut h);
        list.len().hash(&mut h);
        Ok(PermGroup { degree, generators: gens, elements: list, index, fingerprint: h.finish() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Perm {
        &self.elements[id]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Id of `e_a ∘ e_b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()] as usize
    }

    /// Whether `e_x ∈ e_g H e_g^{-1}`.
    pub fn conjugate_contains(&self, h: &Subgroup, g: usize, x: usize) -> bool {
        let gp = &self.elements[g];
        let c = gp.inverse().compose(&self.elements[x]).compose(gp);
        h.mask[self.index[&c] as usize]
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_from_ids_unchecked(vec![0], vec![])
    }

    pub fn whole(&self) -> Subgroup {
        let gens = self.generators.iter().map(|g| self.index[g]).collect();
        self.subgroup_from_ids_unchecked((0..self.order() as u32).collect(), gens)
    }

    fn subgroup_from_ids_unchecked(&self, mut members: Vec<u32>, generators: Vec<u32>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; self.order()];
        for &m in &members {
            mask[m as usize] = true;
        }
        Subgroup { parent: self.fingerprint, members, mask, generators }
    }

    /// Closure of a set of element ids.
    fn closure_ids(&self, gens: &[u32], within: Option<&[bool]>) -> Result<Vec<u32>> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut list = vec![0u32];
        let mut head = 0;
        while head < list.len() {
            let cur = list[head] as usize;
            head += 1;
            for &g in gens {
                let next = self.mul(g as usize, cur);
                if !mask[next] {
                    if let Some(w) = within {
                        if !w[next] {
                            return Err(Error::NotSubgroup("set is not closed under products".into()));
                        }
                    }
                    mask[next] = true;
                    list.push(next as u32);
                }
            }
        }
        Ok(list)
    }

    pub fn subgroup_generated(&self, gens: &[Perm]) -> Result<Subgroup> {
        let ids = gens
            .iter()
            .map(|g| {
                self.index_of(g)
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::NotSubgroup(format!("{g:?} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        let members = self.closure_ids(&ids, None)?;
        Ok(self.subgroup_from_ids_unchecked(members, ids))
    }

    /// Checks that the given ids form a subgroup, picking generators greedily.
    pub fn subgroup_from_ids(&self, ids: Vec<u32>) -> Result<Subgroup> {
        let mut want = vec![false; self.order()];
        for &i in &ids {
            if i as usize >= self.order() {
                return Err(Error::NotSubgroup(format!("element id {i} out of range")));
            }
            want[i as usize] = true;
        }
        if !want[0] {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        let target = want.iter().filter(|&&b| b).count();
        let mut gens = Vec::new();
        let mut have = vec![false; self.order()];
        have[0] = true;
        let mut count = 1;
        for x in 0..self.order() as u32 {
            if want[x as usize] && !have[x as usize] {
                gens.push(x);
                let closure = self.closure_ids(&gens, Some(&want))?;
                count = closure.len();
                for c in closure {
                    have[c as usize] = true;
                }
            }
        }
        debug_assert_eq!(count, target);
        Ok(self.subgroup_from_ids_unchecked(
            (0..self.order() as u32).filter(|&x| want[x as usize]).collect(),
            gens,
        ))
    }

    pub fn subgroup_from_elements(&self, elems: &[Perm]) -> Result<Subgroup> {
        let ids = elems
            .iter()
            .map(|g| {
                self.index_of(g)
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::NotSubgroup(format!("{g:?} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.subgroup_from_ids(ids)
    }

    /// Elements satisfying `pred`, checked to form a subgroup.
    pub fn stabilizer(&self, pred: impl Fn(&Perm) -> bool) -> Result<Subgroup> {
        let ids = (0..self.order() as u32).filter(|&i| pred(&self.elements[i as usize])).collect();
        self.subgroup_from_ids(ids)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        self.subgroup_from_ids(a.members.iter().copied().filter(|&x| b.mask[x as usize]).collect())
    }

    /// `⟨parts⟩` as a subgroup.
    pub fn join(&self, parts: &[&Subgroup]) -> Result<Subgroup> {
        for p in parts {
            self.check_parent(p)?;
        }
        let gens: Vec<u32> = parts.iter().flat_map(|p| p.generators.iter().copied()).collect();
        let members = self.closure_ids(&gens, None)?;
        Ok(self.subgroup_from_ids_unchecked(members, gens))
    }

    /// Whether the union of `parts` generates the whole group.
    pub fn generates(&self, parts: &[&Subgroup]) -> bool {
        self.join(parts).is_ok_and(|s| s.order() == self.order())
    }

    pub fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if h.parent != self.fingerprint || h.mask.len() != self.order() {
            return Err(Error::NotSubgroup("subgroup belongs to a different group".into()));
        }
        Ok(())
    }

    /// Left cosets `gH`, numbered by their least element.
    pub fn left_cosets(&self, h: &Subgroup) -> Result<CosetTable> {
        self.check_parent(h)?;
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut representatives = Vec::with_capacity(n / h.order());
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = representatives.len() as u32;
            representatives.push(g as u32);
            for &x in &h.members {
                coset_of[self.mul(g, x as usize)] = id;
            }
        }
        Ok(CosetTable { representatives, coset_of })
    }

    /// Whether only the identity of `h` fixes a point of `points` under
    /// `action`.
    pub fn is_free_action(
        &self,
        h: &Subgroup,
        points: &[usize],
        action: impl Fn(&Perm, usize) -> usize,
    ) -> Result<bool> {
        self.check_parent(h)?;
        let mut member = std::collections::HashSet::new();
        member.extend(points.iter().copied());
        let mut free = true;
        for &g in &h.members {
            let p = &self.elements[g as usize];
            for &x in points {
                let y = action(p, x);
                if !member.contains(&y) {
                    return Err(Error::ActionNotClosed(y));
                }
                if g != 0 && y == x {
                    free = false;
                }
            }
        }
        Ok(free)
    }

    /// Orbits of the group on `0..degree`, each sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// `G × P` acting on the disjoint union of both point sets, together with
    /// the generators of each factor.
    pub fn direct_product(&self, other: &PermGroup, cap: usize) -> Result<PermGroup> {
        let (d1, d2) = (self.degree, other.degree);
        let mut gens: Vec<Perm> =
            self.generators.iter().map(|g| g.direct_sum(&Perm::identity(d2))).collect();
        gens.extend(other.generators.iter().map(|p| Perm::identity(d1).direct_sum(p)));
        PermGroup::from_generators(d1 + d2, gens, cap)
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Element ids of the parent group, sorted.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generator_ids(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains_id(&self, id: usize) -> bool {
        self.mask.get(id).copied().unwrap_or(false)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.iter().all(|&x| other.mask[x as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, c: &[u32]) -> Perm {
        Perm::from_cycles(d, &[c]).unwrap()
    }

    #[test]
    fn small_orders() {
        let g = PermGroup::from_generators(3, vec![Perm::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
        let g = PermGroup::from_generators(3, vec![cyc(3, &[0, 1, 2])], 10).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.element(0).is_identity());
        let err = PermGroup::from_generators(3, vec![cyc(4, &[0, 1])], 10);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
        let s4 = PermGroup::from_generators(4, vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])], 10);
        assert!(matches!(s4, Err(Error::CapExceeded(10))));
    }

    #[test]
    fn cosets_and_generation() {
        let s3 = PermGroup::from_generators(3, vec![cyc(3, &[0, 1]), cyc(3, &[1, 2])], 100).unwrap();
        assert_eq!(s3.order(), 6);
        let whole = s3.whole();
        let triv = s3.trivial_subgroup();
        assert_eq!(s3.left_cosets(&whole).unwrap().index(), 1);
        assert_eq!(s3.left_cosets(&triv).unwrap().index(), 6);
        let t = s3.subgroup_generated(&[cyc(3, &[0, 1])]).unwrap();
        let ct = s3.left_cosets(&t).unwrap();
        assert_eq!(ct.index(), 3);
        assert_eq!(ct.representatives[0], 0);
        assert!(s3.generates(&[&whole]));
        assert!(!s3.generates(&[&triv, &triv]));
        let u = s3.subgroup_generated(&[cyc(3, &[1, 2])]).unwrap();
        assert!(!s3.generates(&[&t]));
        assert!(s3.generates(&[&t, &u]));
    }

    #[test]
    fn subgroup_checks() {
        let s3 = PermGroup::from_generators(3, vec![cyc(3, &[0, 1]), cyc(3, &[1, 2])], 100).unwrap();
        let bad = s3.subgroup_from_elements(&[Perm::identity(3), cyc(3, &[0, 1]), cyc(3, &[1, 2])]);
        assert!(matches!(bad, Err(Error::NotSubgroup(_))));
        let a3 = s3.stabilizer(|p| p.order() != 2).unwrap();
        assert_eq!(a3.order(), 3);
        let other = PermGroup::from_generators(3, vec![cyc(3, &[0, 1])], 100).unwrap();
        assert!(s3.left_cosets(&other.whole()).is_err());
    }

    #[test]
    fn free_actions() {
        let c3 = PermGroup::from_generators(3, vec![cyc(3, &[0, 1, 2])], 100).unwrap();
        let act = |p: &Perm, x: usize| p.apply(x);
        assert!(c3.is_free_action(&c3.whole(), &[0, 1, 2], act).unwrap());
        assert!(c3.is_free_action(&c3.trivial_subgroup(), &[0], act).unwrap());
        assert!(matches!(c3.is_free_action(&c3.whole(), &[0], act), Err(Error::ActionNotClosed(1))));
        let s3 = PermGroup::from_generators(3, vec![cyc(3, &[0, 1]), cyc(3, &[1, 2])], 100).unwrap();
        let stab = s3.stabilizer(|p| p.apply(0) == 0).unwrap();
        assert!(!s3.is_free_action(&stab, &[0, 1, 2], act).unwrap());
    }
}
