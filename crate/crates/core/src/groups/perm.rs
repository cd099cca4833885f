use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, ..., d-1}` given by its image array.
///
/// Composition follows left actions: `(g * h)(x) = g(h(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            let x = x as usize;
            if x >= d || seen[x] {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (a, &x) in cycle.iter().enumerate() {
                let y = cycle[(a + 1) % cycle.len()];
                if x as usize >= degree || y as usize >= degree {
                    return Err(Error::NotPermutation(format!("cycle {cycle:?} exceeds degree {degree}")));
                }
                images[x as usize] = y;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Whether any point is fixed.
    pub fn has_fixed_point(&self) -> bool {
        self.0.iter().enumerate().any(|(x, &y)| x as u32 == y)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1usize;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// `(self, other)` acting on the disjoint union of both point sets.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let d = self.0.len() as u32;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&x| x + d)).collect())
    }

    /// Restriction to `offset..offset+len`, shifted down; the range must be
    /// invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Perm {
        Perm(self.0[offset..offset + len].iter().map(|&x| x - offset as u32).collect())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Perm::from_images(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
