//! Small vector spaces over F₂. Vectors of `F₂^n` (`n ≤ 4`) are bitmasks;
//! a subspace is the 16-bit set of its vectors.

use std::collections::BTreeSet;

use crate::groups::Perm;

/// Set of all vectors spanned by `gens`.
pub fn span(gens: &[u8]) -> u16 {
    let mut set: u16 = 1;
    for &g in gens {
        let mut next = set;
        for v in 0..16u8 {
            if set & (1 << v) != 0 {
                next |= 1 << (v ^ g);
            }
        }
        set = next;
    }
    set
}

/// Nonzero vectors of a subspace, ascending.
pub fn points_of(space: u16) -> Vec<u8> {
    (1..16u8).filter(|&v| space & (1 << v) != 0).collect()
}

pub fn dim(space: u16) -> usize {
    space.count_ones().trailing_zeros() as usize
}

/// All `k`-dimensional subspaces of `F₂^n`, ordered by their sorted point
/// lists.
pub fn subspaces(n: usize, k: usize) -> Vec<u16> {
    let vectors: Vec<u8> = (1..(1u8 << n)).collect();
    let mut found = BTreeSet::new();
    let mut stack: Vec<(Vec<u8>, u16)> = vec![(Vec::new(), 1)];
    while let Some((gens, space)) = stack.pop() {
        if gens.len() == k {
            found.insert(points_of(space));
            continue;
        }
        let last = gens.last().copied().unwrap_or(0);
        for &v in vectors.iter().filter(|&&v| v > last && space & (1 << v) == 0) {
            let mut g = gens.clone();
            g.push(v);
            let s = span(&g);
            stack.push((g, s));
        }
    }
    found.into_iter().map(|pts| span(&pts)).collect()
}

/// Hex name of a subspace from its points, e.g. `123` for `⟨1, 2⟩`.
pub fn name(space: u16) -> String {
    points_of(space).iter().map(|v| format!("{v:x}")).collect()
}

/// A linear map of `F₂^n`, given by the images of the basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Linear<const N: usize>(pub [u8; N]);

impl<const N: usize> Linear<N> {
    pub fn apply(&self, v: u8) -> u8 {
        (0..N).filter(|&i| v & (1 << i) != 0).fold(0, |acc, i| acc ^ self.0[i])
    }

    pub fn apply_space(&self, space: u16) -> u16 {
        points_of(space).into_iter().fold(1u16, |acc, v| acc | (1 << self.apply(v)))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = [0u8; N];
        for (i, o) in out.iter_mut().enumerate() {
            let mut v = 1u8 << i;
            for _ in 0..e {
                v = self.apply(v);
            }
            *o = v;
        }
        Linear(out)
    }

    /// The permutation of the nonzero vectors, point `v - 1` for vector `v`.
    pub fn point_perm(&self) -> Perm {
        let n = (1usize << N) - 1;
        Perm::from_images((1..=n as u8).map(|v| (self.apply(v) - 1) as u32).collect()).expect("invertible map")
    }
}

/// Companion matrix of `x^4 + x + 1`: multiplication by `x` in `F₁₆`.
pub const SINGER4: Linear<4> = Linear([0b0010, 0b0100, 0b1000, 0b0011]);

/// Companion matrix of `x^3 + x + 1`.
pub const SINGER3: Linear<3> = Linear([0b010, 0b100, 0b011]);

/// Generators of `GL(4, 2)`: a basis transposition, a basis 4-cycle and a
/// transvection.
pub fn gl4_generators() -> Vec<Linear<4>> {
    vec![Linear([2, 1, 4, 8]), Linear([2, 4, 8, 1]), Linear([3, 2, 4, 8])]
}

/// The standard alternating form `x·Jy` with `J = [[0, I], [I, 0]]`.
pub fn symplectic(x: u8, y: u8) -> bool {
    let swapped = ((y & 0b0011) << 2) | ((y & 0b1100) >> 2);
    (x & swapped).count_ones() % 2 == 1
}
