//! Recognition of finite-type Coxeter diagrams.
//!
//! A connected diagram is finite exactly when it is one of `A_n`, `B_n = C_n`,
//! `D_n`, `E_6`, `E_7`, `E_8`, `F_4`, `H_3`, `H_4` or a dihedral `I_2(m)`.
//! The matcher works on the labelled graph directly: it checks the tree shape,
//! the branch structure and the position of the single non-3 bond.

use std::fmt;

use super::matrix::CoxeterMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    /// `B_n = C_n`, `n >= 3` (rank 2 is reported as `I2(4)`).
    C(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    /// Two nodes joined by a finite bond `m >= 3`.
    I2(u32),
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) | FiniteType::C(n) | FiniteType::D(n) | FiniteType::E(n) => n,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    /// Group order from the classical formulas.
    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::C(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(_) => 696_729_600,
            FiniteType::F4 => 1152,
            FiniteType::H3 => 120,
            FiniteType::H4 => 14_400,
            FiniteType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::C(n) => write!(f, "C{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H3 => write!(f, "H3"),
            FiniteType::H4 => write!(f, "H4"),
            FiniteType::I2(3) => write!(f, "A2"),
            FiniteType::I2(4) => write!(f, "C2"),
            FiniteType::I2(6) => write!(f, "G2"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Classifies one connected component (0-based nodes). `None` if the
/// component is not of finite type.
pub fn classify_component(m: &CoxeterMatrix, nodes: &[usize]) -> Option<FiniteType> {
    let n = nodes.len();
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    let mut edges = Vec::new();
    for (a, &i) in nodes.iter().enumerate() {
        for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
            if m.bonded(i, j) {
                edges.push((a, b, m.get(i, j)?));
            }
        }
    }
    if edges.len() != n - 1 {
        return None;
    }
    if n == 2 {
        let (_, _, label) = edges[0];
        return Some(if label == 3 { FiniteType::A(2) } else { FiniteType::I2(label) });
    }
    if edges.iter().any(|&(_, _, l)| !(3..=5).contains(&l)) {
        return None;
    }
    let mut degree = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(a, b, l) in &edges {
        degree[a] += 1;
        degree[b] += 1;
        adj[a].push((b, l));
        adj[b].push((a, l));
    }
    let special: Vec<_> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();

    if branch.is_empty() {
        // A path; walk it from one end to get the bond sequence.
        let start = (0..n).find(|&v| degree[v] == 1)?;
        let mut bonds = Vec::with_capacity(n - 1);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            let next = adj[cur].iter().find(|&&(w, _)| w != prev);
            match next {
                Some(&(w, l)) => {
                    bonds.push(l);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        return match special.len() {
            0 => Some(FiniteType::A(n)),
            1 => {
                let label = special[0].2;
                let pos = bonds.iter().position(|&l| l != 3)?;
                let at_end = pos == 0 || pos == bonds.len() - 1;
                match (label, n, at_end) {
                    (4, _, true) => Some(FiniteType::C(n)),
                    (4, 4, false) => Some(FiniteType::F4),
                    (5, 3, true) => Some(FiniteType::H3),
                    (5, 4, true) => Some(FiniteType::H4),
                    _ => None,
                }
            }
            _ => None,
        };
    }

    if !special.is_empty() || branch.len() != 1 || degree[branch[0]] != 3 {
        return None;
    }
    let center = branch[0];
    let mut arms: Vec<usize> = adj[center]
        .iter()
        .map(|&(first, _)| {
            let (mut prev, mut cur, mut len) = (center, first, 1);
            while let Some(&(w, _)) = adj[cur].iter().find(|&&(w, _)| w != prev) {
                prev = cur;
                cur = w;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => Some(FiniteType::D(n)),
        (1, 2, 2) => Some(FiniteType::E(6)),
        (1, 2, 3) => Some(FiniteType::E(7)),
        (1, 2, 4) => Some(FiniteType::E(8)),
        _ => None,
    }
}

/// Finite-type label of every diagram component, `None` where a component is
/// infinite.
pub fn classify(m: &CoxeterMatrix) -> Vec<(Vec<usize>, Option<FiniteType>)> {
    m.diagram_components()
        .components
        .into_iter()
        .map(|c| {
            let t = classify_component(m, &c);
            (c, t)
        })
        .collect()
}

impl CoxeterMatrix {
    /// Whether the group `W(M)` is finite, decided by diagram recognition.
    pub fn is_finite(&self) -> bool {
        classify(self).iter().all(|(_, t)| t.is_some())
    }

    /// Product of component orders, `None` for infinite groups.
    pub fn order_by_type(&self) -> Option<u128> {
        classify(self).iter().map(|(_, t)| t.map(|t| t.order())).product()
    }

    /// Human name such as `C3` or `A1xA2`; `None` for infinite groups.
    pub fn type_name(&self) -> Option<String> {
        let parts: Option<Vec<String>> =
            classify(self).iter().map(|(_, t)| t.map(|t| t.to_string())).collect();
        parts.map(|p| p.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(arms: &[usize]) -> CoxeterMatrix {
        let n = 1 + arms.iter().sum::<usize>();
        let mut rows = vec![vec![Some(2); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                rows[prev][next] = Some(3);
                rows[next][prev] = Some(3);
                prev = next;
                next += 1;
            }
        }
        CoxeterMatrix::new(rows).unwrap()
    }

    #[test]
    fn recognises_examples() {
        assert!(CoxeterMatrix::a(3).is_finite());
        assert!(CoxeterMatrix::h3().is_finite());
        assert!(!CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap().is_finite());
        assert_eq!(CoxeterMatrix::c(3).type_name().unwrap(), "C3");
        assert_eq!(CoxeterMatrix::a(3).type_name().unwrap(), "A3");
        assert_eq!(CoxeterMatrix::h3().type_name().unwrap(), "H3");
    }

    #[test]
    fn affine_and_hyperbolic_rejected() {
        // affine A2 triangle
        let tri = CoxeterMatrix::from_rows(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(!tri.is_finite());
        // affine C2 = string 4,4
        assert!(!CoxeterMatrix::linear(&[4, 4]).is_finite());
        // affine G2 = string 6,3
        assert!(!CoxeterMatrix::linear(&[6, 3]).is_finite());
        // 5 in the middle of a 4-string
        assert!(!CoxeterMatrix::linear(&[3, 5, 3]).is_finite());
        // H5 does not exist
        assert!(!CoxeterMatrix::linear(&[5, 3, 3, 3]).is_finite());
        // F5 does not exist
        assert!(!CoxeterMatrix::linear(&[3, 4, 3, 3]).is_finite());
        // affine E6 = star(2,2,2)
        assert!(!star(&[2, 2, 2]).is_finite());
    }

    #[test]
    fn branched_types() {
        assert_eq!(star(&[1, 1, 2]).type_name().unwrap(), "D5");
        assert_eq!(star(&[1, 2, 2]).type_name().unwrap(), "E6");
        assert_eq!(star(&[1, 2, 4]).type_name().unwrap(), "E8");
        assert!(!star(&[1, 2, 5]).is_finite());
        assert_eq!(CoxeterMatrix::linear(&[3, 4, 3]).type_name().unwrap(), "F4");
        assert_eq!(CoxeterMatrix::linear(&[5, 3, 3]).type_name().unwrap(), "H4");
    }

    #[test]
    fn orders_from_types() {
        assert_eq!(CoxeterMatrix::a(3).order_by_type(), Some(24));
        assert_eq!(CoxeterMatrix::c(3).order_by_type(), Some(48));
        assert_eq!(CoxeterMatrix::h3().order_by_type(), Some(120));
        let a1a1 = CoxeterMatrix::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(a1a1.order_by_type(), Some(4));
        assert_eq!(a1a1.type_name().unwrap(), "A1xA1");
    }
}
