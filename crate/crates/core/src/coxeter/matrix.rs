use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Coxeter matrix `(m_ij)` over the type set `{1, ..., k}`.
///
/// Entries are stored 0-based; `None` stands for an infinite bond.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Validates a square array of entries, `None` meaning infinity.
    pub fn new(rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 || rows.iter().any(|r| r.len() != rank) {
            return Err(Error::NotSquare);
        }
        for i in 0..rank {
            for j in 0..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        for i in 0..rank {
            if rows[i][i] != Some(1) {
                return Err(Error::BadDiagonal(i + 1));
            }
            for j in 0..rank {
                if i != j && matches!(rows[i][j], Some(m) if m < 2) {
                    return Err(Error::BadOffDiagonal(i + 1, j + 1));
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries: rows.into_iter().flatten().collect() })
    }

    /// Same as [`CoxeterMatrix::new`] with the JSON convention that `0`
    /// encodes infinity.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&m| if m == 0 { None } else { Some(m) }).collect())
                .collect(),
        )
    }

    /// Builds the matrix of a string diagram: `bonds[i]` joins nodes `i` and
    /// `i + 1`, every other pair commutes.
    pub fn linear(bonds: &[u32]) -> Self {
        let k = bonds.len() + 1;
        let mut rows = vec![vec![Some(2); k]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for (i, &m) in bonds.iter().enumerate() {
            let m = if m == 0 { None } else { Some(m) };
            rows[i][i + 1] = m;
            rows[i + 1][i] = m;
        }
        Self::new(rows).expect("string diagram with bonds >= 2")
    }

    pub fn a(n: usize) -> Self {
        Self::linear(&vec![3; n.saturating_sub(1)])
    }

    /// `B_n = C_n`, with the 4-bond between the last two nodes.
    pub fn c(n: usize) -> Self {
        assert!(n >= 2);
        let mut bonds = vec![3; n - 1];
        bonds[n - 2] = 4;
        Self::linear(&bonds)
    }

    pub fn h3() -> Self {
        Self::linear(&[5, 3])
    }

    pub fn dihedral(m: u32) -> Self {
        Self::linear(&[m])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m_ij` for 0-based `i, j`; `None` is infinity.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<Option<u32>>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    /// Rows with infinity encoded as `0`.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.rank).map(|r| r.iter().map(|m| m.unwrap_or(0)).collect()).collect()
    }

    /// Connected components of the diagram (edges where `m_ij >= 3`), each
    /// sorted, listed by least node; plus the isolated nodes.
    pub fn diagram_components(&self) -> DiagramComponents {
        let k = self.rank;
        let mut seen = vec![false; k];
        let mut components = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let i = comp[head];
                head += 1;
                for j in 0..k {
                    if !seen[j] && self.bonded(i, j) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        let isolated = components.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        DiagramComponents { components, isolated }
    }

    /// Whether `i` and `j` are joined in the diagram.
    pub fn bonded(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j).is_none_or(|m| m >= 3)
    }

    /// Every bond is 2, 3, 4 or 6.
    pub fn is_admissible_polar(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| i == j || matches!(self.get(i, j), Some(2 | 3 | 4 | 6)))
        })
    }

    /// The submatrix on the given (0-based) types, in the given order.
    pub fn restrict(&self, types: &[usize]) -> Self {
        let rows = types.iter().map(|&i| types.iter().map(|&j| self.get(i, j)).collect()).collect();
        Self::new(rows).expect("restriction of a valid matrix")
    }

    /// Matrix with rows and columns permuted: entry `(a, b)` of the result is
    /// entry `(perm[a], perm[b])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.restrict(perm)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramComponents {
    pub components: Vec<Vec<usize>>,
    pub isolated: Vec<usize>,
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.rank)
            .map(|r| {
                let cells: Vec<String> =
                    r.iter().map(|m| m.map_or_else(|| "inf".to_string(), |m| m.to_string())).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl Serialize for CoxeterMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { rank: self.rank, m: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoxeterMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        if raw.m.len() != raw.rank {
            return Err(serde::de::Error::custom("rank does not match row count"));
        }
        CoxeterMatrix::from_rows(&raw.m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_examples() {
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3], vec![3, 1]]).is_ok());
        let c3 = CoxeterMatrix::from_rows(&[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]).unwrap();
        assert_eq!(c3, CoxeterMatrix::linear(&[3, 4]));
        assert!(matches!(
            CoxeterMatrix::from_rows(&[vec![1, 2], vec![3, 1]]),
            Err(Error::NotSymmetric(1, 2))
        ));
        assert!(matches!(
            CoxeterMatrix::from_rows(&[vec![2, 3], vec![3, 1]]),
            Err(Error::BadDiagonal(1))
        ));
        assert!(matches!(
            CoxeterMatrix::from_rows(&[vec![1, 1], vec![1, 1]]),
            Err(Error::BadOffDiagonal(1, 2))
        ));
        assert!(matches!(CoxeterMatrix::from_rows(&[vec![1, 3]]), Err(Error::NotSquare)));
    }

    #[test]
    fn infinity_round_trips_as_zero() {
        let m = CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(m.get(0, 1), None);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"rank":2,"m":[[1,0],[0,1]]}"#);
        let back: CoxeterMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn components() {
        let a2 = CoxeterMatrix::a(2);
        assert_eq!(a2.diagram_components().components, vec![vec![0, 1]]);
        assert!(a2.diagram_components().isolated.is_empty());

        let a1a1 = CoxeterMatrix::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap();
        let dc = a1a1.diagram_components();
        assert_eq!(dc.components, vec![vec![0], vec![1]]);
        assert_eq!(dc.isolated, vec![0, 1]);

        let c3 = CoxeterMatrix::c(3);
        assert_eq!(c3.diagram_components().components.len(), 1);
        assert!(c3.diagram_components().isolated.is_empty());
    }

    #[test]
    fn polar_admissibility() {
        assert!(CoxeterMatrix::c(3).is_admissible_polar());
        assert!(!CoxeterMatrix::h3().is_admissible_polar());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap().is_admissible_polar());
        assert!(!CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap().is_admissible_polar());
    }
}
