use std::collections::{BTreeSet, HashMap, VecDeque};

use super::matrix::CoxeterMatrix;
use super::word::{WElement, Word};
use crate::chamber::ChamberSystem;
use crate::error::{Error, Result};

/// Default cap on the number of group elements `enumerate` will produce.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// All elements of a finite Coxeter group with right multiplication by the
/// generators.
///
/// Elements are indexed in ShortLex order of their canonical words, so index
/// 0 is the identity.
#[derive(Clone, Debug)]
pub struct CoxeterGroupTable {
    matrix: CoxeterMatrix,
    elements: Vec<WElement>,
    index: HashMap<Word, usize>,
    right: Vec<Vec<usize>>,
}

impl CoxeterGroupTable {
    pub fn enumerate(m: &CoxeterMatrix) -> Result<Self> {
        Self::enumerate_with_cap(m, DEFAULT_ELEMENT_CAP)
    }

    pub fn enumerate_with_cap(m: &CoxeterMatrix, cap: usize) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::InfiniteGroup);
        }
        if m.order_by_type().is_none_or(|o| o > cap as u128) {
            return Err(Error::CapExceeded(cap));
        }
        let k = m.rank();
        let gens = root_permutations(m, cap)?;
        // an element w is keyed by the images of the simple roots under
        // w^{-1}, so right multiplication by r_s acts by r_s on the left
        let identity: Vec<u32> = (0..k as u32).collect();
        let mut found: HashMap<Vec<u32>, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut keys = vec![identity];
        let mut words = vec![Word::empty()];
        let mut raw_right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            let mut row = vec![0; k];
            for (s, slot) in row.iter_mut().enumerate() {
                let key: Vec<u32> = keys[e].iter().map(|&r| gens[s][r as usize]).collect();
                *slot = match found.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = words.len();
                        if id >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        let mut w = words[e].0.clone();
                        w.push(s as u8);
                        found.insert(key.clone(), id);
                        keys.push(key);
                        words.push(Word(w));
                        queue.push_back(id);
                        id
                    }
                };
            }
            raw_right.push(row);
        }
        // Reindex in ShortLex order.
        let mut order: Vec<usize> = (0..words.len()).collect();
        order.sort_by(|&a, &b| words[a].shortlex_key().cmp(&words[b].shortlex_key()));
        let mut new_id = vec![0; words.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let elements: Vec<WElement> =
            order.iter().map(|&old| WElement::from_canonical(words[old].clone())).collect();
        let right = order.iter().map(|&old| raw_right[old].iter().map(|&t| new_id[t]).collect()).collect();
        let index = elements.iter().enumerate().map(|(i, e)| (e.word().clone(), i)).collect();
        Ok(CoxeterGroupTable { matrix: m.clone(), elements, index, right })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &WElement {
        &self.elements[id]
    }

    pub fn index_of(&self, w: &WElement) -> Option<usize> {
        self.index.get(w.word()).copied()
    }

    /// `w · r_s`.
    pub fn right_mul(&self, id: usize, s: usize) -> usize {
        self.right[id][s]
    }

    /// Evaluates a word by walking the multiplication table.
    pub fn evaluate(&self, w: &Word) -> Result<usize> {
        self.evaluate_from(0, w)
    }

    pub fn evaluate_from(&self, start: usize, w: &Word) -> Result<usize> {
        let k = self.matrix.rank();
        w.0.iter().try_fold(start, |e, &s| {
            if (s as usize) < k {
                Ok(self.right[e][s as usize])
            } else {
                Err(Error::InvalidLetter { letter: s as usize + 1, rank: k })
            }
        })
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.evaluate_from(a, self.elements[b].word()).expect("table words are valid")
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.evaluate(&self.elements[a].word().reversed()).expect("table words are valid")
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn reduced_words(&self, id: usize) -> Result<BTreeSet<Word>> {
        self.matrix.reduced_words(&self.elements[id])
    }

    /// The thin chamber system on `W`: chambers are elements, the `i`-panels
    /// are the pairs `{w, w r_i}`.
    pub fn coxeter_complex(&self) -> ChamberSystem {
        let n = self.order();
        let k = self.matrix.rank();
        let panels = (0..k)
            .map(|s| {
                (0..n)
                    .filter_map(|w| {
                        let v = self.right[w][s];
                        (w < v).then(|| vec![w, v])
                    })
                    .collect()
            })
            .collect();
        let labels = self.elements.iter().map(|e| e.to_string()).collect();
        ChamberSystem::from_partitions(n, k, panels)
            .expect("right multiplication by an involution pairs elements")
            .with_labels(labels)
            .expect("one label per element")
    }
}

/// The root system of the geometric representation, as one permutation of
/// the roots per simple reflection; roots `0..k` are the simple roots.
/// BFS over words in ShortLex order finds each element first by its
/// ShortLex-least word, which is therefore its canonical word.
fn root_permutations(m: &CoxeterMatrix, cap: usize) -> Result<Vec<Vec<u32>>> {
    const SCALE: f64 = 1e6;
    let k = m.rank();
    let b: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match (i == j, m.get(i, j)) {
                    (true, _) => 1.0,
                    (false, Some(mij)) => -(std::f64::consts::PI / f64::from(mij)).cos(),
                    (false, None) => -1.0,
                })
                .collect()
        })
        .collect();
    let reflect = |s: usize, v: &[f64]| -> Vec<f64> {
        let c: f64 = 2.0 * (0..k).map(|j| b[s][j] * v[j]).sum::<f64>();
        let mut out = v.to_vec();
        out[s] -= c;
        out
    };
    let key = |v: &[f64]| -> Vec<i64> { v.iter().map(|x| (x * SCALE).round() as i64).collect() };
    let mut roots: Vec<Vec<f64>> = (0..k).map(|i| (0..k).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    let mut index: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (key(r), i)).collect();
    let mut perms: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut next = 0;
    while next < roots.len() {
        for (s, perm) in perms.iter_mut().enumerate() {
            let image = reflect(s, &roots[next]);
            let id = match index.get(&key(&image)) {
                Some(&id) => id,
                None => {
                    if roots.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(key(&image), roots.len());
                    roots.push(image);
                    roots.len() - 1
                }
            };
            perm.push(id as u32);
        }
        next += 1;
    }
    Ok(perms)
}

impl CoxeterMatrix {
    pub fn enumerate(&self) -> Result<CoxeterGroupTable> {
        CoxeterGroupTable::enumerate(self)
    }

    pub fn coxeter_complex(&self) -> Result<ChamberSystem> {
        Ok(self.enumerate()?.coxeter_complex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(CoxeterMatrix::a(3).enumerate().unwrap().order(), 24);
        assert_eq!(CoxeterMatrix::c(3).enumerate().unwrap().order(), 48);
        assert_eq!(CoxeterMatrix::h3().enumerate().unwrap().order(), 120);
        assert_eq!(CoxeterMatrix::dihedral(4).enumerate().unwrap().order(), 8);
        assert_eq!(CoxeterMatrix::a(1).enumerate().unwrap().order(), 2);
    }

    #[test]
    fn table_words_are_rewriting_normal_forms() {
        for m in [CoxeterMatrix::c(3), CoxeterMatrix::h3(), CoxeterMatrix::dihedral(7), CoxeterMatrix::a(4)] {
            let t = m.enumerate().unwrap();
            for e in t.elements().iter().step_by(3) {
                assert_eq!(&m.canonical(e.word()).unwrap(), e, "{m}");
            }
        }
    }

    #[test]
    fn larger_groups() {
        assert_eq!(CoxeterMatrix::a(5).enumerate().unwrap().order(), 720);
        let t = CoxeterMatrix::linear(&[3, 4, 3]).enumerate().unwrap();
        assert_eq!(t.order(), 1152);
        assert_eq!(t.element(t.longest()).length(), 24);
    }

    #[test]
    fn infinite_refused() {
        let inf = CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(matches!(inf.enumerate(), Err(Error::InfiniteGroup)));
        assert!(matches!(inf.coxeter_complex(), Err(Error::InfiniteGroup)));
        assert!(matches!(
            CoxeterGroupTable::enumerate_with_cap(&CoxeterMatrix::a(4), 100),
            Err(Error::CapExceeded(100))
        ));
    }

    #[test]
    fn longest_element_is_an_involution() {
        let t = CoxeterMatrix::a(3).enumerate().unwrap();
        let w0 = t.longest();
        assert_eq!(t.element(w0).length(), 6);
        assert_eq!(t.multiply(w0, w0), 0);
        assert_eq!(t.inverse(w0), w0);
        assert_eq!(t.reduced_words(w0).unwrap().len(), 16);
    }

    #[test]
    fn complexes_are_thin() {
        let a1 = CoxeterMatrix::a(1).coxeter_complex().unwrap();
        assert_eq!(a1.len(), 2);
        assert_eq!(a1.panels(0).len(), 1);
        for m in [CoxeterMatrix::a(3), CoxeterMatrix::c(3)] {
            let c = m.coxeter_complex().unwrap();
            assert!(c.is_thin());
        }
        assert_eq!(CoxeterMatrix::c(3).coxeter_complex().unwrap().len(), 48);
    }
}
