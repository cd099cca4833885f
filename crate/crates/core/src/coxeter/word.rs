//! Words over the type set and the Coxeter word problem by rewriting.
//!
//! Two words represent the same element of `W(M)` exactly when one can be
//! turned into the other by braid moves (replace an alternating segment
//! `ijij...` of length `m_ij` by `jiji...`) and deletion of adjacent repeated
//! letters. A word is reduced iff no word in its braid class contains a
//! repeated adjacent letter. Canonical forms are ShortLex-least reduced words.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::CoxeterMatrix;
use crate::error::{Error, Result};

/// Default cap on the number of intermediate words a single canonicalization
/// may visit.
pub const DEFAULT_REWRITE_BUDGET: usize = 1_000_000;

/// A word over `{0, ..., k-1}` (serialized 1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses 1-based letters, checking them against the rank.
    pub fn from_one_based(letters: &[usize], rank: usize) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                if l == 0 || l > rank {
                    Err(Error::InvalidLetter { letter: l, rank })
                } else {
                    Ok((l - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a digit string such as `"121"` (1-based, rank at most 9).
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let letters: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(Error::InvalidLetter { letter: 0, rank }))
            .collect::<Result<_>>()?;
        Self::from_one_based(&letters, rank)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize + 1).collect()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// ShortLex comparison key.
    pub fn shortlex_key(&self) -> (usize, &[u8]) {
        (self.0.len(), &self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 9) {
            for &l in &self.0 {
                write!(f, "{}", l + 1)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        if raw.iter().any(|&l| l == 0 || l > 255) {
            return Err(serde::de::Error::custom("type indices are 1-based"));
        }
        Ok(Word(raw.into_iter().map(|l| (l - 1) as u8).collect()))
    }
}

/// An element of `W(M)`, carried by its ShortLex-least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WElement {
    canonical: Word,
}

impl WElement {
    pub fn identity() -> Self {
        WElement { canonical: Word::empty() }
    }

    /// Wraps a word already known to be canonical.
    pub(crate) fn from_canonical(canonical: Word) -> Self {
        WElement { canonical }
    }

    pub fn word(&self) -> &Word {
        &self.canonical
    }

    pub fn length(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_identity(&self) -> bool {
        self.canonical.is_empty()
    }
}

impl fmt::Display for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.canonical.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.canonical)
        }
    }
}

/// Applies every legal braid move to `w`, calling `visit` on each result.
pub fn braid_neighbours(m: &CoxeterMatrix, w: &[u8], mut visit: impl FnMut(Vec<u8>)) {
    let n = w.len();
    for p in 0..n.saturating_sub(1) {
        let (i, j) = (w[p], w[p + 1]);
        if i == j {
            continue;
        }
        let Some(mij) = m.get(i as usize, j as usize) else { continue };
        let len = mij as usize;
        if p + len > n {
            continue;
        }
        let alternates = (0..len).all(|t| w[p + t] == if t % 2 == 0 { i } else { j });
        if alternates {
            let mut out = w.to_vec();
            for t in 0..len {
                out[p + t] = if t % 2 == 0 { j } else { i };
            }
            visit(out);
        }
    }
}

/// The braid-move class of a word, with a cap on its size.
pub fn braid_closure(m: &CoxeterMatrix, w: &[u8], budget: usize) -> Result<HashSet<Vec<u8>>> {
    let mut seen = HashSet::new();
    seen.insert(w.to_vec());
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        let mut overflow = false;
        braid_neighbours(m, &cur, |next| {
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    overflow = true;
                    return;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        });
        if overflow {
            return Err(Error::BudgetExceeded { what: "braid closure", limit: budget });
        }
    }
    Ok(seen)
}

fn check_letters(m: &CoxeterMatrix, w: &Word) -> Result<()> {
    match w.0.iter().find(|&&l| l as usize >= m.rank()) {
        Some(&l) => Err(Error::InvalidLetter { letter: l as usize + 1, rank: m.rank() }),
        None => Ok(()),
    }
}

/// Reduces `w` to some reduced word of the same element.
///
/// Letters are appended one at a time to a reduced prefix `u`. If `u s` is
/// not reduced, its braid class contains a word with a repeated adjacent
/// letter; deleting that pair leaves a word of length `|u| - 1`, which is
/// reduced.
pub fn reduce(m: &CoxeterMatrix, w: &Word, budget: usize) -> Result<Word> {
    check_letters(m, w)?;
    let mut cur: Vec<u8> = Vec::with_capacity(w.len());
    let mut spent = 0usize;
    for &s in &w.0 {
        if cur.last() == Some(&s) {
            cur.pop();
            continue;
        }
        cur.push(s);
        let closure = braid_closure(m, &cur, budget.saturating_sub(spent).max(1))?;
        spent += closure.len();
        if spent > budget {
            return Err(Error::BudgetExceeded { what: "canonical form", limit: budget });
        }
        if let Some(v) = closure.iter().find(|v| v.windows(2).any(|p| p[0] == p[1])) {
            let p = v.windows(2).position(|p| p[0] == p[1]).unwrap();
            let mut shorter = v.clone();
            shorter.drain(p..p + 2);
            cur = shorter;
        }
    }
    Ok(Word(cur))
}

/// ShortLex-least word in the braid class of a reduced word.
fn shortlex_min(m: &CoxeterMatrix, reduced: &[u8], budget: usize) -> Result<Word> {
    let closure = braid_closure(m, reduced, budget)?;
    Ok(Word(closure.into_iter().min().unwrap_or_default()))
}

impl CoxeterMatrix {
    /// Canonical element of a word with the default rewrite budget.
    pub fn canonical(&self, w: &Word) -> Result<WElement> {
        self.canonical_with_budget(w, DEFAULT_REWRITE_BUDGET)
    }

    pub fn canonical_with_budget(&self, w: &Word, budget: usize) -> Result<WElement> {
        let reduced = reduce(self, w, budget)?;
        Ok(WElement::from_canonical(shortlex_min(self, &reduced.0, budget)?))
    }

    pub fn multiply(&self, u: &WElement, v: &WElement) -> Result<WElement> {
        self.canonical(&u.canonical.concat(&v.canonical))
    }

    pub fn inverse(&self, u: &WElement) -> Result<WElement> {
        self.canonical(&u.canonical.reversed())
    }

    /// `u^{-1} v`.
    pub fn left_divide(&self, u: &WElement, v: &WElement) -> Result<WElement> {
        self.canonical(&u.canonical.reversed().concat(&v.canonical))
    }

    /// All reduced words of `w`, sorted.
    pub fn reduced_words(&self, w: &WElement) -> Result<BTreeSet<Word>> {
        self.reduced_words_with_budget(w, DEFAULT_REWRITE_BUDGET)
    }

    pub fn reduced_words_with_budget(&self, w: &WElement, budget: usize) -> Result<BTreeSet<Word>> {
        Ok(braid_closure(self, &w.canonical.0, budget)?.into_iter().map(Word).collect())
    }

    /// Whether `w` is a reduced word.
    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        Ok(reduce(self, w, DEFAULT_REWRITE_BUDGET)?.len() == w.len())
    }
}
