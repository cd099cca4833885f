use std::collections::BTreeSet;

use serde::Serialize;

use crate::chamber::{
    infer_type_matrix, minimal_gallery_types, minimal_gallery_types_from, ChamberSystem, IncidenceGraph,
    DEFAULT_PAIR_BUDGET, DEFAULT_TYPE_SET_CAP,
};
use crate::coxeter::{CoxeterGroupTable, CoxeterMatrix, WElement, Word};
use crate::error::{Error, Result};

/// Violations kept in a report.
pub const MAX_REPORTED_VIOLATIONS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Disconnected,
    TypeInference { message: String },
    /// A panel with fewer than two chambers (`type` is 1-based).
    ThinPanel { r#type: usize, chamber: usize },
    /// An `{i,j}`-residue that is not a generalized `m_ij`-gon.
    NotPolygon { i: usize, j: usize, chamber: usize, expected: Option<u32>, girth: Option<u32>, diameter: Option<u32> },
    NoSuchW { x: usize, y: usize, found: Vec<String>, expected: Vec<String> },
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildingReport {
    pub building: bool,
    pub r#type: Option<String>,
    pub pairs_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl BuildingReport {
    fn push(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_REPORTED_VIOLATIONS {
            self.violations.push(v);
        }
    }
}

fn word_strings(words: &BTreeSet<Word>) -> Vec<String> {
    words.iter().map(Word::to_string).collect()
}

/// Matches a minimal-gallery type set against the reduced-word sets of `W`.
fn match_type_set(table: &CoxeterGroupTable, reduced: &[BTreeSet<Word>], types: &BTreeSet<Word>) -> Option<usize> {
    let first = types.iter().next()?;
    let w = table.evaluate(first).ok()?;
    (table.element(w).length() == first.len() && reduced[w] == *types).then_some(w)
}

/// The `W`-valued distance `δ(x, y)`: the element whose reduced words are
/// exactly the types of minimal galleries from `x` to `y`.
pub fn w_distance(sys: &ChamberSystem, table: &CoxeterGroupTable, x: usize, y: usize) -> Result<WElement> {
    let types = minimal_gallery_types(sys, x, y)?;
    if let Some(w) = types.iter().next().and_then(|f| table.evaluate(f).ok()) {
        let reduced = table.reduced_words(w)?;
        if table.element(w).length() == types.iter().next().unwrap().len() && reduced == types {
            return Ok(table.element(w).clone());
        }
        return Err(Error::NoSuchW { x, y, found: word_strings(&types), expected: word_strings(&reduced) });
    }
    Err(Error::NoSuchW { x, y, found: word_strings(&types), expected: Vec::new() })
}

/// Checks the building axioms against `m` with the default chamber budget.
pub fn is_building(sys: &ChamberSystem, m: &CoxeterMatrix) -> Result<BuildingReport> {
    is_building_with_budget(sys, m, DEFAULT_PAIR_BUDGET)
}

/// Checks that every panel has at least two chambers, every `{i,j}`-residue
/// is a generalized `m_ij`-gon, and the minimal-gallery type set of every
/// ordered pair is the reduced-word set of one element of `W(m)`.
pub fn is_building_with_budget(sys: &ChamberSystem, m: &CoxeterMatrix, budget: usize) -> Result<BuildingReport> {
    if m.rank() != sys.rank() {
        return Err(Error::WrongRank { expected: sys.rank(), found: m.rank() });
    }
    if sys.len() > budget {
        return Err(Error::BudgetExceeded { what: "building pair scan", limit: budget });
    }
    let table = m.enumerate()?;
    let mut report = BuildingReport {
        building: true,
        r#type: m.type_name(),
        pairs_checked: 0,
        violation_count: 0,
        violations: Vec::new(),
    };
    if !sys.is_connected() {
        report.push(Violation::Disconnected);
    }
    for t in 0..sys.rank() {
        for panel in sys.panels(t) {
            if panel.len() < 2 {
                report.push(Violation::ThinPanel { r#type: t + 1, chamber: panel[0] as usize });
            }
        }
    }
    for i in 0..sys.rank() {
        for j in i + 1..sys.rank() {
            let expected = m.get(i, j);
            for residue in sys.residues(&[i, j]) {
                let g = IncidenceGraph::of(&sys.restrict(&residue, &[i, j]))?;
                let (girth, diameter) = (g.girth(), g.diameter());
                let ok = matches!((expected, diameter, girth), (Some(e), Some(d), Some(gi)) if d == e && gi == 2 * e);
                if !ok {
                    report.push(Violation::NotPolygon {
                        i: i + 1,
                        j: j + 1,
                        chamber: residue[0] as usize,
                        expected,
                        girth,
                        diameter,
                    });
                }
            }
        }
    }
    let reduced: Vec<BTreeSet<Word>> =
        (0..table.order()).map(|w| table.reduced_words(w)).collect::<Result<_>>()?;
    for x in 0..sys.len() {
        let sets = minimal_gallery_types_from(sys, x, DEFAULT_TYPE_SET_CAP)?;
        for (y, set) in sets.into_iter().enumerate() {
            let Some(set) = set else { continue };
            report.pairs_checked += 1;
            if match_type_set(&table, &reduced, &set).is_none() {
                let expected = set
                    .iter()
                    .next()
                    .and_then(|f| table.evaluate(f).ok())
                    .map(|w| word_strings(&reduced[w]))
                    .unwrap_or_default();
                report.push(Violation::NoSuchW { x, y, found: word_strings(&set), expected });
            }
        }
    }
    report.building = report.violation_count == 0;
    Ok(report)
}

/// Infers the type matrix and checks the building axioms against it. An
/// inference failure is reported as a violation.
pub fn is_building_inferred(sys: &ChamberSystem) -> Result<BuildingReport> {
    match infer_type_matrix(sys) {
        Ok(m) if m.is_finite() => is_building(sys, &m),
        Ok(m) => Ok(BuildingReport {
            building: false,
            r#type: None,
            pairs_checked: 0,
            violation_count: 1,
            violations: vec![Violation::TypeInference { message: format!("inferred matrix {m} is not of finite type") }],
        }),
        Err(e @ (Error::ResidueNotPolygon(..) | Error::InconsistentResidues { .. })) => Ok(BuildingReport {
            building: false,
            r#type: None,
            pairs_checked: 0,
            violation_count: 1,
            violations: vec![Violation::TypeInference { message: e.to_string() }],
        }),
        Err(e) => Err(e),
    }
}
