use serde::Serialize;

use super::geometry::{check_ll, IncidenceGeometry, LlReport, Vertex};
use crate::chamber::{infer_type_matrix, is_simplicial, ChamberSystem, SimplicialWitness};
use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct C3Report {
    pub c3: bool,
    pub r#type: Option<String>,
    /// 1-based types playing the C3 nodes from the single-bond end to the
    /// 4-bond end.
    pub relabeling: Option<[usize; 3]>,
    pub connected: bool,
    pub residually_connected: bool,
    pub simplicial: bool,
    pub simplicial_witness: Option<SimplicialWitness>,
    pub reason: Option<String>,
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `p` with `m.permuted(p) == C3`, i.e. type `p[k]` plays node `k`.
pub fn c3_relabeling(m: &CoxeterMatrix) -> Option<[usize; 3]> {
    let c3 = CoxeterMatrix::c(3);
    (m.rank() == 3).then_some(())?;
    PERMS3.into_iter().find(|p| (0..3).all(|a| (0..3).all(|b| m.get(p[a], p[b]) == c3.get(a, b))))
}

/// Every vertex residue of the incidence geometry is connected.
pub fn is_residually_connected(geom: &IncidenceGeometry) -> bool {
    (0..geom.rank()).all(|i| (0..geom.counts()[i]).all(|a| geom.residue_connected(Vertex { cotype: i, id: a })))
}

/// Whether `sys` is a C3 geometry: type C3 up to relabeling, connected,
/// residually connected and simplicial.
pub fn is_c3_geometry(sys: &ChamberSystem) -> Result<C3Report> {
    if sys.rank() != 3 {
        return Err(Error::WrongRank { expected: 3, found: sys.rank() });
    }
    let connected = sys.is_connected();
    let geom = IncidenceGeometry::of(sys);
    let residually_connected = is_residually_connected(&geom);
    let simp = is_simplicial(sys)?;
    let mut report = C3Report {
        c3: false,
        r#type: None,
        relabeling: None,
        connected,
        residually_connected,
        simplicial: simp.simplicial,
        simplicial_witness: simp.witness,
        reason: None,
    };
    match infer_type_matrix(sys) {
        Ok(m) => {
            report.r#type = m.type_name();
            report.relabeling = c3_relabeling(&m).map(|p| p.map(|t| t + 1));
            if report.relabeling.is_none() {
                report.reason = Some(format!("type matrix {m} is not C3"));
            }
        }
        Err(e @ (Error::ResidueNotPolygon(..) | Error::InconsistentResidues { .. })) => {
            report.reason = Some(e.to_string());
        }
        Err(e) => return Err(e),
    }
    if report.reason.is_none() {
        report.reason = if !connected {
            Some("disconnected".into())
        } else if !residually_connected {
            Some("a vertex residue is disconnected".into())
        } else if !report.simplicial {
            Some("not simplicial".into())
        } else {
            None
        };
    }
    report.c3 = report.reason.is_none();
    Ok(report)
}

/// (LL) verdicts for the point/line roles read off a rank-3 linear diagram:
/// points at an end node, lines at the middle node. For C3 the first
/// assignment puts points at the single-bond end; for symmetric diagrams
/// both ends are reported.
#[derive(Clone, Debug, Serialize)]
pub struct LlVerdict {
    pub r#type: Option<String>,
    pub holds: bool,
    pub assignments: Vec<LlReport>,
}

fn linear_roles(m: &CoxeterMatrix) -> Option<Vec<(usize, usize)>> {
    if let Some(p) = c3_relabeling(m) {
        return Some(vec![(p[0], p[1]), (p[2], p[1])]);
    }
    if m.rank() != 3 {
        return None;
    }
    let middle = (0..3).find(|&r| (0..3).filter(|&s| s != r).all(|s| m.bonded(r, s)))?;
    let ends: Vec<usize> = (0..3).filter(|&s| s != middle).collect();
    (!m.bonded(ends[0], ends[1])).then(|| ends.iter().map(|&e| (e, middle)).collect())
}

pub fn ll_verdict(sys: &ChamberSystem) -> Result<LlVerdict> {
    let m = infer_type_matrix(sys)?;
    let roles = linear_roles(&m)
        .ok_or_else(|| Error::InvalidInput(format!("type matrix {m} has no point/line roles")))?;
    let geom = IncidenceGeometry::of(sys);
    let assignments: Vec<LlReport> = roles.iter().map(|&(p, l)| check_ll(&geom, p, l)).collect();
    let holds = if c3_relabeling(&m).is_some() { assignments[0].holds } else { assignments.iter().all(|a| a.holds) };
    Ok(LlVerdict { r#type: m.type_name(), holds, assignments })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thin_c3_is_a_c3_geometry() {
        let c = CoxeterMatrix::c(3).coxeter_complex().unwrap();
        let r = is_c3_geometry(&c).unwrap();
        assert!(r.c3, "{r:?}");
        assert_eq!(r.relabeling, Some([1, 2, 3]));
        let ll = ll_verdict(&c).unwrap();
        assert!(ll.holds);
        assert_eq!((ll.assignments[0].point_type, ll.assignments[0].line_type), (1, 2));
    }

    #[test]
    fn thin_a3_is_not() {
        let c = CoxeterMatrix::a(3).coxeter_complex().unwrap();
        let r = is_c3_geometry(&c).unwrap();
        assert!(!r.c3);
        assert!(r.connected && r.residually_connected && r.simplicial);
        assert_eq!(ll_verdict(&c).unwrap().assignments.len(), 2);
    }

    #[test]
    fn relabelled_c3() {
        let m = CoxeterMatrix::c(3).permuted(&[2, 0, 1]);
        let p = c3_relabeling(&m).unwrap();
        assert_eq!(m.permuted(&p), CoxeterMatrix::c(3));
    }
}
