use std::fmt::Write;

use super::polygon::IncidenceGraph;
use super::system::ChamberSystem;
use crate::error::Result;

const COLORS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"];

fn color(t: usize) -> &'static str {
    COLORS[t % COLORS.len()]
}

/// Chamber-adjacency multigraph, one edge per adjacent pair and type,
/// colored by type.
pub fn adjacency_dot(sys: &ChamberSystem) -> String {
    let mut out = String::from("graph chambers {\n  node [shape=point];\n");
    for c in 0..sys.len() {
        match sys.labels() {
            Some(l) => writeln!(out, "  c{c} [shape=box, label=\"{}\"];", l[c].replace('"', "\\\"")).unwrap(),
            None => writeln!(out, "  c{c};").unwrap(),
        }
    }
    for t in 0..sys.rank() {
        for panel in sys.panels(t) {
            for (k, &x) in panel.iter().enumerate() {
                for &y in &panel[k + 1..] {
                    writeln!(out, "  c{x} -- c{y} [color={}, label=\"{}\"];", color(t), t + 1).unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Bipartite incidence graph of a rank-2 system: 1-panels `a*`, 2-panels
/// `b*`, one edge per chamber.
pub fn incidence_dot(sys: &ChamberSystem) -> Result<String> {
    let g = IncidenceGraph::of(sys)?;
    let mut out = String::from("graph incidence {\n");
    for p in 0..g.left {
        writeln!(out, "  a{p} [shape=circle, color={}];", color(0)).unwrap();
    }
    for p in 0..g.right {
        writeln!(out, "  b{p} [shape=square, color={}];", color(1)).unwrap();
    }
    for c in 0..sys.len() {
        writeln!(out, "  a{} -- b{} [label=\"{c}\"];", sys.panel_id(0, c), sys.panel_id(1, c)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterMatrix;

    #[test]
    fn hexagon_dot() {
        let c = CoxeterMatrix::a(2).coxeter_complex().unwrap();
        let s = adjacency_dot(&c);
        assert_eq!(s.matches(" -- ").count(), 6);
        let i = incidence_dot(&c).unwrap();
        assert_eq!(i.matches(" -- ").count(), 6);
        assert!(incidence_dot(&CoxeterMatrix::a(3).coxeter_complex().unwrap()).is_err());
    }
}
