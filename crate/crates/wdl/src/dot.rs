//! Hasse diagrams in DOT. Covers only, bottom at the bottom; node shape
//! marks membership in the two skeletons.

use std::fmt::Write as _;

use wdl_core::Dicomplementation;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `box` for the dual skeleton only, `diamond` for the skeleton only,
/// `doubleoctagon` for both, `ellipse` otherwise.
pub fn export_dot(d: &Dicomplementation, name: &str) -> String {
    let l = d.lattice();
    let interior = d.wcl().map(|w| w.skeleton()).unwrap_or_default();
    let closed = d.dual_wcl().map(|v| v.skeleton()).unwrap_or_default();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quoted(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for x in l.elements() {
        let shape = match (interior.contains(x), closed.contains(x)) {
            (true, true) => "doubleoctagon",
            (true, false) => "box",
            (false, true) => "diamond",
            (false, false) => "ellipse",
        };
        writeln!(out, "  {} [shape={shape}];", quoted(l.name(x))).unwrap();
    }
    for (a, b) in l.covers() {
        writeln!(out, "  {} -> {};", quoted(l.name(a)), quoted(l.name(b))).unwrap();
    }
    out.push_str("}\n");
    out
}
