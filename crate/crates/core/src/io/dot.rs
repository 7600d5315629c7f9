//! Hasse diagrams in DOT, bottom to top, nodes sorted by `(height, name)`.

use std::fmt::Write as _;

use crate::blocks::FactorLattice;
use crate::fca::ConceptLattice;
use crate::lattice::FiniteLattice;
use crate::order::FiniteOrder;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One node per element labelled by `label`, one edge per cover.
pub fn order_to_dot<P: FiniteOrder + ?Sized>(p: &P, graph: &str, label: impl Fn(usize) -> String) -> String {
    let n = p.size();
    let height: Vec<usize> = (0..n).map(|x| (0..n).filter(|&y| p.lt(y, x)).count()).collect();
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.sort_by(|&a, &b| (height[a], p.label(a)).cmp(&(height[b], p.label(b))).then(a.cmp(&b)));
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(graph));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n  edge [arrowhead=none];\n");
    for &x in &nodes {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", escape(&label(x)));
    }
    for &x in &nodes {
        for &y in &nodes {
            if p.covers_pair(x, y) {
                let _ = writeln!(out, "  n{x} -> n{y};");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn lattice_to_dot(lat: &FiniteLattice) -> String {
    order_to_dot(lat, lat.name(), |x| lat.names()[x].clone())
}

/// Blocks are labelled `[bottom,top]`.
pub fn factor_to_dot(f: &FactorLattice) -> String {
    lattice_to_dot(&f.lattice)
}

/// Concepts are labelled `{extent}|{intent}`.
pub fn concepts_to_dot(cl: &ConceptLattice) -> String {
    order_to_dot(&cl.lattice, "concepts", |i| cl.label(i))
}
