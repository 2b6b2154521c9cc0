use std::fmt::Write;

use crate::error::GraphError;
use crate::graph::Graph;

/// Graphviz rendering of a finite graph: one arrow per bundle labelled with
/// its multiplicity, frontier vertices dashed.
pub fn export_dot(g: &Graph) -> Result<String, GraphError> {
    if !g.is_finite() {
        return Err(GraphError::NotFinite);
    }
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        if g.is_frontier(v) {
            writeln!(out, "  \"{v}\" [style=dashed];").unwrap();
        } else {
            writeln!(out, "  \"{v}\";").unwrap();
        }
    }
    for b in g.bundles() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"×{}\"];",
            b.source, b.target, b.multiplicity
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
