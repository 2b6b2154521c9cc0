use std::fmt::Write;

use crate::error::GraphError;
use crate::graph::Graph;

/// Canonical text form: every vertex (sorted), then every bundle (sorted by
/// id). Graphs carrying tails or generated vertices have no text form.
pub fn serialize_graph(g: &Graph) -> Result<String, GraphError> {
    if let Some(t) = g.tails().next() {
        return Err(GraphError::Unserializable(format!("tail at `{}`", t.base)));
    }
    if let Some(v) = g.vertices().find(|v| v.is_generated()) {
        return Err(GraphError::Unserializable(format!("generated vertex `{v}`")));
    }
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for b in g.bundles() {
        writeln!(
            out,
            "edge {} : {} -> {} * {}",
            b.bundle_id, b.source, b.target, b.multiplicity
        )
        .unwrap();
    }
    Ok(out)
}
