//! Tail constructions, desingularization and row-finite equivalents.
//!
//! A graph admits a desingularization (and hence a row-finite equivalent)
//! exactly when no vertex emits uncountably many edges. The transforms here
//! report a refusal, with a witness vertex, in the uncountable case and
//! otherwise attach tails symbolically.

use crate::cardinality::Cardinality;
use crate::error::GraphError;
use crate::graph::{EdgeBundle, Graph, TailDescriptor, TailKind, VertexClass, VertexId};
use crate::order::EdgeOrderPolicy;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransformReport {
    pub tails_added: Vec<(VertexId, TailKind)>,
    pub vertices_untouched: usize,
    /// An uncountable emitter, when the transform was refused.
    pub refusal: Option<VertexId>,
}

impl TransformReport {
    pub fn refused(&self) -> bool {
        self.refusal.is_some()
    }
}

fn expect_class(g: &Graph, v: &VertexId, class: VertexClass) -> Result<(), GraphError> {
    if !g.vertices().any(|d| d == v) {
        return Err(GraphError::UnknownVertex(v.clone()));
    }
    if g.classify_vertex(v)? == class {
        Ok(())
    } else if class == VertexClass::Sink {
        Err(GraphError::NotASink(v.clone()))
    } else {
        Err(GraphError::NotACountableEmitter(v.clone()))
    }
}

fn attach(g: &mut Graph, v0: &VertexId, kind: TailKind, policy: EdgeOrderPolicy) -> Result<(), GraphError> {
    g.insert_tail(TailDescriptor {
        base: v0.clone(),
        kind,
        enumeration: policy,
        tail_vertex_prefix: v0.as_str().to_string(),
    })
}

/// Attaches `v0 -> v0#1 -> v0#2 -> ...` at the sink `v0`.
pub fn add_tail_at_sink(g: &Graph, v0: &VertexId) -> Result<Graph, GraphError> {
    expect_class(g, v0, VertexClass::Sink)?;
    let mut out = g.clone();
    attach(&mut out, v0, TailKind::Sink, EdgeOrderPolicy::default())?;
    Ok(out)
}

/// Replaces the out-edges `e_1, e_2, ...` of the countably infinite emitter
/// `v0` (listed by `policy`) by a tail with edges `f_j: v_{j-1} -> v_j` and
/// `g_j: v_{j-1} -> r(e_j)`.
pub fn add_tail_at_countable_emitter(
    g: &Graph,
    v0: &VertexId,
    policy: &EdgeOrderPolicy,
) -> Result<Graph, GraphError> {
    expect_class(g, v0, VertexClass::CountableEmitter)?;
    policy.check(v0, &g.raw_out_bundles(v0))?;
    let mut out = g.clone();
    attach(&mut out, v0, TailKind::Emitter, policy.clone())?;
    Ok(out)
}

fn add_tails(
    g: &Graph,
    policy: &EdgeOrderPolicy,
    at_sinks: bool,
) -> Result<(Graph, TransformReport), GraphError> {
    let declared: Vec<VertexId> = g.vertices().cloned().collect();
    let mut classes = Vec::with_capacity(declared.len());
    for v in &declared {
        let class = g.classify_vertex(v)?;
        if class == VertexClass::UncountableEmitter {
            return Ok((
                g.clone(),
                TransformReport {
                    tails_added: Vec::new(),
                    vertices_untouched: declared.len(),
                    refusal: Some(v.clone()),
                },
            ));
        }
        classes.push(class);
    }

    let mut out = g.clone();
    let mut report = TransformReport::default();
    for (v, class) in declared.iter().zip(classes) {
        match class {
            VertexClass::Sink if at_sinks => {
                attach(&mut out, v, TailKind::Sink, EdgeOrderPolicy::default())?;
                report.tails_added.push((v.clone(), TailKind::Sink));
            }
            VertexClass::CountableEmitter => {
                policy.check(v, &g.raw_out_bundles(v))?;
                attach(&mut out, v, TailKind::Emitter, policy.clone())?;
                report.tails_added.push((v.clone(), TailKind::Emitter));
            }
            _ => report.vertices_untouched += 1,
        }
    }
    Ok((out, report))
}

/// Tails at every sink and every countably infinite emitter.
///
/// The refusal in the uncountable case is part of the report, not an error;
/// errors are reserved for policies that do not fit some emitter.
pub fn desingularize(
    g: &Graph,
    policy: &EdgeOrderPolicy,
) -> Result<(Graph, TransformReport), GraphError> {
    add_tails(g, policy, true)
}

/// Tails at countably infinite emitters only; sinks stay sinks.
pub fn row_finite_equivalent(
    g: &Graph,
    policy: &EdgeOrderPolicy,
) -> Result<(Graph, TransformReport), GraphError> {
    add_tails(g, policy, false)
}

/// Finite window onto `g`: tail vertices `v_1..v_depth`, tail edges
/// `f_j, g_j` for `j <= depth`, and the first `depth` edges of every
/// countably infinite bundle that no tail replaced.
///
/// The last vertex of each tail is a sink of the window and is recorded in
/// [`Graph::frontier`].
pub fn materialize(g: &Graph, depth: u64) -> Result<Graph, GraphError> {
    if let Some(b) = g.uncountable_bundle() {
        return Err(GraphError::HasUncountable(b.bundle_id.clone()));
    }
    let mut out = Graph::new();
    for v in g.vertices() {
        out.ensure_vertex(v.clone());
    }
    for v in g.frontier() {
        out.mark_frontier(v.clone());
    }
    for b in g.bundles() {
        if g.tail_at(&b.source).is_some_and(|t| t.kind == TailKind::Emitter) {
            continue;
        }
        let multiplicity = match b.multiplicity {
            Cardinality::Finite(_) => Some(b.multiplicity),
            _ => Cardinality::finite(depth),
        };
        if let Some(multiplicity) = multiplicity {
            out.insert_bundle(EdgeBundle {
                multiplicity,
                ..b.clone()
            })?;
        }
    }

    let one = Cardinality::finite(1).unwrap();
    for t in g.tails() {
        let redirects = match t.kind {
            TailKind::Sink => Vec::new(),
            TailKind::Emitter => g.original_edges(t, depth as usize),
        };
        for j in 1..=depth {
            out.insert_bundle(EdgeBundle {
                bundle_id: format!("{}{j}", t.forward_bundle()),
                source: t.vertex(j - 1),
                target: t.vertex(j),
                multiplicity: one,
            })?;
            if let Some(e) = redirects.get(j as usize - 1) {
                let target = g.bundle(&e.bundle_id).expect("enumerated bundle").target.clone();
                out.insert_bundle(EdgeBundle {
                    bundle_id: format!("{}{j}", t.redirect_bundle()),
                    source: t.vertex(j - 1),
                    target,
                    multiplicity: one,
                })?;
            }
        }
        let last = t.vertex(depth);
        out.ensure_vertex(last.clone());
        out.mark_frontier(last);
    }
    Ok(out)
}
