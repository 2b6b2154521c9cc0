use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Zero};

use crate::error::{AlgebraError, GraphError};
use crate::graph::{Graph, VertexClass, VertexId};

use super::element::{AlgebraElement, Monomial};
use super::path::Path;

/// `e e*` for the first `n` edges leaving `w`, in the vertex's edge order.
/// Uncountable emitters are sampled up to the graph's sampling bound.
pub fn sample_emitter_idempotents(
    g: &Graph,
    w: &VertexId,
    n: usize,
) -> Result<Vec<AlgebraElement>, AlgebraError> {
    let edges = g.out_edges(w, Some(n))?;
    if edges.len() < n {
        return Err(AlgebraError::NotEnoughEdges {
            vertex: w.clone(),
            requested: n,
        });
    }
    edges
        .into_iter()
        .map(|e| {
            let p = Path::new(g, w.clone(), vec![e.id])?;
            Ok(Monomial::projection(p).into())
        })
        .collect()
}

/// Exact rank test over the rationals, in the monomial presentation.
///
/// Because no Cuntz–Krieger relation is applied, this certifies independence
/// of the presentations; distinct presentations of one algebra element would
/// count as independent.
pub fn linearly_independent(xs: &[AlgebraElement]) -> bool {
    let columns: BTreeSet<&Monomial> = xs.iter().flat_map(|x| x.terms().map(|(m, _)| m)).collect();
    let columns: Vec<&Monomial> = columns.into_iter().collect();
    if xs.len() > columns.len() {
        return false;
    }
    let mut rows: Vec<Vec<BigRational>> = xs
        .iter()
        .map(|x| columns.iter().map(|m| x.coefficient(m)).collect())
        .collect();
    rank(&mut rows) == xs.len()
}

fn rank(rows: &mut [Vec<BigRational>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let lead = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &lead;
                for c in col..width {
                    let delta = &factor * &rows[r][c];
                    rows[i][c] -= delta;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Paths from `v` grouped by length, `0..=maxlen`.
fn paths_by_length(g: &Graph, v: &VertexId, maxlen: usize) -> Result<Vec<Vec<Path>>, AlgebraError> {
    if !g.contains(v) {
        return Err(GraphError::UnknownVertex(v.clone()).into());
    }
    let mut layers = vec![vec![Path::vertex(v.clone())]];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for p in layers.last().unwrap() {
            let end = p.range();
            match g.classify_vertex(end)? {
                VertexClass::CountableEmitter | VertexClass::UncountableEmitter => {
                    return Err(AlgebraError::NotLocallyRowFinite(end.clone()));
                }
                _ => {}
            }
            for e in g.out_edges(end, None)? {
                next.push(p.push(e.id, e.target));
            }
        }
        layers.push(next);
    }
    Ok(layers)
}

fn pair_up(ps: &[Path], qs: &[Path], out: &mut Vec<Monomial>) {
    let mut by_range: BTreeMap<&VertexId, Vec<&Path>> = BTreeMap::new();
    for q in qs {
        by_range.entry(q.range()).or_default().push(q);
    }
    for p in ps {
        for q in by_range.get(p.range()).into_iter().flatten() {
            out.push(Monomial::new(p.clone(), (*q).clone()).expect("matching ranges"));
        }
    }
}

/// Monomials `p q*` with `s(p) = v`, `s(q) = v2`, `r(p) = r(q)` and
/// `|p| = |q| <= maxlen`, sorted.
///
/// A spanning family for the degree-zero part of the corner `v L v2`; it is
/// typically not linearly independent. Fails if an infinite emitter is met
/// before the paths reach `maxlen`.
pub fn corner_basis(
    g: &Graph,
    v: &VertexId,
    v2: &VertexId,
    maxlen: usize,
) -> Result<Vec<Monomial>, AlgebraError> {
    let ps = paths_by_length(g, v, maxlen)?;
    let qs = paths_by_length(g, v2, maxlen)?;
    let mut out = Vec::new();
    for (p_layer, q_layer) in ps.iter().zip(&qs) {
        pair_up(p_layer, q_layer, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Like [`corner_basis`] but with `|p|` and `|q|` bounded independently, so
/// every graded piece of the corner contributes.
pub fn corner_span(
    g: &Graph,
    v: &VertexId,
    v2: &VertexId,
    maxlen: usize,
) -> Result<Vec<Monomial>, AlgebraError> {
    let ps: Vec<Path> = paths_by_length(g, v, maxlen)?.into_iter().flatten().collect();
    let qs: Vec<Path> = paths_by_length(g, v2, maxlen)?.into_iter().flatten().collect();
    let mut out = Vec::new();
    pair_up(&ps, &qs, &mut out);
    out.sort();
    Ok(out)
}

/// A finite sum of distinct vertices, acting as a local unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalUnit {
    vertices: BTreeSet<VertexId>,
}

impl LocalUnit {
    /// `None` for an empty vertex set.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Option<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        (!vertices.is_empty()).then_some(LocalUnit { vertices })
    }

    /// The sum of all sources occurring in `x`; `None` for `x = 0`.
    pub fn covering(x: &AlgebraElement) -> Option<Self> {
        Self::new(x.sources().cloned())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn as_element(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.vertices
                .iter()
                .map(|v| (BigRational::from_integer(1.into()), Monomial::vertex(v.clone()))),
        )
    }
}

/// `t x t`: keeps the terms of `x` whose real and ghost sources both lie in `t`.
pub fn corner_project(t: &LocalUnit, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::from_terms(
        x.terms()
            .filter(|(m, _)| t.contains(m.real().source()) && t.contains(m.ghost_part().source()))
            .map(|(m, c)| (c.clone(), m.clone())),
    )
}
