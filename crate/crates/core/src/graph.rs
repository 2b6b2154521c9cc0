//! Directed graphs with cardinality-annotated edge bundles and virtual tails.
//!
//! A [`Graph`] stores a finite set of declared vertices and a finite set of
//! edge bundles, each bundle standing for `multiplicity` parallel edges. Tails
//! added by the transforms are kept as [`TailDescriptor`]s; the infinitely
//! many tail vertices and edges they describe are produced on demand and never
//! stored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cardinality::Cardinality;
use crate::error::GraphError;
use crate::order::EdgeOrderPolicy;

/// Largest prefix of an uncountable edge set that may be sampled.
pub const UNCOUNTABLE_SAMPLE_BOUND: usize = 4096;

const TAIL_SEPARATOR: char = '#';

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Vertex name. Declared vertices use `[A-Za-z0-9_]+`; tail vertices are
/// generated as `<prefix>#<j>` and so never collide with declared ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(VertexId(name))
        } else {
            Err(GraphError::InvalidVertexId(name))
        }
    }

    pub(crate) fn tail_vertex(prefix: &str, j: u64) -> Self {
        debug_assert!(j >= 1);
        VertexId(format!("{prefix}{TAIL_SEPARATOR}{j}"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True for vertices generated by a tail.
    pub fn is_generated(&self) -> bool {
        self.0.contains(TAIL_SEPARATOR)
    }

    /// Splits a generated name into `(prefix, j)`.
    fn tail_parts(&self) -> Option<(&str, u64)> {
        let (prefix, j) = self.0.rsplit_once(TAIL_SEPARATOR)?;
        let j: u64 = j.parse().ok()?;
        (j >= 1 && is_identifier(prefix)).then_some((prefix, j))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One edge inside a bundle: the `index`-th parallel copy (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub bundle_id: String,
    pub index: u64,
}

impl EdgeRef {
    pub fn new(bundle_id: impl Into<String>, index: u64) -> Self {
        EdgeRef {
            bundle_id: bundle_id.into(),
            index,
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.bundle_id, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBundle {
    pub bundle_id: String,
    pub source: VertexId,
    pub target: VertexId,
    pub multiplicity: Cardinality,
}

/// An edge reference together with its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeRef,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TailKind {
    Sink,
    Emitter,
}

impl fmt::Display for TailKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TailKind::Sink => "sink",
            TailKind::Emitter => "emitter",
        })
    }
}

/// Symbolic record of a tail `v_0 -> v_1 -> v_2 -> ...` attached at `base`.
///
/// Edge `f_j` (`j >= 1`) runs `v_{j-1} -> v_j` and is addressed as
/// `<prefix>#f[j-1]`. For an emitter tail, `g_j` runs `v_{j-1} -> r(e_j)`
/// and is addressed as `<prefix>#g[j-1]`, where `e_1, e_2, ...` enumerates the
/// original out-edges of `base` under `enumeration`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailDescriptor {
    pub base: VertexId,
    pub kind: TailKind,
    pub enumeration: EdgeOrderPolicy,
    pub tail_vertex_prefix: String,
}

impl TailDescriptor {
    /// `v_j`; `v_0` is the base itself.
    pub fn vertex(&self, j: u64) -> VertexId {
        if j == 0 {
            self.base.clone()
        } else {
            VertexId::tail_vertex(&self.tail_vertex_prefix, j)
        }
    }

    pub fn forward_bundle(&self) -> String {
        format!("{}{TAIL_SEPARATOR}f", self.tail_vertex_prefix)
    }

    pub fn redirect_bundle(&self) -> String {
        format!("{}{TAIL_SEPARATOR}g", self.tail_vertex_prefix)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Regular,
    Sink,
    CountableEmitter,
    UncountableEmitter,
}

impl VertexClass {
    pub fn from_out_cardinality(card: Option<Cardinality>) -> Self {
        match card {
            None => VertexClass::Sink,
            Some(Cardinality::Finite(_)) => VertexClass::Regular,
            Some(Cardinality::CountablyInfinite) => VertexClass::CountableEmitter,
            Some(Cardinality::Uncountable) => VertexClass::UncountableEmitter,
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexClass::Regular => "regular",
            VertexClass::Sink => "sink",
            VertexClass::CountableEmitter => "countable-emitter",
            VertexClass::UncountableEmitter => "uncountable-emitter",
        })
    }
}

/// Outcome of [`Graph::is_row_finite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowFiniteCheck {
    pub row_finite: bool,
    /// A vertex emitting infinitely many edges, when there is one.
    pub witness: Option<VertexId>,
}

/// Where a vertex sits relative to a tail.
enum Position<'a> {
    Plain,
    OnTail(&'a TailDescriptor, u64),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    bundles: BTreeMap<String, EdgeBundle>,
    out: BTreeMap<VertexId, BTreeSet<String>>,
    tails: BTreeMap<VertexId, TailDescriptor>,
    frontier: BTreeSet<VertexId>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex; fails if it is already declared.
    pub fn add_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if self.vertices.contains(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.ensure_vertex(v);
        Ok(())
    }

    /// Declares a vertex unless it already exists.
    pub fn ensure_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Adds a bundle, declaring its endpoints if needed.
    pub fn add_bundle(
        &mut self,
        bundle_id: impl Into<String>,
        source: VertexId,
        target: VertexId,
        multiplicity: Cardinality,
    ) -> Result<(), GraphError> {
        let bundle_id = bundle_id.into();
        if !is_identifier(&bundle_id) {
            return Err(GraphError::InvalidBundleId(bundle_id));
        }
        self.insert_bundle(EdgeBundle {
            bundle_id,
            source,
            target,
            multiplicity,
        })
    }

    /// Bundle insertion without the identifier check; materializations use
    /// generated bundle names.
    pub(crate) fn insert_bundle(&mut self, bundle: EdgeBundle) -> Result<(), GraphError> {
        if self.bundles.contains_key(&bundle.bundle_id) {
            return Err(GraphError::DuplicateBundle(bundle.bundle_id));
        }
        self.vertices.insert(bundle.source.clone());
        self.vertices.insert(bundle.target.clone());
        self.out
            .entry(bundle.source.clone())
            .or_default()
            .insert(bundle.bundle_id.clone());
        self.bundles.insert(bundle.bundle_id.clone(), bundle);
        Ok(())
    }

    pub(crate) fn insert_tail(&mut self, tail: TailDescriptor) -> Result<(), GraphError> {
        if self.tails.contains_key(&tail.base) {
            return Err(GraphError::AlreadyTailed(tail.base));
        }
        if !is_identifier(&tail.tail_vertex_prefix)
            || self
                .tails
                .values()
                .any(|t| t.tail_vertex_prefix == tail.tail_vertex_prefix)
        {
            return Err(GraphError::TailPrefixInUse(tail.tail_vertex_prefix));
        }
        self.tails.insert(tail.base.clone(), tail);
        Ok(())
    }

    pub(crate) fn mark_frontier(&mut self, v: VertexId) {
        self.frontier.insert(v);
    }

    /// Declared (stored) vertices, sorted.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Stored bundles, sorted by id.
    pub fn bundles(&self) -> impl Iterator<Item = &EdgeBundle> + '_ {
        self.bundles.values()
    }

    pub fn bundle(&self, id: &str) -> Option<&EdgeBundle> {
        self.bundles.get(id)
    }

    pub fn tails(&self) -> impl Iterator<Item = &TailDescriptor> + '_ {
        self.tails.values()
    }

    pub fn tail_at(&self, v: &VertexId) -> Option<&TailDescriptor> {
        self.tails.get(v)
    }

    /// Truncation artifacts of a materialization: the last vertex of each tail.
    pub fn frontier(&self) -> &BTreeSet<VertexId> {
        &self.frontier
    }

    pub fn is_frontier(&self, v: &VertexId) -> bool {
        self.frontier.contains(v)
    }

    /// Stored out-bundles of `v`, ignoring any tail, sorted by id.
    pub fn raw_out_bundles(&self, v: &VertexId) -> Vec<&EdgeBundle> {
        self.out
            .get(v)
            .map(|ids| ids.iter().map(|id| &self.bundles[id]).collect())
            .unwrap_or_default()
    }

    /// No tails and no infinite bundles.
    pub fn is_finite(&self) -> bool {
        self.tails.is_empty() && self.bundles.values().all(|b| b.multiplicity.is_finite())
    }

    pub fn uncountable_bundle(&self) -> Option<&EdgeBundle> {
        self.bundles
            .values()
            .find(|b| b.multiplicity == Cardinality::Uncountable)
    }

    fn tail_by_prefix(&self, prefix: &str) -> Option<&TailDescriptor> {
        self.tails.values().find(|t| t.tail_vertex_prefix == prefix)
    }

    fn position(&self, v: &VertexId) -> Result<Position<'_>, GraphError> {
        if self.vertices.contains(v) {
            return Ok(match self.tails.get(v) {
                Some(t) => Position::OnTail(t, 0),
                None => Position::Plain,
            });
        }
        v.tail_parts()
            .and_then(|(prefix, j)| self.tail_by_prefix(prefix).map(|t| Position::OnTail(t, j)))
            .ok_or_else(|| GraphError::UnknownVertex(v.clone()))
    }

    /// Declared vertex or a vertex on one of the tails.
    pub fn contains(&self, v: &VertexId) -> bool {
        self.position(v).is_ok()
    }

    /// `|s^{-1}(v)|` over effective out-edges; `None` when `v` emits nothing.
    pub fn out_cardinality(&self, v: &VertexId) -> Result<Option<Cardinality>, GraphError> {
        Ok(match self.position(v)? {
            Position::Plain => {
                Cardinality::sum(self.raw_out_bundles(v).iter().map(|b| b.multiplicity))
            }
            Position::OnTail(t, _) => Cardinality::finite(match t.kind {
                TailKind::Sink => 1,
                TailKind::Emitter => 2,
            }),
        })
    }

    pub fn classify_vertex(&self, v: &VertexId) -> Result<VertexClass, GraphError> {
        self.out_cardinality(v).map(VertexClass::from_out_cardinality)
    }

    /// Effective out-edges of `v` (first `limit` of them, all if `None`).
    ///
    /// Plain vertices enumerate their bundles under the default diagonal
    /// order. Tail vertices emit `f_{j+1}` followed, on emitter tails, by
    /// `g_{j+1}`.
    pub fn out_edges(&self, v: &VertexId, limit: Option<usize>) -> Result<Vec<Edge>, GraphError> {
        let limit = limit.unwrap_or(usize::MAX);
        match self.position(v)? {
            Position::Plain => {
                let bundles = self.raw_out_bundles(v);
                if bundles.iter().any(|b| b.multiplicity == Cardinality::Uncountable)
                    && limit > UNCOUNTABLE_SAMPLE_BOUND
                {
                    return Err(GraphError::NonEnumerable {
                        vertex: v.clone(),
                        requested: limit,
                        bound: UNCOUNTABLE_SAMPLE_BOUND,
                    });
                }
                let refs = EdgeOrderPolicy::default().enumerate(&bundles, limit);
                Ok(refs
                    .into_iter()
                    .map(|id| {
                        let b = &self.bundles[&id.bundle_id];
                        Edge {
                            id,
                            source: b.source.clone(),
                            target: b.target.clone(),
                        }
                    })
                    .collect())
            }
            Position::OnTail(t, j) => {
                let mut edges = vec![self.tail_forward_edge(t, j)];
                if t.kind == TailKind::Emitter {
                    edges.push(self.tail_redirect_edge(t, j)?);
                }
                edges.truncate(limit);
                Ok(edges)
            }
        }
    }

    /// Deterministic prefix of the effective out-edge enumeration of `v`.
    pub fn edges_from(&self, v: &VertexId, limit: usize) -> Result<Vec<EdgeRef>, GraphError> {
        Ok(self
            .out_edges(v, Some(limit))?
            .into_iter()
            .map(|e| e.id)
            .collect())
    }

    /// `f_{j+1}: v_j -> v_{j+1}`.
    fn tail_forward_edge(&self, t: &TailDescriptor, j: u64) -> Edge {
        Edge {
            id: EdgeRef::new(t.forward_bundle(), j),
            source: t.vertex(j),
            target: t.vertex(j + 1),
        }
    }

    /// `g_{j+1}: v_j -> r(e_{j+1})`.
    fn tail_redirect_edge(&self, t: &TailDescriptor, j: u64) -> Result<Edge, GraphError> {
        let e = self.original_edge(t, j)?;
        Ok(Edge {
            id: EdgeRef::new(t.redirect_bundle(), j),
            source: t.vertex(j),
            target: self.bundles[&e.bundle_id].target.clone(),
        })
    }

    /// `e_{j+1}` in the tail's enumeration of the base's stored out-edges.
    fn original_edge(&self, t: &TailDescriptor, j: u64) -> Result<EdgeRef, GraphError> {
        let n = usize::try_from(j + 1).map_err(|_| GraphError::InvalidEdge(format!("g[{j}]")))?;
        let mut prefix = self.original_edges(t, n);
        if prefix.len() < n {
            return Err(GraphError::InvalidEdge(format!("{}[{j}]", t.redirect_bundle())));
        }
        Ok(prefix.pop().expect("nonempty prefix"))
    }

    /// First `n` edges `e_1..e_n` of an emitter tail's enumeration.
    pub(crate) fn original_edges(&self, t: &TailDescriptor, n: usize) -> Vec<EdgeRef> {
        t.enumeration.enumerate(&self.raw_out_bundles(&t.base), n)
    }

    /// Resolves an edge reference against the effective edge set.
    pub fn resolve(&self, e: &EdgeRef) -> Result<Edge, GraphError> {
        let invalid = || GraphError::InvalidEdge(e.to_string());
        if let Some(b) = self.bundles.get(&e.bundle_id) {
            let in_range = match b.multiplicity {
                Cardinality::Finite(n) => e.index < n.get(),
                Cardinality::CountablyInfinite => true,
                Cardinality::Uncountable => e.index < UNCOUNTABLE_SAMPLE_BOUND as u64,
            };
            if !in_range || self.tails.contains_key(&b.source) && self.tails[&b.source].kind == TailKind::Emitter {
                return Err(invalid());
            }
            return Ok(Edge {
                id: e.clone(),
                source: b.source.clone(),
                target: b.target.clone(),
            });
        }
        let (prefix, which) = e.bundle_id.rsplit_once(TAIL_SEPARATOR).ok_or_else(invalid)?;
        let t = self.tail_by_prefix(prefix).ok_or_else(invalid)?;
        match which {
            "f" => Ok(self.tail_forward_edge(t, e.index)),
            "g" if t.kind == TailKind::Emitter => self.tail_redirect_edge(t, e.index),
            _ => Err(invalid()),
        }
    }

    /// Row-finiteness, decided symbolically: tail vertices always emit one or
    /// two edges, so only declared vertices can fail.
    pub fn is_row_finite(&self) -> RowFiniteCheck {
        let witness = self.vertices.iter().find(|v| {
            !matches!(
                self.out_cardinality(v),
                Ok(None) | Ok(Some(Cardinality::Finite(_)))
            )
        });
        RowFiniteCheck {
            row_finite: witness.is_none(),
            witness: witness.cloned(),
        }
    }

    /// Declared vertices of the given class, sorted.
    pub fn vertices_of_class(&self, class: VertexClass) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| self.classify_vertex(v).ok() == Some(class))
            .cloned()
            .collect()
    }

    /// Finite adjacency: total multiplicity per ordered vertex pair.
    pub(crate) fn multiplicity_matrix(&self) -> Result<(Vec<VertexId>, Vec<Vec<u64>>), GraphError> {
        if !self.is_finite() {
            return Err(GraphError::NotFinite);
        }
        let order: Vec<VertexId> = self.vertices.iter().cloned().collect();
        let index: BTreeMap<&VertexId, usize> = order.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut m = vec![vec![0u64; order.len()]; order.len()];
        for b in self.bundles.values() {
            let n = b.multiplicity.finite_count().expect("finite graph");
            m[index[&b.source]][index[&b.target]] += n;
        }
        Ok((order, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn fin(n: u64) -> Cardinality {
        Cardinality::finite(n).unwrap()
    }

    fn rose() -> Graph {
        let mut g = Graph::new();
        g.add_bundle("L", vid("z"), vid("z"), Cardinality::CountablyInfinite)
            .unwrap();
        g
    }

    #[test]
    fn vertex_ids_are_validated() {
        assert!(VertexId::new("a_1").is_ok());
        assert!(VertexId::new("").is_err());
        assert!(VertexId::new("a#1").is_err());
        assert!(VertexId::new("a b").is_err());
    }

    #[test]
    fn classification_examples() {
        let mut g = Graph::new();
        g.add_bundle("b", vid("r"), vid("s"), fin(3)).unwrap();
        g.add_bundle("u", vid("x"), vid("s"), Cardinality::Uncountable)
            .unwrap();
        assert_eq!(g.classify_vertex(&vid("r")).unwrap(), VertexClass::Regular);
        assert_eq!(g.classify_vertex(&vid("s")).unwrap(), VertexClass::Sink);
        assert_eq!(
            g.classify_vertex(&vid("x")).unwrap(),
            VertexClass::UncountableEmitter
        );
        assert_eq!(
            rose().classify_vertex(&vid("z")).unwrap(),
            VertexClass::CountableEmitter
        );
        assert_eq!(
            g.classify_vertex(&vid("nope")),
            Err(GraphError::UnknownVertex(vid("nope")))
        );
    }

    #[test]
    fn out_cardinality_sums() {
        let mut g = Graph::new();
        g.add_bundle("a", vid("v"), vid("w"), fin(2)).unwrap();
        g.add_bundle("b", vid("v"), vid("w"), fin(3)).unwrap();
        g.add_bundle("c", vid("p"), vid("w"), fin(4)).unwrap();
        g.add_bundle("d", vid("p"), vid("w"), Cardinality::CountablyInfinite)
            .unwrap();
        g.add_bundle("e", vid("q"), vid("w"), Cardinality::CountablyInfinite)
            .unwrap();
        g.add_bundle("f", vid("q"), vid("w"), Cardinality::Uncountable)
            .unwrap();
        assert_eq!(g.out_cardinality(&vid("v")).unwrap(), Some(fin(5)));
        assert_eq!(
            g.out_cardinality(&vid("p")).unwrap(),
            Some(Cardinality::CountablyInfinite)
        );
        assert_eq!(
            g.out_cardinality(&vid("q")).unwrap(),
            Some(Cardinality::Uncountable)
        );
        assert_eq!(g.out_cardinality(&vid("w")).unwrap(), None);
    }

    #[test]
    fn edges_from_examples() {
        let mut g = rose();
        g.ensure_vertex(vid("s"));
        assert!(g.edges_from(&vid("s"), 5).unwrap().is_empty());
        assert_eq!(
            g.edges_from(&vid("z"), 3).unwrap(),
            vec![EdgeRef::new("L", 0), EdgeRef::new("L", 1), EdgeRef::new("L", 2)]
        );

        let mut g = Graph::new();
        g.add_bundle("b1", vid("v"), vid("w"), fin(2)).unwrap();
        g.add_bundle("b2", vid("v"), vid("w"), Cardinality::CountablyInfinite)
            .unwrap();
        assert_eq!(
            g.edges_from(&vid("v"), 4).unwrap(),
            vec![
                EdgeRef::new("b1", 0),
                EdgeRef::new("b1", 1),
                EdgeRef::new("b2", 0),
                EdgeRef::new("b2", 1)
            ]
        );
    }

    #[test]
    fn uncountable_sampling_is_bounded() {
        let mut g = Graph::new();
        g.add_bundle("u", vid("x"), vid("y"), Cardinality::Uncountable)
            .unwrap();
        assert_eq!(g.edges_from(&vid("x"), 8).unwrap().len(), 8);
        assert!(matches!(
            g.edges_from(&vid("x"), UNCOUNTABLE_SAMPLE_BOUND + 1),
            Err(GraphError::NonEnumerable { .. })
        ));
    }

    #[test]
    fn row_finiteness() {
        let check = rose().is_row_finite();
        assert!(!check.row_finite);
        assert_eq!(check.witness, Some(vid("z")));

        let mut g = Graph::new();
        g.add_bundle("a", vid("u"), vid("v"), fin(2)).unwrap();
        g.add_bundle("b", vid("v"), vid("w"), fin(1)).unwrap();
        assert_eq!(
            g.is_row_finite(),
            RowFiniteCheck {
                row_finite: true,
                witness: None
            }
        );
    }

    #[test]
    fn resolving_unknown_edges_fails() {
        let g = rose();
        assert!(g.resolve(&EdgeRef::new("L", 10_000)).is_ok());
        assert!(g.resolve(&EdgeRef::new("M", 0)).is_err());
        assert!(g.resolve(&EdgeRef::new("z#f", 0)).is_err());
    }

    fn arb_card() -> impl Strategy<Value = Cardinality> {
        prop_oneof![
            (1u64..5).prop_map(fin),
            Just(Cardinality::CountablyInfinite),
            Just(Cardinality::Uncountable),
        ]
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..5, prop::collection::vec((0usize..5, 0usize..5, arb_card()), 0..7)).prop_map(
            |(n, edges)| {
                let mut g = Graph::new();
                for i in 0..n {
                    g.ensure_vertex(vid(&format!("v{i}")));
                }
                for (k, (s, t, c)) in edges.into_iter().enumerate() {
                    g.add_bundle(
                        format!("b{k}"),
                        vid(&format!("v{}", s % n)),
                        vid(&format!("v{}", t % n)),
                        c,
                    )
                    .unwrap();
                }
                g
            },
        )
    }

    proptest! {
        #[test]
        fn classification_agrees_with_out_cardinality(g in arb_graph()) {
            for v in g.vertices() {
                let class = g.classify_vertex(v).unwrap();
                let card = g.out_cardinality(v).unwrap();
                let expected = match card {
                    None => VertexClass::Sink,
                    Some(Cardinality::Finite(_)) => VertexClass::Regular,
                    Some(Cardinality::CountablyInfinite) => VertexClass::CountableEmitter,
                    Some(Cardinality::Uncountable) => VertexClass::UncountableEmitter,
                };
                prop_assert_eq!(class, expected);
            }
        }

        #[test]
        fn edges_from_prefixes(g in arb_graph(), k in 0usize..12) {
            for v in g.vertices() {
                let a = g.edges_from(v, k).unwrap();
                let b = g.edges_from(v, k + 1).unwrap();
                prop_assert_eq!(&a, &g.edges_from(v, k).unwrap());
                prop_assert!(b.starts_with(&a));
                for e in &b {
                    prop_assert_eq!(&g.resolve(e).unwrap().source, v);
                }
            }
        }
    }
}
