//! Edge enumeration orders for `s^{-1}(v)`.
//!
//! An emitter tail needs the out-edges of its base listed as `e_1, e_2, ...`.
//! Different listings can produce non-isomorphic tails, so the listing is a
//! pluggable strategy: each order implements [`EdgeOrder`], and a
//! [`PolicyRegistry`] maps names (as given on the command line) to
//! constructors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::cardinality::Cardinality;
use crate::error::GraphError;
use crate::graph::{EdgeBundle, EdgeRef, VertexId};

/// A rule listing the edges of a vertex's out-bundles.
///
/// Implementations receive the out-bundles sorted by id. `enumerate` must be
/// prefix-stable: the result for `limit` is a prefix of the result for
/// `limit + 1`. A policy that is meaningless for a vertex reports it through
/// `check`.
pub trait EdgeOrder: fmt::Debug + Send + Sync {
    /// Registry name of the strategy.
    fn name(&self) -> &'static str;

    /// Registry spelling of this instance, `name[:args]`.
    fn describe(&self) -> String;

    fn check(&self, vertex: &VertexId, bundles: &[&EdgeBundle]) -> Result<(), GraphError>;

    fn enumerate(&self, bundles: &[&EdgeBundle], limit: usize) -> Vec<EdgeRef>;
}

/// Shared handle to an [`EdgeOrder`]; compares by its registry spelling.
#[derive(Clone)]
pub struct EdgeOrderPolicy(Arc<dyn EdgeOrder>);

impl EdgeOrderPolicy {
    pub fn new(order: impl EdgeOrder + 'static) -> Self {
        EdgeOrderPolicy(Arc::new(order))
    }

    pub fn default_diagonal() -> Self {
        Self::new(DefaultDiagonal)
    }

    pub fn bundle_concat<S: Into<String>>(order: impl IntoIterator<Item = S>) -> Self {
        Self::new(BundleConcat {
            order: order.into_iter().map(Into::into).collect(),
        })
    }

    pub fn explicit(prefix: impl IntoIterator<Item = EdgeRef>) -> Self {
        Self::new(Explicit {
            prefix: prefix.into_iter().collect(),
        })
    }

    pub fn name(&self) -> &'static str {
        self.0.name()
    }

    pub fn describe(&self) -> String {
        self.0.describe()
    }

    pub fn check(&self, vertex: &VertexId, bundles: &[&EdgeBundle]) -> Result<(), GraphError> {
        self.0.check(vertex, bundles)
    }

    pub fn enumerate(&self, bundles: &[&EdgeBundle], limit: usize) -> Vec<EdgeRef> {
        self.0.enumerate(bundles, limit)
    }
}

impl Default for EdgeOrderPolicy {
    fn default() -> Self {
        Self::default_diagonal()
    }
}

impl fmt::Debug for EdgeOrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeOrderPolicy({})", self.describe())
    }
}

impl fmt::Display for EdgeOrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl PartialEq for EdgeOrderPolicy {
    fn eq(&self, other: &Self) -> bool {
        self.describe() == other.describe()
    }
}

impl Eq for EdgeOrderPolicy {}

/// Finite bundles first (each in full, by bundle id), then round-robin over
/// the infinite bundles by increasing index.
fn diagonal(bundles: &[&EdgeBundle], limit: usize, skip: &BTreeSet<EdgeRef>) -> Vec<EdgeRef> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for b in bundles {
        if let Cardinality::Finite(n) = b.multiplicity {
            for i in 0..n.get() {
                let e = EdgeRef::new(b.bundle_id.clone(), i);
                if !skip.contains(&e) {
                    out.push(e);
                    if out.len() == limit {
                        return out;
                    }
                }
            }
        }
    }
    let infinite: Vec<&str> = bundles
        .iter()
        .filter(|b| !b.multiplicity.is_finite())
        .map(|b| b.bundle_id.as_str())
        .collect();
    if infinite.is_empty() {
        return out;
    }
    let mut index = 0u64;
    loop {
        for id in &infinite {
            let e = EdgeRef::new(*id, index);
            if !skip.contains(&e) {
                out.push(e);
                if out.len() == limit {
                    return out;
                }
            }
        }
        index += 1;
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultDiagonal;

impl EdgeOrder for DefaultDiagonal {
    fn name(&self) -> &'static str {
        "diagonal"
    }

    fn describe(&self) -> String {
        self.name().to_string()
    }

    fn check(&self, _: &VertexId, _: &[&EdgeBundle]) -> Result<(), GraphError> {
        Ok(())
    }

    fn enumerate(&self, bundles: &[&EdgeBundle], limit: usize) -> Vec<EdgeRef> {
        diagonal(bundles, limit, &BTreeSet::new())
    }
}

/// Bundles one after another in the given order. Ids of bundles that do not
/// leave the vertex are ignored, so one order can serve a whole graph.
#[derive(Debug, Clone)]
pub struct BundleConcat {
    pub order: Vec<String>,
}

impl BundleConcat {
    fn restricted<'a>(&self, bundles: &[&'a EdgeBundle]) -> Vec<&'a EdgeBundle> {
        self.order
            .iter()
            .filter_map(|id| bundles.iter().find(|b| &b.bundle_id == id).copied())
            .collect()
    }
}

impl EdgeOrder for BundleConcat {
    fn name(&self) -> &'static str {
        "concat"
    }

    fn describe(&self) -> String {
        format!("concat:{}", self.order.join(","))
    }

    fn check(&self, vertex: &VertexId, bundles: &[&EdgeBundle]) -> Result<(), GraphError> {
        let reject = |reason: String| GraphError::InvalidPolicy {
            vertex: vertex.clone(),
            reason,
        };
        let mut seen = BTreeSet::new();
        for id in &self.order {
            if !seen.insert(id.as_str()) {
                return Err(reject(format!("bundle `{id}` listed twice")));
            }
        }
        for b in bundles {
            if !seen.contains(b.bundle_id.as_str()) {
                return Err(reject(format!("bundle `{}` not listed", b.bundle_id)));
            }
        }
        let ordered = self.restricted(bundles);
        if let Some(pos) = ordered.iter().position(|b| !b.multiplicity.is_finite()) {
            if pos + 1 != ordered.len() {
                return Err(reject(format!(
                    "infinite bundle `{}` must come last",
                    ordered[pos].bundle_id
                )));
            }
        }
        Ok(())
    }

    fn enumerate(&self, bundles: &[&EdgeBundle], limit: usize) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for b in self.restricted(bundles) {
            let mut i = 0u64;
            while out.len() < limit && b.multiplicity.finite_count().map_or(true, |n| i < n) {
                out.push(EdgeRef::new(b.bundle_id.clone(), i));
                i += 1;
            }
        }
        out
    }
}

/// A fixed list of leading edges, then the diagonal order over the rest.
/// Edges belonging to other vertices are ignored.
#[derive(Debug, Clone)]
pub struct Explicit {
    pub prefix: Vec<EdgeRef>,
}

impl Explicit {
    fn own_prefix(&self, bundles: &[&EdgeBundle]) -> Vec<EdgeRef> {
        self.prefix
            .iter()
            .filter(|e| bundles.iter().any(|b| b.bundle_id == e.bundle_id))
            .cloned()
            .collect()
    }
}

impl EdgeOrder for Explicit {
    fn name(&self) -> &'static str {
        "explicit"
    }

    fn describe(&self) -> String {
        let items: Vec<String> = self
            .prefix
            .iter()
            .map(|e| format!("{}/{}", e.bundle_id, e.index))
            .collect();
        format!("explicit:{}", items.join(","))
    }

    fn check(&self, vertex: &VertexId, bundles: &[&EdgeBundle]) -> Result<(), GraphError> {
        let reject = |reason: String| GraphError::InvalidPolicy {
            vertex: vertex.clone(),
            reason,
        };
        let mut seen = BTreeSet::new();
        for e in self.own_prefix(bundles) {
            let b = bundles.iter().find(|b| b.bundle_id == e.bundle_id).unwrap();
            if b.multiplicity.finite_count().is_some_and(|n| e.index >= n) {
                return Err(reject(format!("edge {e} out of range")));
            }
            if !seen.insert(e.clone()) {
                return Err(reject(format!("edge {e} listed twice")));
            }
        }
        Ok(())
    }

    fn enumerate(&self, bundles: &[&EdgeBundle], limit: usize) -> Vec<EdgeRef> {
        let mut out = self.own_prefix(bundles);
        if out.len() >= limit {
            out.truncate(limit);
            return out;
        }
        let skip: BTreeSet<EdgeRef> = out.iter().cloned().collect();
        let rest = diagonal(bundles, limit - out.len(), &skip);
        out.extend(rest);
        out
    }
}

pub type PolicyFactory = fn(&str) -> Result<EdgeOrderPolicy, String>;

/// Name → constructor table for edge orders.
///
/// Policies are written `name` or `name:args`; the built-in ones are
/// `diagonal`, `concat:b1,b2,...` and `explicit:b1/0,b2/3,...`.
pub struct PolicyRegistry {
    factories: BTreeMap<&'static str, PolicyFactory>,
}

impl PolicyRegistry {
    pub fn empty() -> Self {
        PolicyRegistry {
            factories: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register("diagonal", |args| {
            if args.is_empty() {
                Ok(EdgeOrderPolicy::default_diagonal())
            } else {
                Err("diagonal takes no arguments".into())
            }
        });
        r.register("concat", |args| {
            let ids = split_args(args);
            if ids.is_empty() {
                return Err("concat needs at least one bundle id".into());
            }
            Ok(EdgeOrderPolicy::bundle_concat(ids))
        });
        r.register("explicit", |args| {
            split_args(args)
                .into_iter()
                .map(|item| {
                    let (bundle, index) = item
                        .split_once('/')
                        .ok_or_else(|| format!("expected bundle/index, got `{item}`"))?;
                    let index = index
                        .parse::<u64>()
                        .map_err(|_| format!("bad edge index in `{item}`"))?;
                    Ok(EdgeRef::new(bundle, index))
                })
                .collect::<Result<Vec<_>, String>>()
                .map(EdgeOrderPolicy::explicit)
        });
        r
    }

    pub fn register(&mut self, name: &'static str, factory: PolicyFactory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn parse(&self, text: &str) -> Result<EdgeOrderPolicy, GraphError> {
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let factory = self
            .factories
            .get(name.trim())
            .ok_or_else(|| GraphError::UnknownPolicy(text.to_string()))?;
        factory(args.trim()).map_err(|reason| GraphError::UnknownPolicy(format!("{text}: {reason}")))
    }
}

impl Default for PolicyRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

fn split_args(args: &str) -> Vec<String> {
    args.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}
