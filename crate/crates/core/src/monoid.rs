//! The graph monoid `M_F` of a finite row-finite graph.
//!
//! `M_F` is the free commutative monoid on generators `a_v` modulo
//! `a_v = Σ_{e ∈ s^{-1}(v)} a_{r(e)}` for every regular vertex `v`. Equality
//! of two elements is searched for by a bounded breadth-first search over
//! single expansion / contraction steps; a find is certified, a miss is only
//! reported as unknown at the searched depth.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::MonoidError;
use crate::graph::{Graph, VertexId};

/// Search aborts once this many distinct vectors have been visited.
pub const MAX_VISITED: usize = 100_000;

/// Finitely supported vector of positive coefficients over vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonoidVector(BTreeMap<VertexId, u64>);

impl MonoidVector {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(v: VertexId) -> Self {
        MonoidVector(BTreeMap::from([(v, 1)]))
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, v: &VertexId) -> u64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.0.keys()
    }

    pub fn add_generator(&mut self, v: VertexId, n: u64) {
        if n > 0 {
            *self.0.entry(v).or_insert(0) += n;
        }
    }

    pub fn add(&self, other: &MonoidVector) -> MonoidVector {
        let mut out = self.clone();
        for (v, n) in &other.0 {
            out.add_generator(v.clone(), *n);
        }
        out
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &MonoidVector) -> Option<MonoidVector> {
        let mut out = self.clone();
        for (v, n) in &other.0 {
            let have = out.0.get_mut(v)?;
            match (*have).cmp(n) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => {
                    out.0.remove(v);
                }
                std::cmp::Ordering::Greater => *have -= n,
            }
        }
        Some(out)
    }
}

impl fmt::Display for MonoidVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(v, n)| format!("{v}:{n}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `v:2,w:1`; a bare `v` means `v:1`.
impl FromStr for MonoidVector {
    type Err = MonoidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = MonoidVector::identity();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (name, count) = item.split_once(':').unwrap_or((item, "1"));
            let v = VertexId::new(name.trim())
                .map_err(|_| MonoidError::InvalidVector(format!("bad vertex in `{item}`")))?;
            let n: u64 = count
                .trim()
                .parse()
                .map_err(|_| MonoidError::InvalidVector(format!("bad coefficient in `{item}`")))?;
            if n == 0 {
                return Err(MonoidError::InvalidVector(format!("zero coefficient in `{item}`")));
            }
            out.add_generator(v, n);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `a_v` replaced by `Σ a_{r(e)}`.
    Expand,
    /// `Σ a_{r(e)}` replaced by `a_v`.
    Contract,
}

impl StepKind {
    fn inverse(self) -> Self {
        match self {
            StepKind::Expand => StepKind::Contract,
            StepKind::Contract => StepKind::Expand,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub kind: StepKind,
    pub vertex: VertexId,
    pub result: MonoidVector,
}

/// A chain of rewrite steps from `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub start: MonoidVector,
    pub steps: Vec<RewriteStep>,
}

impl Certificate {
    /// Re-applies every step, checking each is a legal relation instance in
    /// `g`, and returns the final vector.
    pub fn replay(&self, g: &Graph) -> Result<MonoidVector, MonoidError> {
        let rel = Relations::of(g)?;
        let mut at = self.start.clone();
        for step in &self.steps {
            let next = rel.apply(&at, step.kind, &step.vertex).ok_or_else(|| {
                MonoidError::InvalidVector(format!(
                    "illegal {:?} at `{}` from {at}",
                    step.kind, step.vertex
                ))
            })?;
            if next != step.result {
                return Err(MonoidError::InvalidVector(format!(
                    "step at `{}` yields {next}, certificate claims {}",
                    step.vertex, step.result
                )));
            }
            at = next;
        }
        Ok(at)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityVerdict {
    Equal(Certificate),
    UnknownAtDepth(usize),
}

impl EqualityVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqualityVerdict::Equal(_))
    }
}

/// `a_v ↦ Σ a_{r(e)}` for every regular vertex.
struct Relations(BTreeMap<VertexId, MonoidVector>);

impl Relations {
    fn of(g: &Graph) -> Result<Self, MonoidError> {
        if !g.is_finite() {
            return Err(MonoidError::NotFinite);
        }
        let mut rhs: BTreeMap<VertexId, MonoidVector> = BTreeMap::new();
        for b in g.bundles() {
            let n = b.multiplicity.finite_count().expect("finite graph");
            rhs.entry(b.source.clone())
                .or_default()
                .add_generator(b.target.clone(), n);
        }
        Ok(Relations(rhs))
    }

    fn apply(&self, x: &MonoidVector, kind: StepKind, v: &VertexId) -> Option<MonoidVector> {
        let rhs = self.0.get(v)?;
        let lhs = MonoidVector::generator(v.clone());
        let (from, to) = match kind {
            StepKind::Expand => (&lhs, rhs),
            StepKind::Contract => (rhs, &lhs),
        };
        x.checked_sub(from).map(|rest| rest.add(to))
    }

    fn expansions(&self, x: &MonoidVector) -> Vec<(VertexId, MonoidVector)> {
        x.support()
            .filter_map(|v| self.apply(x, StepKind::Expand, v).map(|y| (v.clone(), y)))
            .collect()
    }

    fn neighbours(&self, x: &MonoidVector) -> Vec<(StepKind, VertexId, MonoidVector)> {
        let mut out: Vec<_> = self
            .expansions(x)
            .into_iter()
            .map(|(v, y)| (StepKind::Expand, v, y))
            .collect();
        for v in self.0.keys() {
            if let Some(y) = self.apply(x, StepKind::Contract, v) {
                out.push((StepKind::Contract, v.clone(), y));
            }
        }
        out
    }
}

/// Every vector obtained from `x` by expanding one occurrence of a regular
/// generator. Sinks admit no expansion.
pub fn expansions(g: &Graph, x: &MonoidVector) -> Result<Vec<MonoidVector>, MonoidError> {
    let rel = Relations::of(g)?;
    let mut out: Vec<MonoidVector> = rel.expansions(x).into_iter().map(|(_, y)| y).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

type Tree = HashMap<MonoidVector, Option<(MonoidVector, StepKind, VertexId)>>;

/// Bidirectional breadth-first search for a chain of at most `depth`
/// expansion or contraction steps joining `x` and `y`.
pub fn equal_up_to_depth(
    g: &Graph,
    x: &MonoidVector,
    y: &MonoidVector,
    depth: usize,
) -> Result<EqualityVerdict, MonoidError> {
    let rel = Relations::of(g)?;
    if x == y {
        return Ok(EqualityVerdict::Equal(Certificate {
            start: x.clone(),
            steps: Vec::new(),
        }));
    }
    let mut trees: [Tree; 2] = [HashMap::new(), HashMap::new()];
    trees[0].insert(x.clone(), None);
    trees[1].insert(y.clone(), None);
    let mut frontiers = [vec![x.clone()], vec![y.clone()]];
    let mut spent = 0;
    while spent < depth {
        let side = usize::from(frontiers[1].len() < frontiers[0].len());
        if frontiers[side].is_empty() {
            break;
        }
        let mut next = Vec::new();
        for u in std::mem::take(&mut frontiers[side]) {
            for (kind, v, w) in rel.neighbours(&u) {
                if trees[side].contains_key(&w) {
                    continue;
                }
                trees[side].insert(w.clone(), Some((u.clone(), kind, v)));
                if trees[1 - side].contains_key(&w) {
                    return Ok(EqualityVerdict::Equal(join(&trees, x, &w)));
                }
                if trees[0].len() + trees[1].len() > MAX_VISITED {
                    return Ok(EqualityVerdict::UnknownAtDepth(depth));
                }
                next.push(w);
            }
        }
        frontiers[side] = next;
        spent += 1;
    }
    Ok(EqualityVerdict::UnknownAtDepth(depth))
}

/// Chain `x -> meet` from the first tree, then `meet -> y` by inverting the
/// second tree's steps.
fn join(trees: &[Tree; 2], x: &MonoidVector, meet: &MonoidVector) -> Certificate {
    let mut forward = Vec::new();
    let mut at = meet.clone();
    while let Some(Some((parent, kind, v))) = trees[0].get(&at) {
        forward.push(RewriteStep {
            kind: *kind,
            vertex: v.clone(),
            result: at.clone(),
        });
        at = parent.clone();
    }
    forward.reverse();
    let mut at = meet.clone();
    while let Some(Some((parent, kind, v))) = trees[1].get(&at) {
        forward.push(RewriteStep {
            kind: kind.inverse(),
            vertex: v.clone(),
            result: parent.clone(),
        });
        at = parent.clone();
    }
    Certificate {
        start: x.clone(),
        steps: forward,
    }
}

/// On `m = materialize(add_tail_at_sink(g, base), depth)`, proves
/// `a_base = a_{base#j}` for `1 <= j <= depth` within `depth` steps each.
///
/// Fails with [`MonoidError::MalformedTail`] if `m` does not carry a sink
/// tail of exactly that length at `base`.
pub fn tail_collapse_check(m: &Graph, base: &VertexId, depth: usize) -> Result<bool, MonoidError> {
    if !m.is_finite() {
        return Err(MonoidError::NotFinite);
    }
    let malformed = |msg: String| MonoidError::MalformedTail(msg);
    let step = |j: usize| -> VertexId {
        if j == 0 {
            base.clone()
        } else {
            VertexId::tail_vertex(base.as_str(), j as u64)
        }
    };
    if !m.contains(base) {
        return Err(malformed(format!("no vertex `{base}`")));
    }
    for j in 0..depth {
        let (from, to) = (step(j), step(j + 1));
        let out = m.raw_out_bundles(&from);
        let ok = out.len() == 1
            && out[0].target == to
            && out[0].multiplicity.finite_count() == Some(1);
        if !ok || !m.vertices().any(|v| v == &to) {
            return Err(malformed(format!("expected a single edge `{from}` -> `{to}`")));
        }
    }
    let last = step(depth);
    if !m.raw_out_bundles(&last).is_empty() || !m.is_frontier(&last) {
        return Err(malformed(format!("`{last}` is not the frontier of the tail")));
    }

    let a_base = MonoidVector::generator(base.clone());
    for j in 1..=depth {
        let target = MonoidVector::generator(step(j));
        match equal_up_to_depth(m, &a_base, &target, depth)? {
            EqualityVerdict::Equal(cert) if cert.replay(m)? == target => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::Cardinality;
    use std::collections::BTreeSet;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn vec_of(s: &str) -> MonoidVector {
        s.parse().unwrap()
    }

    fn graph(edges: &[(&str, &str, u64)]) -> Graph {
        let mut g = Graph::new();
        for (k, (s, t, n)) in edges.iter().enumerate() {
            g.add_bundle(format!("e{k}"), vid(s), vid(t), Cardinality::finite(*n).unwrap())
                .unwrap();
        }
        g
    }

    /// Plain one-sided BFS returning every vector within `depth` undirected
    /// steps, enumerating relation instances directly from the bundles.
    fn reachable(g: &Graph, x: &MonoidVector, depth: usize) -> BTreeSet<MonoidVector> {
        let mut rels: Vec<(VertexId, MonoidVector)> = Vec::new();
        for v in g.vertices() {
            let mut rhs = MonoidVector::identity();
            for b in g.raw_out_bundles(v) {
                rhs.add_generator(b.target.clone(), b.multiplicity.finite_count().unwrap());
            }
            if !rhs.is_identity() {
                rels.push((v.clone(), rhs));
            }
        }
        let mut seen = BTreeSet::from([x.clone()]);
        let mut layer = vec![x.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for u in &layer {
                for (v, rhs) in &rels {
                    let lhs = MonoidVector::generator(v.clone());
                    for (from, to) in [(&lhs, rhs), (rhs, &lhs)] {
                        if let Some(rest) = u.checked_sub(from) {
                            let w = rest.add(to);
                            if seen.insert(w.clone()) {
                                next.push(w);
                            }
                        }
                    }
                }
            }
            layer = next;
        }
        seen
    }

    #[test]
    fn vector_parsing() {
        let x = vec_of("v:2, w");
        assert_eq!(x.coefficient(&vid("v")), 2);
        assert_eq!(x.coefficient(&vid("w")), 1);
        assert_eq!(x.to_string(), "v:2,w:1");
        assert!("v:0".parse::<MonoidVector>().is_err());
        assert!("v#1:2".parse::<MonoidVector>().is_err());
    }

    #[test]
    fn expansion_examples() {
        let g = graph(&[("v", "w", 1)]);
        assert_eq!(expansions(&g, &vec_of("v")).unwrap(), vec![vec_of("w")]);
        assert!(expansions(&g, &vec_of("w")).unwrap().is_empty());
        let looped = graph(&[("v", "v", 1)]);
        assert_eq!(expansions(&looped, &vec_of("v")).unwrap(), vec![vec_of("v")]);
        let split = graph(&[("v", "w1", 1), ("v", "w2", 1)]);
        assert_eq!(
            expansions(&split, &vec_of("v:2")).unwrap(),
            vec![vec_of("v:1,w1:1,w2:1")]
        );
        let mut inf = Graph::new();
        inf.add_bundle("L", vid("z"), vid("z"), Cardinality::CountablyInfinite)
            .unwrap();
        assert_eq!(expansions(&inf, &vec_of("z")), Err(MonoidError::NotFinite));
    }

    #[test]
    fn equality_examples() {
        let g = graph(&[("v", "w", 1)]);
        let verdict = equal_up_to_depth(&g, &vec_of("v"), &vec_of("w"), 1).unwrap();
        let EqualityVerdict::Equal(cert) = verdict else {
            panic!("expected equality");
        };
        assert_eq!(cert.steps.len(), 1);
        assert_eq!(cert.replay(&g).unwrap(), vec_of("w"));
        assert!(equal_up_to_depth(&g, &vec_of("v"), &vec_of("v"), 0)
            .unwrap()
            .is_equal());

        let split = graph(&[("v", "w1", 1), ("v", "w2", 1)]);
        assert_eq!(
            equal_up_to_depth(&split, &vec_of("v"), &vec_of("w1"), 5).unwrap(),
            EqualityVerdict::UnknownAtDepth(5)
        );
        assert!(!reachable(&split, &vec_of("v"), 5).contains(&vec_of("w1")));
    }

    #[test]
    fn contraction_chains_are_found() {
        // a_u -> a_v + a_w -> a_v + a_x (w -> x), then needs contraction at y
        let g = graph(&[("u", "v", 1), ("u", "w", 1), ("w", "x", 1), ("y", "v", 1), ("y", "x", 1)]);
        let EqualityVerdict::Equal(cert) =
            equal_up_to_depth(&g, &vec_of("u"), &vec_of("y"), 3).unwrap()
        else {
            panic!("u ~ y within three steps");
        };
        assert_eq!(cert.replay(&g).unwrap(), vec_of("y"));
        assert!(cert.steps.iter().any(|s| s.kind == StepKind::Contract));
        assert!(!equal_up_to_depth(&g, &vec_of("u"), &vec_of("y"), 2)
            .unwrap()
            .is_equal());
    }

    #[test]
    fn forged_certificates_fail_replay() {
        let g = graph(&[("v", "w", 1)]);
        let cert = Certificate {
            start: vec_of("w"),
            steps: vec![RewriteStep {
                kind: StepKind::Expand,
                vertex: vid("w"),
                result: vec_of("v"),
            }],
        };
        assert!(cert.replay(&g).is_err());
    }

    #[test]
    fn tail_collapse() {
        use crate::transform::{add_tail_at_sink, materialize};
        let g = graph(&[("u", "s", 2)]);
        let tailed = add_tail_at_sink(&g, &vid("s")).unwrap();
        for d in 1..=4 {
            let m = materialize(&tailed, d as u64).unwrap();
            assert!(tail_collapse_check(&m, &vid("s"), d).unwrap());
        }
        let m = materialize(&tailed, 3).unwrap();
        assert!(matches!(
            tail_collapse_check(&m, &vid("u"), 3),
            Err(MonoidError::MalformedTail(_))
        ));
        assert!(matches!(
            tail_collapse_check(&m, &vid("s"), 2),
            Err(MonoidError::MalformedTail(_))
        ));
    }

    #[test]
    fn bfs_agrees_with_oracle() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(2..=4);
            let mut edges = Vec::new();
            for k in 0..rng.gen_range(1..5) {
                let s = rng.gen_range(0..n);
                let t = rng.gen_range(0..n);
                edges.push((format!("v{s}"), format!("v{t}"), rng.gen_range(1..3), k));
            }
            let mut g = Graph::new();
            for i in 0..n {
                g.ensure_vertex(vid(&format!("v{i}")));
            }
            for (s, t, m, k) in &edges {
                g.add_bundle(format!("e{k}"), vid(s), vid(t), Cardinality::finite(*m).unwrap())
                    .unwrap();
            }
            let x = MonoidVector::generator(vid("v0"));
            let y = MonoidVector::generator(vid(&format!("v{}", n - 1)));
            for depth in 0..4 {
                let oracle = reachable(&g, &x, depth).contains(&y);
                let verdict = equal_up_to_depth(&g, &x, &y, depth).unwrap();
                assert_eq!(verdict.is_equal(), oracle);
                if let EqualityVerdict::Equal(cert) = verdict {
                    assert!(cert.steps.len() <= depth);
                    assert_eq!(cert.replay(&g).unwrap(), y);
                }
            }
        }
    }
}
