//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles here only look at bundles and multiplicities; they never call
//! into the classification, enumeration or rewriting code they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::Rng;
use rowfinite::{Cardinality, Graph, VertexId};

pub fn vid(s: &str) -> VertexId {
    VertexId::new(s).unwrap()
}

pub fn fin(n: u64) -> Cardinality {
    Cardinality::finite(n).unwrap()
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Random graph on `v0..v{n-1}` with up to `max_bundles` bundles whose
/// multiplicities come from `mult`.
pub fn random_graph(
    rng: &mut StdRng,
    max_vertices: usize,
    max_bundles: usize,
    mut mult: impl FnMut(&mut StdRng) -> Cardinality,
) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(vid(&format!("v{i}"))).unwrap();
    }
    for k in 0..rng.gen_range(0..=max_bundles) {
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        let m = mult(rng);
        g.add_bundle(format!("b{k}"), vid(&format!("v{s}")), vid(&format!("v{t}")), m)
            .unwrap();
    }
    g
}

pub fn finite_mult(max: u64) -> impl FnMut(&mut StdRng) -> Cardinality {
    move |rng| fin(rng.gen_range(1..=max))
}

/// Multiplicity from {1, 2, 3, 4, omega, uncountable}, each infinite option
/// with the given probability.
pub fn mixed_mult(p_omega: f64, p_uncountable: f64) -> impl FnMut(&mut StdRng) -> Cardinality {
    move |rng| {
        let x: f64 = rng.gen();
        if x < p_uncountable {
            Cardinality::Uncountable
        } else if x < p_uncountable + p_omega {
            Cardinality::CountablyInfinite
        } else {
            fin(rng.gen_range(1..=4))
        }
    }
}

pub fn has_uncountable_bundle(g: &Graph) -> bool {
    g.bundles().any(|b| b.multiplicity == Cardinality::Uncountable)
}

/// Number of edges each vertex emits in a finite graph.
pub fn out_degrees(g: &Graph) -> BTreeMap<VertexId, u64> {
    let mut d: BTreeMap<VertexId, u64> = g.vertices().map(|v| (v.clone(), 0)).collect();
    for b in g.bundles() {
        *d.get_mut(&b.source).unwrap() += b.multiplicity.finite_count().expect("finite graph");
    }
    d
}

/// Adjacency matrix of a finite graph, indexed by sorted vertex order.
pub fn adjacency(g: &Graph) -> (Vec<VertexId>, Vec<Vec<u128>>) {
    let vs: Vec<VertexId> = g.vertices().cloned().collect();
    let idx = |v: &VertexId| vs.iter().position(|w| w == v).unwrap();
    let mut a = vec![vec![0u128; vs.len()]; vs.len()];
    for b in g.bundles() {
        a[idx(&b.source)][idx(&b.target)] += u128::from(b.multiplicity.finite_count().unwrap());
    }
    (vs, a)
}

fn mat_mul(x: &[Vec<u128>], y: &[Vec<u128>]) -> Vec<Vec<u128>> {
    let n = x.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if x[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += x[i][k] * y[k][j];
            }
        }
    }
    out
}

/// `Σ_{k <= maxlen} Σ_r A^k[v][r] A^k[v2][r]`: pairs of equal-length paths
/// from `v` and `v2` ending at a common vertex.
pub fn corner_count_oracle(g: &Graph, v: &VertexId, v2: &VertexId, maxlen: usize) -> u128 {
    let (vs, a) = adjacency(g);
    let n = vs.len();
    let (i, j) = (
        vs.iter().position(|w| w == v).unwrap(),
        vs.iter().position(|w| w == v2).unwrap(),
    );
    let mut power: Vec<Vec<u128>> = (0..n)
        .map(|r| (0..n).map(|c| u128::from(r == c)).collect())
        .collect();
    let mut total = 0;
    for k in 0..=maxlen {
        if k > 0 {
            power = mat_mul(&power, &a);
        }
        total += (0..n).map(|r| power[i][r] * power[j][r]).sum::<u128>();
    }
    total
}

/// Same count with `|p|` and `|q|` bounded independently.
pub fn corner_span_oracle(g: &Graph, v: &VertexId, v2: &VertexId, maxlen: usize) -> u128 {
    let (vs, a) = adjacency(g);
    let n = vs.len();
    let (i, j) = (
        vs.iter().position(|w| w == v).unwrap(),
        vs.iter().position(|w| w == v2).unwrap(),
    );
    let mut reach_v = vec![0u128; n];
    let mut reach_v2 = vec![0u128; n];
    let mut power: Vec<Vec<u128>> = (0..n)
        .map(|r| (0..n).map(|c| u128::from(r == c)).collect())
        .collect();
    for k in 0..=maxlen {
        if k > 0 {
            power = mat_mul(&power, &a);
        }
        for r in 0..n {
            reach_v[r] += power[i][r];
            reach_v2[r] += power[j][r];
        }
    }
    (0..n).map(|r| reach_v[r] * reach_v2[r]).sum()
}

pub type Vector = BTreeMap<VertexId, u64>;

pub fn unit(v: &VertexId) -> Vector {
    BTreeMap::from([(v.clone(), 1)])
}

/// Every element reachable from `start` by applying the defining relations
/// `a_v = Σ mult · a_target` (regular `v`) in either direction, with no depth
/// bound. `None` if more than `cap` elements turn up.
pub fn monoid_class(g: &Graph, start: &Vector, cap: usize) -> Option<BTreeSet<Vector>> {
    let mut rel: BTreeMap<VertexId, Vector> = BTreeMap::new();
    for b in g.bundles() {
        let n = b.multiplicity.finite_count().expect("finite graph");
        *rel.entry(b.source.clone())
            .or_default()
            .entry(b.target.clone())
            .or_default() += n;
    }
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        let mut next = Vec::new();
        for (v, rhs) in &rel {
            if x.get(v).copied().unwrap_or(0) > 0 {
                let mut y = x.clone();
                remove(&mut y, v, 1);
                for (t, n) in rhs {
                    *y.entry(t.clone()).or_default() += n;
                }
                next.push(y);
            }
            if rhs.iter().all(|(t, n)| x.get(t).copied().unwrap_or(0) >= *n) {
                let mut y = x.clone();
                for (t, n) in rhs {
                    remove(&mut y, t, *n);
                }
                *y.entry(v.clone()).or_default() += 1;
                next.push(y);
            }
        }
        for y in next {
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

fn remove(x: &mut Vector, v: &VertexId, n: u64) {
    let c = x.get_mut(v).unwrap();
    *c -= n;
    if *c == 0 {
        x.remove(v);
    }
}
