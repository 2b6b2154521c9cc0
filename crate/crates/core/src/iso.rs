//! Exhaustive isomorphism test for small finite multigraphs.

use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_ISO_VERTICES: usize = 10;

/// True iff some vertex bijection carries the multiplicity of every ordered
/// pair `(u, w)` of `g1` onto the same multiplicity in `g2`.
///
/// Backtracking over permutations, pruned by per-vertex degree signatures.
pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > MAX_ISO_VERTICES {
            return Err(GraphError::TooLarge(g.vertex_count()));
        }
    }
    let (_, a) = g1.multiplicity_matrix()?;
    let (_, b) = g2.multiplicity_matrix()?;
    if a.len() != b.len() {
        return Ok(false);
    }
    let sa: Vec<_> = (0..a.len()).map(|i| signature(&a, i)).collect();
    let sb: Vec<_> = (0..b.len()).map(|i| signature(&b, i)).collect();
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }
    let mut mapping = Vec::with_capacity(a.len());
    let mut used = vec![false; b.len()];
    Ok(extend(&a, &b, &sa, &sb, &mut mapping, &mut used))
}

/// (out-degree, in-degree, loops)
fn signature(m: &[Vec<u64>], i: usize) -> (u64, u64, u64) {
    let out = m[i].iter().sum();
    let inn = m.iter().map(|row| row[i]).sum();
    (out, inn, m[i][i])
}

fn extend(
    a: &[Vec<u64>],
    b: &[Vec<u64>],
    sa: &[(u64, u64, u64)],
    sb: &[(u64, u64, u64)],
    mapping: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = mapping.len();
    if i == a.len() {
        return true;
    }
    for j in 0..b.len() {
        if used[j] || sa[i] != sb[j] {
            continue;
        }
        let consistent = mapping
            .iter()
            .enumerate()
            .all(|(k, &pk)| a[i][k] == b[j][pk] && a[k][i] == b[pk][j]);
        if !consistent {
            continue;
        }
        used[j] = true;
        mapping.push(j);
        if extend(a, b, sa, sb, mapping, used) {
            return true;
        }
        mapping.pop();
        used[j] = false;
    }
    false
}
