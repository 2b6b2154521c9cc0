use std::fmt;

use crate::error::AlgebraError;
use crate::graph::{EdgeRef, Graph, VertexId};

/// A directed path, possibly of length zero.
///
/// Construction through [`Path::new`] checks that consecutive edges compose
/// in the graph; `end` caches the range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: VertexId,
    edges: Vec<EdgeRef>,
    end: VertexId,
}

impl Path {
    pub fn new(g: &Graph, start: VertexId, edges: Vec<EdgeRef>) -> Result<Self, AlgebraError> {
        if !g.contains(&start) {
            return Err(AlgebraError::InvalidMonomial(format!("unknown vertex `{start}`")));
        }
        let mut at = start.clone();
        for e in &edges {
            let edge = g
                .resolve(e)
                .map_err(|err| AlgebraError::InvalidMonomial(err.to_string()))?;
            if edge.source != at {
                return Err(AlgebraError::InvalidMonomial(format!(
                    "edge {e} leaves `{}`, not `{at}`",
                    edge.source
                )));
            }
            at = edge.target;
        }
        Ok(Path {
            start,
            edges,
            end: at,
        })
    }

    /// The length-zero path at `v`.
    pub fn vertex(v: VertexId) -> Self {
        Path {
            start: v.clone(),
            edges: Vec::new(),
            end: v,
        }
    }

    /// Re-checks the path against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), AlgebraError> {
        let rebuilt = Path::new(g, self.start.clone(), self.edges.clone())?;
        if rebuilt.end == self.end {
            Ok(())
        } else {
            Err(AlgebraError::InvalidMonomial(format!("path {self} does not end at `{}`", self.end)))
        }
    }

    pub fn source(&self) -> &VertexId {
        &self.start
    }

    pub fn range(&self) -> &VertexId {
        &self.end
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self` followed by `tail`, which must start at `self.range()` and end
    /// at `end`.
    pub(crate) fn extended(&self, tail: &[EdgeRef], end: &VertexId) -> Path {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(tail);
        Path {
            start: self.start.clone(),
            end: if tail.is_empty() { self.end.clone() } else { end.clone() },
            edges,
        }
    }

    /// One step longer, along an edge leaving `range()`.
    pub(crate) fn push(&self, e: EdgeRef, target: VertexId) -> Path {
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            start: self.start.clone(),
            edges,
            end: target,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "{}", self.start);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
