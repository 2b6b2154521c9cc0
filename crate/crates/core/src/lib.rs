//! Row-finite equivalents and desingularizations of directed graphs.
//!
//! Graphs carry edge bundles whose multiplicity is finite, countably infinite
//! or uncountable. The crate classifies vertices, attaches tails at sinks and
//! countable emitters (refusing when some vertex emits uncountably many
//! edges), and checks the algebraic side of the story on finite samples: a
//! symbolic Leavitt path algebra calculus over the rationals and the graph
//! monoid with a bounded equality search.

pub mod cardinality;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod leavitt;
pub mod monoid;
pub mod order;
pub mod transform;

pub use cardinality::Cardinality;
pub use error::{AlgebraError, GraphError, MonoidError, ParseError};
pub use graph::{
    Edge, EdgeBundle, EdgeRef, Graph, RowFiniteCheck, TailDescriptor, TailKind, VertexClass,
    VertexId, UNCOUNTABLE_SAMPLE_BOUND,
};
pub use io::{export_dot, parse_graph, serialize_graph};
pub use iso::graph_isomorphic;
pub use order::{EdgeOrder, EdgeOrderPolicy, PolicyRegistry};
pub use transform::{
    add_tail_at_countable_emitter, add_tail_at_sink, desingularize, materialize,
    row_finite_equivalent, TransformReport,
};
