//! Text format, canonical serialization and DOT export.

mod dot;
mod parse;
mod serialize;

pub use dot::export_dot;
pub use parse::{
    parse_document, parse_graph, Declaration, GraphDocument, Position, MAX_FINITE_MULTIPLICITY,
};
pub use serialize::serialize_graph;
