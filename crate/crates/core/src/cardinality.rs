//! Three-level cardinalities for edge bundles.

use std::fmt;
use std::num::NonZeroU64;

/// Size of an edge bundle or of the set of edges leaving a vertex.
///
/// Only the distinction finite / countably infinite / uncountable is kept.
/// The derived order puts every `Finite` below `CountablyInfinite`, which in
/// turn sits below `Uncountable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    Finite(NonZeroU64),
    CountablyInfinite,
    Uncountable,
}

impl Cardinality {
    /// `Finite(n)` for `n >= 1`, `None` for zero.
    pub fn finite(n: u64) -> Option<Self> {
        NonZeroU64::new(n).map(Cardinality::Finite)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    pub fn finite_count(self) -> Option<u64> {
        match self {
            Cardinality::Finite(n) => Some(n.get()),
            _ => None,
        }
    }

    /// Cardinal addition with absorption.
    pub fn add(self, other: Self) -> Self {
        use Cardinality::*;
        match (self, other) {
            (Uncountable, _) | (_, Uncountable) => Uncountable,
            (CountablyInfinite, _) | (_, CountablyInfinite) => CountablyInfinite,
            (Finite(a), Finite(b)) => Finite(a.saturating_add(b.get())),
        }
    }

    /// Sum of an iterator of cardinalities; `None` for the empty sum.
    pub fn sum<I: IntoIterator<Item = Self>>(iter: I) -> Option<Self> {
        iter.into_iter().reduce(Cardinality::add)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::CountablyInfinite => f.write_str("omega"),
            Cardinality::Uncountable => f.write_str("uncountable"),
        }
    }
}
