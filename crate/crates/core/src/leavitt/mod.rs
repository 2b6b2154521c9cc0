//! Symbolic monomial calculus in the Leavitt path algebra `L_Q(E)`.
//!
//! Elements are rational combinations of monomials `p q*` with
//! `r(p) = r(q)`. Products use only `e* f = δ(e,f) r(e)` and absorption by
//! vertices; the relation `v = Σ e e*` at regular vertices is never applied,
//! so equality here is equality of presentations.

mod corner;
mod element;
mod path;

pub use corner::{
    corner_basis, corner_project, corner_span, linearly_independent, sample_emitter_idempotents,
    LocalUnit,
};
pub use element::{are_orthogonal, is_idempotent, mul_monomial, AlgebraElement, Monomial};
pub use path::Path;
