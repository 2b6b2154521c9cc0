use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};

use crate::error::AlgebraError;
use crate::graph::{Graph, VertexId};

use super::path::Path;

/// `p q*` with `r(p) = r(q)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    p: Path,
    q: Path,
}

impl Monomial {
    pub fn new(p: Path, q: Path) -> Result<Self, AlgebraError> {
        if p.range() != q.range() {
            return Err(AlgebraError::InvalidMonomial(format!(
                "r({p}) = `{}` differs from r({q}) = `{}`",
                p.range(),
                q.range()
            )));
        }
        Ok(Monomial { p, q })
    }

    /// The vertex idempotent `v = v v*`.
    pub fn vertex(v: VertexId) -> Self {
        Monomial {
            p: Path::vertex(v.clone()),
            q: Path::vertex(v),
        }
    }

    /// `p p*`.
    pub fn projection(p: Path) -> Self {
        Monomial { q: p.clone(), p }
    }

    /// `p*`, i.e. `r(p) p*`.
    pub fn ghost(p: Path) -> Self {
        Monomial {
            p: Path::vertex(p.range().clone()),
            q: p,
        }
    }

    pub fn real(&self) -> &Path {
        &self.p
    }

    pub fn ghost_part(&self) -> &Path {
        &self.q
    }

    pub fn validate(&self, g: &Graph) -> Result<(), AlgebraError> {
        self.p.validate(g)?;
        self.q.validate(g)
    }

    /// `(p1 q1*)(p2 q2*)`: `q1* p2` collapses by `e* f = δ(e,f) r(e)`, leaving
    /// `p1 t q2*` when `p2 = q1 t`, `p1 (q2 t)*` when `q1 = p2 t`, and zero
    /// otherwise.
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        let (q1, p2) = (&self.q, &other.p);
        if q1.source() != p2.source() {
            return None;
        }
        let (a, b) = (q1.edges(), p2.edges());
        if b.starts_with(a) {
            Some(Monomial {
                p: self.p.extended(&b[a.len()..], p2.range()),
                q: other.q.clone(),
            })
        } else if a.starts_with(b) {
            Some(Monomial {
                p: self.p.clone(),
                q: other.q.extended(&a[b.len()..], q1.range()),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_vertex(), self.q.is_vertex()) {
            (true, true) => write!(f, "{}", self.p),
            (false, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "({})*", self.q),
            (false, false) => write!(f, "{} ({})*", self.p, self.q),
        }
    }
}

/// Product of two monomials valid in `g`; zero or a single monomial.
pub fn mul_monomial(g: &Graph, a: &Monomial, b: &Monomial) -> Result<AlgebraElement, AlgebraError> {
    a.validate(g)?;
    b.validate(g)?;
    Ok(a.mul(b).map(AlgebraElement::from).unwrap_or_default())
}

/// Finite rational combination of monomials, kept in the spanning-monomial
/// presentation. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, Monomial)>) -> Self {
        let mut x = Self::zero();
        for (c, m) in terms {
            x.add_term(m, c);
        }
        x
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), AlgebraError> {
        self.terms.keys().try_for_each(|m| m.validate(g))
    }

    /// Bilinear product; both factors are checked against `g`.
    pub fn mul(&self, other: &AlgebraElement, g: &Graph) -> Result<AlgebraElement, AlgebraError> {
        self.validate(g)?;
        other.validate(g)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = a.mul(b) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Sources `s(p)` and `s(q)` of every term.
    pub fn sources(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.terms
            .keys()
            .flat_map(|m| [m.real().source(), m.ghost_part().source()])
    }
}

impl From<Monomial> for AlgebraElement {
    fn from(m: Monomial) -> Self {
        AlgebraElement {
            terms: BTreeMap::from([(m, BigRational::one())]),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}

pub fn is_idempotent(g: &Graph, x: &AlgebraElement) -> Result<bool, AlgebraError> {
    Ok(&x.mul(x, g)? == x)
}

pub fn are_orthogonal(g: &Graph, x: &AlgebraElement, y: &AlgebraElement) -> Result<bool, AlgebraError> {
    Ok(x.mul(y, g)?.is_zero() && y.mul(x, g)?.is_zero())
}
