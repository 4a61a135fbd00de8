use std::cmp::Ordering;
use std::fmt;

use arrayvec::ArrayVec;

use super::{ArrowKind, Model, ModelError, Vertex};
use crate::Field;

/// A basis element of a Hom space.
///
/// Within one Hom space the degree determines the element, so basis elements
/// are ordered by degree with the identity first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Identity,
    Arrow(ArrowKind),
}

impl Basis {
    pub fn degree(&self) -> u8 {
        match self {
            Basis::Identity => 0,
            Basis::Arrow(k) => k.degree(),
        }
    }

    fn sort_key(&self) -> (u8, Option<ArrowKind>) {
        match self {
            Basis::Identity => (0, None),
            Basis::Arrow(k) => (k.degree(), Some(*k)),
        }
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Identity => f.write_str("id"),
            Basis::Arrow(k) => write!(f, "{k}"),
        }
    }
}

/// A linear combination of basis elements of `Hom(source, target)`.
///
/// Hom spaces have dimension at most 4, so the nonzero terms live inline,
/// sorted by basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism<F> {
    source: Vertex,
    target: Vertex,
    terms: ArrayVec<(Basis, F), 4>,
}

impl<F: Field> Morphism<F> {
    pub fn zero(source: Vertex, target: Vertex) -> Self {
        Morphism {
            source,
            target,
            terms: ArrayVec::new(),
        }
    }

    pub fn identity(v: Vertex) -> Self {
        let mut f = Self::zero(v, v);
        f.add_term(Basis::Identity, F::one());
        f
    }

    /// Builds a morphism, checking every basis element against the model.
    pub fn new(
        model: &Model,
        source: Vertex,
        target: Vertex,
        terms: impl IntoIterator<Item = (Basis, F)>,
    ) -> Result<Self, ModelError> {
        for v in [source, target] {
            if !model.contains(&v) {
                return Err(ModelError::NoSuchVertex(v));
            }
        }
        let allowed = model.hom_basis_between(&source, &target);
        let mut f = Self::zero(source, target);
        for (basis, x) in terms {
            if !allowed.contains(&basis) {
                return Err(ModelError::NotAHomElement {
                    basis,
                    from: source,
                    to: target,
                });
            }
            f.add_term(basis, x);
        }
        Ok(f)
    }

    /// The generator arrow of `kind` from `source` to `target`.
    pub fn arrow(
        model: &Model,
        kind: ArrowKind,
        source: Vertex,
        target: Vertex,
    ) -> Result<Self, ModelError> {
        Self::new(model, source, target, [(Basis::Arrow(kind), F::one())])
    }

    pub(crate) fn from_terms_unchecked(
        source: Vertex,
        target: Vertex,
        terms: impl IntoIterator<Item = (Basis, F)>,
    ) -> Self {
        let mut f = Self::zero(source, target);
        for (b, x) in terms {
            f.add_term(b, x);
        }
        f
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, F)> + '_ {
        self.terms.iter().copied()
    }

    pub fn coefficient(&self, basis: Basis) -> F {
        self.terms
            .iter()
            .find(|(b, _)| *b == basis)
            .map_or_else(F::zero, |&(_, x)| x)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, basis: Basis, x: F) {
        match self.terms.binary_search_by(|(b, _)| b.cmp(&basis)) {
            Ok(i) => {
                self.terms[i].1 += x;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) if !x.is_zero() => self.terms.insert(i, (basis, x)),
            Err(_) => {}
        }
    }

    pub fn scale(&self, c: F) -> Self {
        Self::from_terms_unchecked(
            self.source,
            self.target,
            self.terms().map(|(b, x)| (b, c * x)),
        )
    }

    /// Sum of two morphisms with the same endpoints.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.source, self.target),
            (other.source, other.target),
            "adding morphisms between different objects"
        );
        let mut out = self.clone();
        for (b, x) in other.terms() {
            out.add_term(b, x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-F::one()))
    }
}

impl<F: Field> fmt::Display for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0: {} -> {}", self.source, self.target);
        }
        let parts: Vec<String> = self.terms().map(|(b, x)| format!("{x}*{b}")).collect();
        write!(
            f,
            "{}: {} -> {}",
            parts.join(" + "),
            self.source,
            self.target
        )
    }
}
