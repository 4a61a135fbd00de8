//! Natural transformations `Id -> Σ^p` and the degree-`p` components of the
//! graded center `𝔷` and its commutative variant `𝔷'`.
//!
//! An element `η` of degree `p` assigns to every object `V` a morphism
//! `η_V: V -> Σ^p V`. It lies in the center when it is natural,
//! `Σ^p(φ) ∘ η_V = η_W ∘ φ` for every arrow `φ: V -> W`, and satisfies the sign
//! law `η_{ΣV} = s · Σ(η_V)` with `s = (-1)^p` for [`Variant::Graded`] and
//! `s = 1` for [`Variant::Commutative`].
//!
//! The category is infinite, so elements live on a finite [`Window`]; the
//! solver and the membership check only trust an inner window that keeps a
//! margin of [`window_margin`] to the boundary.

mod generators;
mod membership;
mod solver;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use generators::{make_generator, GeneratorSpec};
pub use membership::{check_membership, Violation};
pub use solver::{solve_component, ClassKey, ComponentSolution, Layout, Subspace};

use crate::gentle::OmegaParams;
use crate::model::{Model, ModelError, Morphism, Vertex, Window};
use crate::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// `η_{ΣX} = (-1)^p Σ(η_X)`, the graded center `𝔷`.
    Graded,
    /// `η_{ΣX} = Σ(η_X)`, the commutative variant `𝔷'`.
    Commutative,
}

impl Variant {
    pub fn sign<F: Field>(self, p: u32) -> F {
        match self {
            Variant::Graded => F::sign(p as i64),
            Variant::Commutative => F::one(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Graded => "graded",
            Variant::Commutative => "commutative",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graded" => Ok(Variant::Graded),
            "commutative" => Ok(Variant::Commutative),
            other => Err(format!(
                "unknown variant `{other}` (expected graded or commutative)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("inner window {inner} plus margin {margin} exceeds the outer window {outer}")]
    Margin { inner: i64, margin: i64, outer: i64 },
    #[error("{spec} is not defined for (r, n, m) = {params}")]
    Inadmissible {
        spec: GeneratorSpec,
        params: OmegaParams,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("value at {vertex} has target {target}, expected Σ^{p} of the source")]
    WrongTarget {
        vertex: Vertex,
        target: Vertex,
        p: u32,
    },
}

/// Distance kept between an inner window and the outer window.
///
/// `n + m + 2` bounds the coordinate shift of `Σ` and `Σ^{-1}` on every
/// object, so each inner object has its suspension, desuspension and all
/// arrows between them inside the outer window.
pub fn window_margin(params: OmegaParams) -> i64 {
    params.n() + params.m() + 2
}

/// Largest inner window usable with the given outer window.
pub fn inner_window(params: OmegaParams, outer: Window) -> Result<Window, CenterError> {
    outer
        .shrink(window_margin(params))
        .ok_or(CenterError::Margin {
            inner: 0,
            margin: window_margin(params),
            outer: outer.half_width,
        })
}

pub(crate) fn check_margin(
    params: OmegaParams,
    outer: Window,
    inner: Window,
) -> Result<(), CenterError> {
    let margin = window_margin(params);
    if inner.half_width + margin > outer.half_width {
        Err(CenterError::Margin {
            inner: inner.half_width,
            margin,
            outer: outer.half_width,
        })
    } else {
        Ok(())
    }
}

/// A transformation `Id -> Σ^p` given on the objects of a window.
///
/// Only nonzero values are stored; objects of the window without a stored
/// value map to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterElement<F> {
    degree: u32,
    variant: Variant,
    window: Window,
    values: BTreeMap<Vertex, Morphism<F>>,
}

impl<F: Field> CenterElement<F> {
    pub fn zero(degree: u32, variant: Variant, window: Window) -> Self {
        CenterElement {
            degree,
            variant,
            window,
            values: BTreeMap::new(),
        }
    }

    /// Assembles an element, checking that each value goes to `Σ^p` of its source.
    pub fn from_values(
        model: &Model,
        degree: u32,
        variant: Variant,
        window: Window,
        values: impl IntoIterator<Item = Morphism<F>>,
    ) -> Result<Self, CenterError> {
        let mut el = Self::zero(degree, variant, window);
        for f in values {
            let v = f.source();
            let expected = model.sigma_pow(&v, degree as i64);
            if f.target() != expected {
                return Err(CenterError::WrongTarget {
                    vertex: v,
                    target: f.target(),
                    p: degree,
                });
            }
            if window.contains(&v) && !f.is_zero() {
                el.values.insert(v, f);
            }
        }
        Ok(el)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn get(&self, v: &Vertex) -> Option<&Morphism<F>> {
        self.values.get(v)
    }

    /// `η_v`, zero when nothing is stored.
    pub fn value(&self, model: &Model, v: &Vertex) -> Morphism<F> {
        self.values
            .get(v)
            .cloned()
            .unwrap_or_else(|| Morphism::zero(*v, model.sigma_pow(v, self.degree as i64)))
    }

    /// Objects with a nonzero value, in vertex order.
    pub fn support(&self) -> impl Iterator<Item = &Vertex> {
        self.values.keys()
    }

    pub fn values(&self) -> impl Iterator<Item = &Morphism<F>> {
        self.values.values()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn restrict(&self, window: Window) -> Self {
        CenterElement {
            degree: self.degree,
            variant: self.variant,
            window,
            values: self
                .values
                .iter()
                .filter(|(v, _)| window.contains(v) && self.window.contains(v))
                .map(|(v, f)| (*v, f.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: F) -> Self {
        CenterElement {
            degree: self.degree,
            variant: self.variant,
            window: self.window,
            values: self
                .values
                .iter()
                .map(|(v, f)| (*v, f.scale(c)))
                .filter(|(_, f)| !f.is_zero())
                .collect(),
        }
    }

    /// Sum on the common window.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding elements of different degrees"
        );
        let window = Window::new(self.window.half_width.min(other.window.half_width));
        let mut values: BTreeMap<Vertex, Morphism<F>> = self.restrict(window).values;
        for (v, f) in other.restrict(window).values {
            let sum = match values.remove(&v) {
                Some(g) => g.add(&f),
                None => f,
            };
            if !sum.is_zero() {
                values.insert(v, sum);
            }
        }
        CenterElement {
            degree: self.degree,
            variant: self.variant,
            window,
            values,
        }
    }
}

impl<F: Field> fmt::Display for CenterElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "degree {} ({}), window {}, {} nonzero values",
            self.degree,
            self.variant,
            self.window.half_width,
            self.values.len()
        )?;
        for g in self.values.values() {
            writeln!(f, "  {g}")?;
        }
        Ok(())
    }
}

/// Product `(a · b)_X = Σ^{deg b}(a_X) ∘ b_X` on the common window.
pub fn multiply<F: Field>(
    model: &Model,
    a: &CenterElement<F>,
    b: &CenterElement<F>,
) -> CenterElement<F> {
    let window = Window::new(a.window.half_width.min(b.window.half_width));
    let mut values = BTreeMap::new();
    for (v, bv) in b.values.iter().filter(|(v, _)| window.contains(v)) {
        let Some(av) = a.values.get(v) else { continue };
        let shifted = model.sigma_pow_morphism(av, b.degree);
        let prod = model
            .compose(&shifted, bv)
            .expect("Σ^q a_X starts where b_X ends");
        if !prod.is_zero() {
            values.insert(*v, prod);
        }
    }
    CenterElement {
        degree: a.degree + b.degree,
        variant: a.variant,
        window,
        values,
    }
}

#[cfg(test)]
mod tests;
