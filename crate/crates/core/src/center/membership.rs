use std::fmt;

use rayon::prelude::*;

use super::{check_margin, CenterElement, CenterError};
use crate::model::{Arrow, Model, Morphism, Vertex, Window};
use crate::Field;

/// The first failing equation found by [`check_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation<F> {
    /// `Σ^p(φ) ∘ η_V != η_W ∘ φ`.
    Naturality {
        arrow: Arrow,
        lhs: Morphism<F>,
        rhs: Morphism<F>,
    },
    /// `η_{ΣV} != s · Σ(η_V)`.
    SignLaw {
        vertex: Vertex,
        lhs: Morphism<F>,
        rhs: Morphism<F>,
    },
}

impl<F: Field> fmt::Display for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Naturality { arrow, lhs, rhs } => {
                write!(f, "naturality fails at {arrow}: {lhs} != {rhs}")
            }
            Violation::SignLaw { vertex, lhs, rhs } => {
                write!(f, "sign law fails at {vertex}: {lhs} != {rhs}")
            }
        }
    }
}

fn naturality_at<F: Field>(
    model: &Model,
    el: &CenterElement<F>,
    arrow: &Arrow,
) -> Option<Violation<F>> {
    let p = el.degree();
    let phi = Morphism::from_terms_unchecked(
        arrow.source,
        arrow.target,
        [(crate::model::Basis::Arrow(arrow.kind), F::one())],
    );
    let lhs = model
        .compose(
            &model.sigma_pow_morphism(&phi, p),
            &el.value(model, &arrow.source),
        )
        .expect("composable");
    let rhs = model
        .compose(&el.value(model, &arrow.target), &phi)
        .expect("composable");
    (lhs != rhs).then(|| Violation::Naturality {
        arrow: *arrow,
        lhs,
        rhs,
    })
}

fn sign_law_at<F: Field>(model: &Model, el: &CenterElement<F>, v: &Vertex) -> Option<Violation<F>> {
    let sv = model.sigma(v);
    let lhs = el.value(model, &sv);
    let rhs = model
        .sigma_morphism(&el.value(model, v))
        .scale(el.variant().sign(el.degree()));
    (lhs != rhs).then_some(Violation::SignLaw {
        vertex: *v,
        lhs,
        rhs,
    })
}

/// Checks naturality and the sign law on every object and arrow of `inner`.
///
/// Returns `Ok(None)` when all equations hold and the first violation in
/// vertex order otherwise. The element's window must exceed `inner` by the
/// margin, so that no value used here is a truncation artifact.
pub fn check_membership<F: Field>(
    model: &Model,
    el: &CenterElement<F>,
    inner: Window,
) -> Result<Option<Violation<F>>, CenterError> {
    check_margin(model.params(), el.window(), inner)?;
    let verts = model.enumerate_vertices(inner);
    let found = verts.par_iter().find_map_first(|v| {
        let v_live = el.get(v).is_some();
        for arrow in model.arrows_from(v, inner) {
            if v_live || el.get(&arrow.target).is_some() {
                if let Some(bad) = naturality_at(model, el, &arrow) {
                    return Some(bad);
                }
            }
        }
        let sv = model.sigma(v);
        if inner.contains(&sv) && (v_live || el.get(&sv).is_some()) {
            if let Some(bad) = sign_law_at(model, el, v) {
                return Some(bad);
            }
        }
        None
    });
    Ok(found)
}
