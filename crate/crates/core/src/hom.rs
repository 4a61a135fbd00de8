//! The spaces `Hom(V, Σ^p V)` for indecomposable `V`.
//!
//! [`hom_basis`] reads the basis off the arrow model, [`hom_dim_closed_form`]
//! evaluates the case formulas for the dimension without looking at arrows.
//! The two agree on every object; that agreement is checked in the tests.

use arrayvec::ArrayVec;

use crate::model::{Basis, Family, Model, ModelError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub source: Vertex,
    pub target: Vertex,
    pub p: u32,
    /// Identity first, then arrows by degree.
    pub basis: ArrayVec<Basis, 4>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn hom_basis(model: &Model, v: &Vertex, p: u32) -> Result<HomSpace, ModelError> {
    if !model.contains(v) {
        return Err(ModelError::NoSuchVertex(*v));
    }
    let target = model.sigma_pow(v, p as i64);
    Ok(HomSpace {
        source: *v,
        target,
        p,
        basis: model.hom_basis_between(v, &target),
    })
}

/// `dim Hom(V, Σ^p V)` from the closed formulas.
///
/// * `Z`: one for `p = 0`, zero otherwise.
/// * `X`: for `p > 0`, one iff `r | p` and `p/r <= (b + δ_{i,0} m - a)/(r + m)`;
///   for `p = 0`, two iff `r = 1` and `a <= b`, else one.
/// * `Y`: one for `p = 0`; for `p > 0`, one iff `r | p - 1` and
///   `1/(n-r) <= (p-1)/r <= (b + 1 - a - δ_{i,0} n)/(n - r)`.
///
/// Fractions are compared by cross-multiplication (all denominators positive).
pub fn hom_dim_closed_form(model: &Model, v: &Vertex, p: u32) -> Result<u8, ModelError> {
    if !model.contains(v) {
        return Err(ModelError::NoSuchVertex(*v));
    }
    let params = model.params();
    let (r, n, m) = (params.r(), params.n(), params.m());
    let p = p as i64;
    let first = (v.index == 0) as i64;
    let (a, b) = (v.a, v.b);
    let dim = match v.family {
        Family::Z => (p == 0) as u8,
        Family::X if p == 0 => {
            if r == 1 && a <= b {
                2
            } else {
                1
            }
        }
        Family::X => (p % r == 0 && p * (r + m) <= r * (b + first * m - a)) as u8,
        Family::Y if p == 0 => 1,
        Family::Y => {
            let q = p - 1;
            let gap = n - r;
            (q % r == 0 && r <= q * gap && q * gap <= r * (b + 1 - a - first * n)) as u8
        }
    };
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gentle::OmegaParams;
    use crate::model::{ArrowKind, Window};
    use Family::*;

    fn model(r: i64, n: i64, m: i64) -> Model {
        Model::new(OmegaParams::new(r, n, m).unwrap())
    }

    #[test]
    fn basis_examples() {
        let m = model(2, 3, 0);
        let z = Vertex::new(Z, 0, 0, 0);
        assert_eq!(
            hom_basis(&m, &z, 0).unwrap().basis.as_slice(),
            &[Basis::Identity]
        );

        let m = model(1, 2, 0);
        let y = Vertex::new(Y, 0, 0, 2);
        let h = hom_basis(&m, &y, 2).unwrap();
        assert_eq!(h.target, Vertex::new(Y, 0, -2, 0));
        assert_eq!(h.basis.as_slice(), &[Basis::Arrow(ArrowKind::EDouble)]);

        let m = model(1, 2, 1);
        let x = Vertex::new(X, 0, 0, 3);
        assert_eq!(
            hom_basis(&m, &x, 0).unwrap().basis.as_slice(),
            &[Basis::Identity, Basis::Arrow(ArrowKind::EPrime)]
        );
    }

    #[test]
    fn closed_form_examples() {
        let m = model(2, 3, 0);
        assert_eq!(hom_dim_closed_form(&m, &Vertex::new(Z, 0, 0, 0), 3), Ok(0));
        let m = model(1, 2, 1);
        let x = Vertex::new(X, 0, 0, 3);
        assert_eq!(hom_dim_closed_form(&m, &x, 2), Ok(1));
        assert_eq!(hom_dim_closed_form(&m, &x, 3), Ok(0));
        let m = model(1, 2, 0);
        let y = Vertex::new(Y, 0, 0, 2);
        assert_eq!(hom_dim_closed_form(&m, &y, 2), Ok(1));
        assert_eq!(hom_dim_closed_form(&m, &y, 1), Ok(0));
    }

    #[test]
    fn missing_vertex_is_an_error() {
        let m = model(2, 2, 0);
        let y = Vertex::new(Y, 0, 0, 5);
        assert!(hom_basis(&m, &y, 0).is_err());
        assert!(hom_dim_closed_form(&m, &y, 0).is_err());
    }

    #[test]
    fn closed_form_matches_model_small_grid() {
        for params in OmegaParams::grid(3, 1) {
            let m = Model::new(params);
            for v in m.enumerate_vertices(Window::new(3)) {
                for p in 0..=(2 * params.n() as u32 + 2) {
                    assert_eq!(
                        hom_basis(&m, &v, p).unwrap().dim(),
                        hom_dim_closed_form(&m, &v, p).unwrap() as usize,
                        "{params} {v} p={p}"
                    );
                }
                assert!(hom_basis(&m, &v, 0)
                    .unwrap()
                    .basis
                    .contains(&Basis::Identity));
            }
        }
    }
}
