use super::*;
use crate::{F3, F5};
use num_traits::One;
use Family::*;

fn model(r: i64, n: i64, m: i64) -> Model {
    Model::new(OmegaParams::new(r, n, m).unwrap())
}

fn v(f: Family, i: u32, a: i64, b: i64) -> Vertex {
    Vertex::new(f, i, a, b)
}

#[test]
fn vertex_membership() {
    assert_eq!(model(1, 2, 1).vertex_exists(X, 0, 0, 3), Ok(true));
    assert_eq!(model(2, 3, 0).vertex_exists(X, 0, 5, 3), Ok(false));
    assert_eq!(model(1, 2, 0).vertex_exists(Y, 0, 0, 1), Ok(false));
    assert_eq!(model(2, 2, 0).vertex_exists(Y, 0, 0, 5), Ok(false));
    assert_eq!(model(2, 2, 0).vertex_exists(Z, 1, 0, 0), Ok(false));
    assert_eq!(
        model(2, 3, 0).vertex_exists(Z, 2, 0, 0),
        Err(ModelError::IndexOutOfRange { index: 2, count: 2 })
    );
}

#[test]
fn arrows_between_examples() {
    let m = model(2, 3, 0);
    assert_eq!(
        m.arrow_kinds(&v(Z, 0, 0, 0), &v(Z, 0, 1, 2)).as_slice(),
        &[ArrowKind::F]
    );
    assert_eq!(
        m.arrow_kinds(&v(X, 0, 0, 0), &v(Z, 0, 0, 7)).as_slice(),
        &[ArrowKind::GPrime]
    );
    let m = model(1, 2, 0);
    let x = v(X, 0, 0, 1);
    assert_eq!(m.arrow_kinds(&x, &x).as_slice(), &[ArrowKind::EPrime]);
    assert_eq!(
        m.hom_basis_between(&x, &x).as_slice(),
        &[Basis::Identity, Basis::Arrow(ArrowKind::EPrime)]
    );
}

#[test]
fn r_equal_one_has_parallel_f_and_e() {
    // X(0,0) -> X(0,1) with r = 1: f' (u in [0,0] x [0,inf)) and e' (u in (-inf,0] x [0,0]).
    let m = model(1, 2, 0);
    let kinds = m.arrow_kinds(&v(X, 0, 0, 0), &v(X, 0, 0, 0));
    assert_eq!(kinds.as_slice(), &[ArrowKind::EPrime]);
    let kinds = m.arrow_kinds(&v(X, 0, -1, 0), &v(X, 0, -1, 0));
    assert_eq!(kinds.as_slice(), &[ArrowKind::EPrime]);
    let m = model(1, 2, 1);
    let kinds = m.arrow_kinds(&v(X, 0, 0, 0), &v(X, 0, 1, 1));
    assert_eq!(kinds.as_slice(), &[ArrowKind::FPrime, ArrowKind::EPrime]);
}

#[test]
fn compose_examples() {
    let m = model(2, 3, 0);
    let (x0, x1, z) = (v(X, 0, 0, 0), v(X, 0, 0, 1), v(Z, 0, 0, 7));
    let f = Morphism::<F3>::arrow(&m, ArrowKind::FPrime, x0, x1).unwrap();
    let g = Morphism::<F3>::arrow(&m, ArrowKind::GPrime, x1, z).unwrap();
    let gf = m.compose(&g, &f).unwrap();
    assert_eq!(gf, Morphism::arrow(&m, ArrowKind::GPrime, x0, z).unwrap());

    let id = Morphism::<F3>::identity(x1);
    assert_eq!(m.compose(&id, &f).unwrap(), f);
    assert_eq!(m.compose(&g, &id).unwrap(), g);
    assert!(matches!(
        m.compose(&f, &g),
        Err(ModelError::NotComposable { .. })
    ));
}

#[test]
fn e_after_e_vanishes_when_r_equals_n() {
    for (n, mm) in [(1, 0), (2, 0), (2, 1), (3, 2)] {
        let model = model(n, n, mm);
        let window = Window::new(3);
        let verts = model.enumerate_vertices(window);
        for a in &verts {
            for b in &verts {
                if !model.arrow_kinds(a, b).contains(&ArrowKind::EPrime) {
                    continue;
                }
                for c in &verts {
                    if model.arrow_kinds(b, c).contains(&ArrowKind::EPrime) {
                        let e1 = Morphism::<F3>::arrow(&model, ArrowKind::EPrime, *a, *b).unwrap();
                        let e2 = Morphism::<F3>::arrow(&model, ArrowKind::EPrime, *b, *c).unwrap();
                        assert!(model.compose(&e2, &e1).unwrap().is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn morphism_rejects_foreign_basis() {
    let m = model(2, 3, 0);
    let err = Morphism::<F3>::new(
        &m,
        v(X, 0, 0, 0),
        v(X, 0, 5, 5),
        [(Basis::Identity, F3::one())],
    )
    .unwrap_err();
    assert!(matches!(err, ModelError::NotAHomElement { .. }));
}

#[test]
fn sigma_examples() {
    let m = model(1, 2, 0);
    assert_eq!(m.sigma(&v(Y, 0, 0, 2)), v(Y, 0, -1, 1));
    let m = model(2, 3, 1);
    assert_eq!(m.sigma(&v(X, 0, 0, 0)), v(X, 1, 1, 2));
    let x = v(X, 0, 0, 0);
    assert_eq!(
        m.sigma_morphism(&Morphism::<F5>::identity(x)),
        Morphism::identity(m.sigma(&x))
    );
}

#[test]
fn tau_examples() {
    let m = model(2, 3, 0);
    assert_eq!(m.tau(&v(Z, 0, 0, 0)), v(Z, 0, -1, -1));
    let m = model(1, 1, 0);
    let x = v(X, 0, 0, 2);
    assert_eq!(m.tau(&x), v(X, 0, -1, 1));
    assert_eq!(m.tau(&x), m.sigma_inv(&x));
}

#[test]
fn sigma_inverse_round_trip() {
    for params in OmegaParams::grid(4, 2) {
        let m = Model::new(params);
        for x in m.enumerate_vertices(Window::new(3)) {
            assert_eq!(m.sigma_inv(&m.sigma(&x)), x);
            assert_eq!(m.sigma(&m.sigma_inv(&x)), x);
            assert_eq!(m.tau(&m.sigma(&x)), m.sigma(&m.tau(&x)));
            assert!(m.contains(&m.sigma(&x)) && m.contains(&m.sigma_inv(&x)));
        }
    }
}

#[test]
fn tau_sigma_examples() {
    let w = model(1, 2, 0).tau_sigma_witnesses();
    let fams: Vec<Family> = w.iter().map(|w| w.family).collect();
    assert_eq!(fams, vec![X, Y]);
    assert_eq!(w[0].p, -1);
    assert_eq!(w[1].p, 1);
    assert!(!model(2, 4, 1).tau_sigma_periodic());
    assert!(model(1, 1, 0).tau_sigma_periodic());
}

#[test]
fn enumeration_examples() {
    assert_eq!(model(1, 1, 0).enumerate_vertices(Window::new(1)).len(), 6);
    let verts = model(2, 2, 0).enumerate_vertices(Window::new(1));
    assert!(verts.iter().all(|v| v.family == X));
    let verts = model(2, 3, 0).enumerate_vertices(Window::new(0));
    assert!(verts.iter().all(|v| (v.a, v.b) == (0, 0)));
    // X^(0) and X^(1) at (0,0), Y^(1) only (Y^(0) needs b >= a + 3), Z^(0), Z^(1)
    assert_eq!(verts.len(), 5);
    let mut sorted = verts.clone();
    sorted.sort();
    assert_eq!(sorted, verts);
}

#[test]
fn at_most_one_arrow_per_degree_and_small_hom() {
    for params in OmegaParams::grid(3, 2) {
        let m = Model::new(params);
        let verts = m.enumerate_vertices(Window::new(2));
        for a in &verts {
            for b in &verts {
                let kinds = m.arrow_kinds(a, b);
                let mut degs: Vec<u8> = kinds.iter().map(|k| k.degree()).collect();
                degs.dedup();
                assert_eq!(degs.len(), kinds.len());
                for k in &kinds {
                    assert_eq!(k.source_family(), a.family);
                    assert_eq!(k.target_family(), b.family);
                    let step = if k.steps_index() { 1 } else { 0 };
                    assert_eq!(b.index, (a.index + step) % m.index_count());
                }
                let dim = m.hom_basis_between(a, b).len();
                assert!(dim <= 2);
                if dim == 2 {
                    // only r = 1, where the e' of an X object can return to its own index
                    assert!(a.family == X && b.family == X && params.r() == 1);
                }
            }
        }
    }
}

#[test]
fn dot_is_deterministic_and_guarded() {
    let m = model(1, 1, 0);
    let d1 = emit_ar_dot(&m, Window::new(1)).unwrap();
    let d2 = emit_ar_dot(&m, Window::new(1)).unwrap();
    assert_eq!(d1, d2);
    assert_eq!(d1.matches("[label=\"(").count(), 6);
    // e' self-loops exactly on the a <= b nodes
    assert!(d1.matches("e' (2)").count() >= 6);
    for (a, b) in [(-1, -1), (-1, 0), (-1, 1), (0, 0), (0, 1), (1, 1)] {
        let id = format!(
            "X0_{}_{}",
            if a < 0 {
                format!("m{}", -a)
            } else {
                a.to_string()
            },
            if b < 0 {
                format!("m{}", -b)
            } else {
                b.to_string()
            }
        );
        assert!(d1.contains(&format!("{id} -> {id} [label=\"e' (2)\"]")));
    }
    assert!(matches!(
        emit_ar_dot(&m, Window::new(9)),
        Err(ModelError::WindowTooLarge(9, 8))
    ));
}

#[test]
fn neighbour_enumeration_matches_pairwise_scan() {
    for params in OmegaParams::grid(3, 2) {
        let m = Model::new(params);
        let window = Window::new(3);
        let verts = m.enumerate_vertices(window);
        for x in &verts {
            let mut from: Vec<Arrow> = verts.iter().flat_map(|y| m.arrows_between(x, y)).collect();
            let mut into: Vec<Arrow> = verts.iter().flat_map(|y| m.arrows_between(y, x)).collect();
            let key = |a: &Arrow| (a.source, a.target, a.kind.degree());
            from.sort_by_key(key);
            into.sort_by_key(key);
            let mut got_from = m.arrows_from(x, window);
            let mut got_into = m.arrows_into(x, window);
            got_from.sort_by_key(key);
            got_into.sort_by_key(key);
            assert_eq!(got_from, from, "{params} out of {x}");
            assert_eq!(got_into, into, "{params} into {x}");
        }
    }
}
