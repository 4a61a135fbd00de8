use super::*;
use crate::model::{ArrowKind, Basis, Family};
use crate::{F2, F3, F5};
use num_traits::One;

fn model(r: i64, n: i64, m: i64) -> Model {
    Model::new(OmegaParams::new(r, n, m).unwrap())
}

fn member<F: Field>(model: &Model, spec: GeneratorSpec, variant: Variant, outer: i64) -> bool {
    let el = make_generator::<F>(model, spec, Window::new(outer))
        .unwrap()
        .with_variant(variant);
    let inner = inner_window(model.params(), Window::new(outer)).unwrap();
    check_membership(model, &el, inner).unwrap().is_none()
}

#[test]
fn identity_is_central() {
    for params in OmegaParams::grid(3, 1) {
        let m = Model::new(params);
        for variant in [Variant::Graded, Variant::Commutative] {
            assert!(
                member::<F3>(&m, GeneratorSpec::Identity, variant, 8),
                "{params}"
            );
        }
    }
}

#[test]
fn eta_prime_examples() {
    let m = model(2, 3, 0);
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaPrime(1),
        Variant::Graded,
        9
    ));
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaDoublePrime(1),
        Variant::Commutative,
        9
    ));
    // n = 3 is odd, so the unsigned element breaks the graded sign law over F3 ...
    assert!(!member::<F3>(
        &m,
        GeneratorSpec::EtaDoublePrime(1),
        Variant::Graded,
        9
    ));
    assert!(!member::<F3>(
        &m,
        GeneratorSpec::EtaPrime(1),
        Variant::Commutative,
        9
    ));
    // ... but not over F2
    assert!(member::<F2>(
        &m,
        GeneratorSpec::EtaDoublePrime(1),
        Variant::Graded,
        9
    ));

    // n = 2 is even: both elements satisfy both sign laws
    let m = model(1, 2, 0);
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaDoublePrime(0),
        Variant::Graded,
        8
    ));
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaPrime(0),
        Variant::Commutative,
        8
    ));
}

#[test]
fn violation_reports_the_sign_law() {
    let m = model(2, 3, 0);
    let outer = Window::new(9);
    let el = make_generator::<F3>(&m, GeneratorSpec::EtaDoublePrime(0), outer).unwrap();
    let el = el.with_variant(Variant::Graded);
    let bad = check_membership(&m, &el, inner_window(m.params(), outer).unwrap())
        .unwrap()
        .expect("sign law fails");
    assert!(matches!(bad, Violation::SignLaw { .. }), "{bad}");
}

#[test]
fn eta_zero_and_powers() {
    let m = model(1, 2, 0);
    assert!(member::<F5>(
        &m,
        GeneratorSpec::EtaZero(2),
        Variant::Graded,
        8
    ));
    let m = model(1, 1, 0);
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaZero(0),
        Variant::Graded,
        7
    ));
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaPower(1),
        Variant::Commutative,
        7
    ));
    assert!(!member::<F3>(
        &m,
        GeneratorSpec::EtaPower(1),
        Variant::Graded,
        7
    ));
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaPower(2),
        Variant::Graded,
        7
    ));
    let m = model(2, 2, 1);
    assert!(member::<F3>(
        &m,
        GeneratorSpec::EtaPower(1),
        Variant::Graded,
        11
    ));
}

#[test]
fn inadmissible_generators_are_rejected() {
    let m = model(2, 4, 0);
    assert!(matches!(
        make_generator::<F3>(&m, GeneratorSpec::EtaPrime(0), Window::new(4)),
        Err(CenterError::Inadmissible { .. })
    ));
    assert!(
        make_generator::<F3>(&model(1, 1, 1), GeneratorSpec::EtaZero(0), Window::new(4)).is_err()
    );
    assert!(
        make_generator::<F3>(&model(2, 2, 0), GeneratorSpec::EtaPower(0), Window::new(4)).is_err()
    );
}

#[test]
fn margin_is_enforced() {
    let m = model(1, 2, 0);
    let el = make_generator::<F3>(&m, GeneratorSpec::Identity, Window::new(5)).unwrap();
    assert!(matches!(
        check_membership(&m, &el, Window::new(2)),
        Err(CenterError::Margin { .. })
    ));
    assert!(solve_component::<F3>(&m, 0, Variant::Graded, Window::new(5), Window::new(2)).is_err());
    assert!(inner_window(m.params(), Window::new(3)).is_err());
}

#[test]
fn eta_prime_signs_follow_the_orbit() {
    // (1, 2, 0): Σ moves Y objects by (-1, -1), one step per degree
    let m = model(1, 2, 0);
    let el = make_generator::<F3>(&m, GeneratorSpec::EtaPrime(0), Window::new(3)).unwrap();
    let base = Vertex::new(Family::Y, 0, 0, 2);
    assert_eq!(generators::orbit_exponent(&m, &base), 0);
    assert_eq!(
        generators::orbit_exponent(&m, &Vertex::new(Family::Y, 0, -1, 1)),
        1
    );
    assert_eq!(
        el.get(&base)
            .unwrap()
            .coefficient(Basis::Arrow(ArrowKind::EDouble)),
        F3::one()
    );

    // (2, 3, 0): n odd, signs alternate along the orbit
    let m = model(2, 3, 0);
    let el = make_generator::<F3>(&m, GeneratorSpec::EtaPrime(0), Window::new(6)).unwrap();
    let base = Vertex::new(Family::Y, 0, 0, 3);
    let next = m.sigma(&base);
    let c0 = el
        .get(&base)
        .unwrap()
        .coefficient(Basis::Arrow(ArrowKind::EDouble));
    let c1 = el
        .get(&next)
        .unwrap()
        .coefficient(Basis::Arrow(ArrowKind::EDouble));
    assert_eq!(c0, -c1);
}

#[test]
fn generator_specs_round_trip() {
    for spec in [
        GeneratorSpec::Identity,
        GeneratorSpec::EtaPrime(3),
        GeneratorSpec::EtaDoublePrime(0),
        GeneratorSpec::EtaZero(2),
        GeneratorSpec::EtaPower(4),
    ] {
        assert_eq!(spec.to_string().parse::<GeneratorSpec>(), Ok(spec));
    }
    assert!("eta(1)".parse::<GeneratorSpec>().is_err());
    assert!("eta'(x)".parse::<GeneratorSpec>().is_err());
}

#[test]
fn solver_examples() {
    let m = model(1, 2, 0);
    let outer = Window::new(7);
    let inner = Window::new(3);
    // degree 0: identity plus one e'-class element per X class
    let sol = solve_component::<F3>(&m, 0, Variant::Graded, outer, inner).unwrap();
    assert_eq!(sol.global_dim(), 1);
    assert!(sol.class_dims.keys().all(|k| k.family == Family::X));
    assert_eq!(sol.class_dims.len(), 7); // b - a ranges over 0..=6
    assert!(sol.class_dims.values().all(|&d| d == 1));
    // degree n = 2: one element per Y class
    let sol = solve_component::<F3>(&m, 2, Variant::Graded, outer, inner).unwrap();
    assert_eq!(sol.global_dim(), 0);
    assert!(sol.class_dims.keys().all(|k| k.family == Family::Y));
    assert!(sol.dim() > 0);
    // degree 1: nothing
    let sol = solve_component::<F3>(&m, 1, Variant::Graded, outer, inner).unwrap();
    assert_eq!(sol.dim(), 0);

    // r = n: degree n carries η, degree 1 nothing
    let m = model(2, 2, 0);
    let sol = solve_component::<F3>(&m, 2, Variant::Graded, Window::new(7), inner).unwrap();
    assert_eq!((sol.dim(), sol.global_dim()), (1, 1));
    let eta = make_generator::<F3>(&m, GeneratorSpec::EtaPower(1), inner).unwrap();
    assert!(sol.contains(&eta));
}

#[test]
fn solver_basis_elements_are_central() {
    for (r, n, mm) in [(1, 2, 0), (2, 3, 0), (1, 1, 0), (2, 2, 1)] {
        let m = model(r, n, mm);
        let margin = window_margin(m.params());
        let inner = Window::new(margin + 1);
        let outer = Window::new(2 * margin + 1);
        for p in 0..=(2 * n as u32) {
            for variant in [Variant::Graded, Variant::Commutative] {
                let sol = solve_component::<F3>(&m, p, variant, outer, inner).unwrap();
                for el in sol.basis(&m) {
                    let verdict = check_membership(&m, &el, Window::new(1)).unwrap();
                    assert!(
                        verdict.is_none(),
                        "({r}, {n}, {mm}) p={p} {variant}: {}",
                        verdict.unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn solutions_stabilize() {
    let m = model(2, 3, 0);
    let inner = Window::new(2);
    let w = 2 + window_margin(m.params());
    for p in 0..=6 {
        let a = solve_component::<F3>(&m, p, Variant::Graded, Window::new(w), inner).unwrap();
        let b = solve_component::<F3>(&m, p, Variant::Graded, Window::new(w + 1), inner).unwrap();
        assert_eq!(a.dim(), b.dim(), "p={p}");
        assert_eq!(a.class_dims, b.class_dims);
        assert!(a.space.contains_subspace(&b.space));
    }
}

#[test]
fn identity_is_neutral_and_products_commute_up_to_sign() {
    let m = model(1, 2, 0);
    let window = Window::new(6);
    let id = make_generator::<F3>(&m, GeneratorSpec::Identity, window).unwrap();
    let elements: Vec<CenterElement<F3>> = [
        GeneratorSpec::EtaZero(1),
        GeneratorSpec::EtaZero(3),
        GeneratorSpec::EtaPrime(0),
        GeneratorSpec::EtaPrime(2),
    ]
    .into_iter()
    .map(|s| make_generator(&m, s, window).unwrap())
    .collect();
    for a in &elements {
        assert_eq!(&multiply(&m, &id, a), a);
        assert_eq!(&multiply(&m, a, &id), a);
        for b in &elements {
            let ab = multiply(&m, a, b);
            let ba = multiply(&m, b, a).scale(F3::sign((a.degree() * b.degree()) as i64));
            assert_eq!(ab.restrict(Window::new(2)), ba.restrict(Window::new(2)));
            assert!(ab.is_zero());
        }
    }
}

#[test]
fn powers_of_eta_do_not_vanish() {
    let m = model(2, 2, 0);
    let window = Window::new(10);
    let eta = make_generator::<F3>(&m, GeneratorSpec::EtaPower(1), window).unwrap();
    let mut power = eta.clone();
    for k in 2..=4 {
        power = multiply(&m, &power, &eta);
        assert_eq!(
            power,
            make_generator(&m, GeneratorSpec::EtaPower(k), window).unwrap()
        );
        assert!(!power.is_zero());
    }
}

#[test]
fn layout_columns_round_trip() {
    let m = model(1, 2, 1);
    let layout = Layout::new(&m, 0, Window::new(2));
    for col in 0..layout.cols() {
        let (v, b) = layout.entry(col);
        assert_eq!(layout.column(&v, b), Some(col));
    }
    let id = make_generator::<F3>(&m, GeneratorSpec::Identity, Window::new(2)).unwrap();
    let vec = layout.vector_of(&id);
    assert_eq!(layout.element_of(&m, Variant::Graded, &vec), id);
}
