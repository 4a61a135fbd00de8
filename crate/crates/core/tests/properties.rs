use gentle_center::center::{
    check_membership, multiply, solve_component, window_margin, CenterElement, Variant,
};
use gentle_center::gentle::{build_lambda, GentleQuiver, OmegaParams};
use gentle_center::hom::{hom_basis, hom_dim_closed_form};
use gentle_center::model::{Model, Window};
use gentle_center::{Field, F3, F5};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = OmegaParams> {
    (1i64..=4, 0i64..=2)
        .prop_flat_map(|(n, m)| (1..=n, Just(n), Just(m)))
        .prop_map(|(r, n, m)| OmegaParams::new(r, n, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_text_round_trips(p in params()) {
        let q = build_lambda(p);
        prop_assert_eq!(GentleQuiver::parse(&q.to_text()).unwrap(), q);
    }

    #[test]
    fn sigma_powers_invert(p in params(), pick in any::<prop::sample::Index>(), k in -12i64..=12) {
        let model = Model::new(p);
        let verts = model.enumerate_vertices(Window::new(4));
        let v = *pick.get(&verts);
        let w = model.sigma_pow(&v, k);
        prop_assert!(model.contains(&w));
        prop_assert_eq!(model.sigma_pow(&w, -k), v);
        prop_assert_eq!(model.sigma_pow(&model.tau(&v), k), model.tau(&w));
    }

    #[test]
    fn hom_dims_match_closed_form(p in params(), pick in any::<prop::sample::Index>(), deg in 0u32..=10) {
        let model = Model::new(p);
        let verts = model.enumerate_vertices(Window::new(8));
        let v = *pick.get(&verts);
        prop_assert_eq!(
            hom_basis(&model, &v, deg).unwrap().dim(),
            hom_dim_closed_form(&model, &v, deg).unwrap() as usize
        );
    }
}

fn random_combination<F: Field>(
    basis: &[CenterElement<F>],
    coeffs: &[i64],
) -> Option<CenterElement<F>> {
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .map(|(e, &c)| e.scale(F::from_i64(c)))
        .reduce(|a, b| a.add(&b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // Linear combinations and products of solver output stay central.
    #[test]
    fn solver_space_is_a_graded_algebra(
        (r, n, m) in prop::sample::select(vec![(1i64, 2i64, 0i64), (2, 3, 0), (1, 1, 0), (2, 2, 0), (1, 3, 0)]),
        p1 in 0u32..=4,
        p2 in 0u32..=4,
        variant in prop::sample::select(vec![Variant::Graded, Variant::Commutative]),
        coeffs in prop::collection::vec(-2i64..=2, 1..6),
    ) {
        let params = OmegaParams::new(r, n, m).unwrap();
        let model = Model::new(params);
        let margin = window_margin(params);
        let inner = Window::new(margin + 1);
        let outer = Window::new(2 * margin + 1);
        let a = solve_component::<F5>(&model, p1, variant, outer, inner).unwrap().basis(&model);
        let b = solve_component::<F5>(&model, p2, variant, outer, inner).unwrap().basis(&model);
        if let (Some(x), Some(y)) = (random_combination(&a, &coeffs), random_combination(&b, &coeffs[1..])) {
            prop_assert!(check_membership(&model, &x, Window::new(1)).unwrap().is_none());
            let xy = multiply(&model, &x, &y);
            prop_assert!(check_membership(&model, &xy, Window::new(1)).unwrap().is_none());
            // graded commutativity on the inner part
            let yx = multiply(&model, &y, &x).scale(match variant {
                Variant::Graded => F5::sign((p1 * p2) as i64),
                Variant::Commutative => F5::from_i64(1),
            });
            prop_assert_eq!(xy.restrict(Window::new(1)), yx.restrict(Window::new(1)));
        }
    }
}

#[test]
fn field_choice_does_not_change_odd_characteristic_dimensions() {
    let params = OmegaParams::new(2, 3, 0).unwrap();
    let model = Model::new(params);
    let inner = Window::new(2);
    let outer = Window::new(2 + window_margin(params));
    for p in 0..=6 {
        let a = solve_component::<F3>(&model, p, Variant::Graded, outer, inner).unwrap();
        let b = solve_component::<F5>(&model, p, Variant::Graded, outer, inner).unwrap();
        assert_eq!(a.dim(), b.dim(), "p={p}");
        assert_eq!(a.class_dims, b.class_dims, "p={p}");
    }
}
