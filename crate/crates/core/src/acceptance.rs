//! The acceptance checks, shared by `gentle-center check` and the
//! `acceptance` test target.
//!
//! Each check returns a [`CheckReport`] with a one-line summary. A check
//! passes when all of its equations hold and it finished within its time
//! limit (if it has one).

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::center::{
    check_membership, inner_window, make_generator, multiply, solve_component, window_margin,
    CenterElement, GeneratorSpec, Variant,
};
use crate::gentle::{build_lambda, OmegaParams};
use crate::hom::{hom_basis, hom_dim_closed_form};
use crate::model::{tau_sigma_closed_form, Arrow, ArrowKind, Basis, Model, Morphism, Window};
use crate::ring::{reconcile, theorem_case, Base};
use crate::{Field, F2, F3};

pub const ALL: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail
        )?;
        if let Some(limit) = self.limit {
            write!(f, " (limit {}s)", limit.as_secs())?;
        }
        Ok(())
    }
}

type CheckFn = fn() -> (bool, String);

/// Runs one check by id, or returns `None` for an unknown id.
pub fn run(id: u8) -> Option<CheckReport> {
    let (title, limit, body): (&'static str, Option<u64>, CheckFn) = match id {
        1 => ("gentle grid", Some(1), gentle_grid),
        2 => ("model consistency", Some(30), model_consistency),
        3 => ("hom closed forms", Some(60), hom_closed_forms),
        4 => ("generator membership", None, generator_membership),
        5 => (
            "solver vs presentations",
            Some(600),
            solver_vs_presentations,
        ),
        6 => ("window stabilization", None, window_stabilization),
        7 => ("products", None, products),
        8 => ("tau-sigma periodicity", None, tau_sigma),
        9 => ("cli determinism", None, cli_determinism),
        _ => return None,
    };
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    let in_time = limit.is_none_or(|l| elapsed <= l);
    Some(CheckReport {
        id,
        title,
        passed: ok && in_time,
        detail: if in_time {
            detail
        } else {
            format!("{detail}, took {:.1}s", elapsed.as_secs_f64())
        },
        elapsed,
        limit,
    })
}

fn first_failures(failures: &[String]) -> String {
    let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
    format!("{} failure(s), e.g. {}", failures.len(), shown.join("; "))
}

fn gentle_grid() -> (bool, String) {
    let grid = OmegaParams::grid(5, 3);
    let failures: Vec<String> = grid
        .iter()
        .filter(|&&p| {
            let q = build_lambda(p);
            !(q.is_gentle() && q.is_one_cycle() && q.clock_condition() == Ok(false))
        })
        .map(|p| p.to_string())
        .collect();
    if failures.is_empty() {
        (
            true,
            format!(
                "{} quivers gentle, one-cycle, clock condition fails",
                grid.len()
            ),
        )
    } else {
        (false, first_failures(&failures))
    }
}

/// Associativity on composable generator triples and functoriality of `Σ`
/// on one window. Returns `(triples checked, failures)`.
///
/// Basis elements compose to the basis element of the summed degree between
/// the outer objects, if there is one. So `(γβ)α = γ(βα)` says: whenever
/// `Hom(u, x)` has an element of degree `|α| + |β| + |γ|`, the partial
/// composites `γβ` and `βα` are both nonzero or both zero. Every composable
/// pair is first run through [`Model::compose`] and compared with that rule;
/// the triples are then decided from a dense table of Hom degrees.
pub fn model_consistency_on(model: &Model, window: Window) -> (usize, Vec<String>) {
    type M = Morphism<F3>;
    let verts = model.enumerate_vertices(window);
    let count = verts.len();
    let index: std::collections::HashMap<_, usize> =
        verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    // arrows out of each object, by increasing degree
    let out: Vec<Vec<(usize, u8, Arrow)>> = verts
        .iter()
        .map(|v| {
            let mut arrows: Vec<(usize, u8, Arrow)> = model
                .arrows_from(v, window)
                .into_iter()
                .map(|a| (index[&a.target], a.kind.degree(), a))
                .collect();
            arrows.sort_by_key(|&(t, d, _)| (d, t));
            arrows
        })
        .collect();
    // bit d of degrees[u * count + x]: Hom(u, x) has a basis element of degree d
    let mut degrees = vec![0u8; count * count];
    for (u, arrows) in out.iter().enumerate() {
        degrees[u * count + u] |= 1;
        for &(x, d, _) in arrows {
            degrees[u * count + x] |= 1 << d;
        }
    }
    let has = |u: usize, x: usize, d: u8| d <= 2 && degrees[u * count + x] >> d & 1 == 1;
    // the same data as bitsets over x: homs[(u * 3 + d) * words ..] and the
    // arrow targets alone: targets[(u * 3 + d) * words ..]
    let words = count.div_ceil(64);
    let mut homs = vec![0u64; count * 3 * words];
    let mut targets = vec![0u64; count * 3 * words];
    for u in 0..count {
        for x in 0..count {
            for d in 0..3 {
                if has(u, x, d) {
                    homs[(u * 3 + d as usize) * words + x / 64] |= 1 << (x % 64);
                }
            }
        }
        for &(x, d, _) in &out[u] {
            targets[(u * 3 + d as usize) * words + x / 64] |= 1 << (x % 64);
        }
    }
    fn row(table: &[u64], words: usize, u: usize, d: u8) -> &[u64] {
        let start = (u * 3 + d as usize) * words;
        &table[start..start + words]
    }
    let shifted: Vec<_> = verts.iter().map(|v| model.sigma(v)).collect();
    let as_morphism = |a: &Arrow| {
        M::from_terms_unchecked(a.source, a.target, [(Basis::Arrow(a.kind), F3::new(1))])
    };

    let results: Vec<(usize, Vec<String>)> = (0..count)
        .into_par_iter()
        .map(|u| {
            let mut checked = 0;
            let mut failures = Vec::new();
            let vu = verts[u];
            if model.sigma_morphism(&M::identity(vu)) != M::identity(model.sigma(&vu)) {
                failures.push(format!("Σ(id) at {vu}"));
            }
            let (su, su_inv) = (model.sigma(&vu), model.sigma_inv(&vu));
            // arrows u -> x and Σu -> Σx, kept for the composites below
            let mut own_kinds = Vec::with_capacity(count);
            let mut shifted_kinds = Vec::with_capacity(count);
            for (x, vx) in verts.iter().enumerate() {
                let kinds = model.arrow_kinds(&vu, vx);
                let up = model.arrow_kinds(&su, &shifted[x]);
                if up != kinds || model.arrow_kinds(&su_inv, &model.sigma_inv(vx)) != kinds {
                    failures.push(format!("Σ changes the arrows {vu} -> {vx}"));
                }
                shifted_kinds.push(up);
                own_kinds.push(kinds);
            }
            for &(v, da, alpha) in &out[u] {
                let a = as_morphism(&alpha);
                if model.sigma_morphism(&a).terms().ne(a.terms())
                    || model.sigma_morphism(&a).source() != shifted[u]
                    || model.sigma_morphism(&a).target() != shifted[v]
                {
                    failures.push(format!("Σ({alpha}) is not the arrow of the same kind"));
                }
                for &(w, db, beta) in &out[v] {
                    let dab = da + db;
                    let ba = model.compose(&as_morphism(&beta), &a).expect("composable");
                    let composite = |kinds: &[ArrowKind]| {
                        if dab == 0 && u == w {
                            Some(Basis::Identity)
                        } else {
                            kinds
                                .iter()
                                .find(|k| k.degree() == dab)
                                .map(|&k| Basis::Arrow(k))
                        }
                    };
                    let expected = M::from_terms_unchecked(
                        vu,
                        verts[w],
                        composite(&own_kinds[w]).map(|b| (b, F3::new(1))),
                    );
                    if ba != expected || has(u, w, dab) == ba.is_zero() {
                        failures.push(format!("{beta} ∘ {alpha} = {ba}"));
                    }
                    // Σβ ∘ Σα is the basis element of degree |α| + |β| from Σu to Σw
                    let s_expected = M::from_terms_unchecked(
                        shifted[u],
                        shifted[w],
                        composite(&shifted_kinds[w]).map(|b| (b, F3::new(1))),
                    );
                    if M::from_terms_unchecked(shifted[u], shifted[w], ba.terms()) != s_expected {
                        failures.push(format!("Σ({beta} ∘ {alpha})"));
                    }
                    checked += out[w].len();
                    if dab > 2 {
                        continue;
                    }
                    // beyond total degree 2 both sides vanish; below it, the
                    // γ of each degree are decided 64 at a time
                    let ab = has(u, w, dab);
                    for dc in 0..=(2 - dab) {
                        let gammas = row(&targets, words, w, dc);
                        let total = row(&homs, words, u, dab + dc);
                        let partial = row(&homs, words, v, db + dc);
                        for (k, ((&g, &t), &pa)) in
                            gammas.iter().zip(total).zip(partial).enumerate()
                        {
                            let bad = g & t & if ab { !pa } else { pa };
                            if bad != 0 {
                                let x = k * 64 + bad.trailing_zeros() as usize;
                                failures.push(format!(
                                    "(γ ∘ {beta}) ∘ {alpha} with γ: {} -> {} of degree {dc}",
                                    verts[w], verts[x]
                                ));
                            }
                        }
                    }
                }
            }
            (checked, failures)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    (checked, failures)
}

fn model_consistency() -> (bool, String) {
    let mut total = 0;
    let mut failures = Vec::new();
    for params in OmegaParams::grid(4, 2) {
        let (checked, f) = model_consistency_on(&Model::new(params), Window::new(5));
        total += checked;
        failures.extend(f.into_iter().map(|s| format!("{params}: {s}")));
    }
    if failures.is_empty() {
        (
            true,
            format!("{total} composable triples associative, Σ functorial"),
        )
    } else {
        (false, first_failures(&failures))
    }
}

fn hom_closed_forms() -> (bool, String) {
    let grid = OmegaParams::grid(5, 3);
    let results: Vec<(usize, Vec<String>)> = grid
        .par_iter()
        .map(|&params| {
            let model = Model::new(params);
            let mut count = 0;
            let mut failures = Vec::new();
            for v in model.enumerate_vertices(Window::new(6)) {
                for p in 0..=(2 * params.n() as u32 + 2) {
                    count += 1;
                    let basis = hom_basis(&model, &v, p).expect("vertex exists").dim();
                    let closed =
                        hom_dim_closed_form(&model, &v, p).expect("vertex exists") as usize;
                    if basis != closed {
                        failures.push(format!("{params} {v} p={p}: {basis} vs {closed}"));
                    }
                }
            }
            (count, failures)
        })
        .collect();
    let count: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    if failures.is_empty() {
        (true, format!("{count} (object, degree) pairs agree"))
    } else {
        (false, first_failures(&failures))
    }
}

/// Whether `spec` is expected to be central in `variant` over a field of
/// characteristic `char`.
pub fn expected_member(
    params: OmegaParams,
    spec: GeneratorSpec,
    variant: Variant,
    char: u32,
) -> bool {
    let n = params.n() as u32;
    let signs_agree = char == 2 || n.is_multiple_of(2);
    match (spec, variant) {
        (GeneratorSpec::Identity | GeneratorSpec::EtaZero(_), _) => true,
        (GeneratorSpec::EtaPrime(_), Variant::Graded) => true,
        (GeneratorSpec::EtaPrime(_), Variant::Commutative) => signs_agree,
        (GeneratorSpec::EtaDoublePrime(_), Variant::Commutative) => true,
        (GeneratorSpec::EtaDoublePrime(_), Variant::Graded) => signs_agree,
        (GeneratorSpec::EtaPower(_), Variant::Commutative) => true,
        (GeneratorSpec::EtaPower(k), Variant::Graded) => char == 2 || (k * n).is_multiple_of(2),
    }
}

fn membership_cases(params: OmegaParams) -> Vec<GeneratorSpec> {
    let (r, n, m) = (params.r(), params.n(), params.m());
    let mut specs = Vec::new();
    for q in 0..=3 {
        if r == n - 1 {
            specs.push(GeneratorSpec::EtaPrime(q));
            specs.push(GeneratorSpec::EtaDoublePrime(q));
        }
        if r == 1 && m == 0 {
            specs.push(GeneratorSpec::EtaZero(q));
        }
    }
    if r == n {
        specs.extend((1..=3).map(GeneratorSpec::EtaPower));
    }
    specs
}

/// Outer window for a membership check: `base`, widened when the support of
/// the generator would otherwise miss the inner window.
fn membership_window(params: OmegaParams, spec: GeneratorSpec, base: i64) -> Window {
    let margin = window_margin(params);
    let reach = match spec {
        // X objects with b - a + δ m >= k (n + m) and their suspensions
        GeneratorSpec::EtaPower(k) => (k as i64 * (params.n() + params.m()) + 1) / 2 + 2,
        _ => 0,
    };
    Window::new(base.max(reach + margin))
}

fn membership_for<F: Field>(params: OmegaParams, base: i64) -> (usize, Vec<String>) {
    let model = Model::new(params);
    let mut count = 0;
    let mut failures = Vec::new();
    for spec in membership_cases(params) {
        let outer = membership_window(params, spec, base);
        let inner = inner_window(params, outer).expect("window exceeds the margin");
        let el: CenterElement<F> = make_generator(&model, spec, outer).expect("admissible");
        let seen = el.restrict(inner);
        if !seen.support().any(|v| seen.get(&model.sigma(v)).is_some()) {
            failures.push(format!(
                "{params} {spec} is not seen on two consecutive suspensions"
            ));
        }
        for variant in [Variant::Graded, Variant::Commutative] {
            count += 1;
            let el = el.clone().with_variant(variant);
            let verdict = check_membership(&model, &el, inner).expect("margin respected");
            let expected = expected_member(params, spec, variant, F::characteristic());
            if verdict.is_none() != expected {
                failures.push(format!(
                    "{params} {spec} {variant} F{}: expected {}, got {}",
                    F::characteristic(),
                    if expected { "member" } else { "violation" },
                    verdict.map_or("member".to_string(), |v| v.to_string())
                ));
            }
        }
    }
    (count, failures)
}

fn generator_membership() -> (bool, String) {
    let results: Vec<(usize, Vec<String>)> = OmegaParams::grid(4, 2)
        .par_iter()
        .flat_map(|&p| vec![membership_for::<F2>(p, 12), membership_for::<F3>(p, 12)])
        .collect();
    let count: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    if failures.is_empty() {
        (
            true,
            format!("{count} membership verdicts as predicted (F2, F3, W >= 12)"),
        )
    } else {
        (false, first_failures(&failures))
    }
}

/// Inner half-width used by the solver checks.
const SOLVER_INNER: i64 = 3;

fn solver_vs_presentations() -> (bool, String) {
    let mut tasks = Vec::new();
    for params in OmegaParams::grid(4, 2) {
        for variant in [Variant::Graded, Variant::Commutative] {
            for char in [2u32, 3] {
                tasks.push((params, variant, char));
            }
        }
    }
    let results: Vec<(usize, Option<String>)> = tasks
        .par_iter()
        .map(|&(params, variant, char)| {
            let outer = Window::new(SOLVER_INNER + window_margin(params));
            let bound = 2 * params.n() as u32;
            let report = match char {
                2 => reconcile::<F2>(params, variant, bound, outer),
                _ => reconcile::<F3>(params, variant, bound, outer),
            }
            .expect("window exceeds the margin");
            let bad = report
                .degrees
                .iter()
                .find(|d| !d.matches())
                .map(|d| format!("{params} {variant} char {char} {d}"));
            (report.degrees.len(), bad)
        })
        .collect();
    let solves: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    if failures.is_empty() {
        (
            true,
            format!(
                "{} cases, {solves} component solves consistent",
                tasks.len()
            ),
        )
    } else {
        (false, first_failures(&failures))
    }
}

fn window_stabilization() -> (bool, String) {
    let mut failures = Vec::new();
    let mut count = 0;
    for (r, n, m) in [(1, 2, 0), (2, 3, 0), (2, 2, 0)] {
        let params = OmegaParams::new(r, n, m).expect("in Ω");
        let model = Model::new(params);
        let inner = Window::new(SOLVER_INNER);
        let w = SOLVER_INNER + window_margin(params);
        for variant in [Variant::Graded, Variant::Commutative] {
            for p in 0..=(2 * n as u32) {
                count += 1;
                let small =
                    solve_component::<F3>(&model, p, variant, Window::new(w), inner).unwrap();
                let large =
                    solve_component::<F3>(&model, p, variant, Window::new(w + 2), inner).unwrap();
                let same_space = small.dim() == large.dim()
                    && small.class_dims == large.class_dims
                    && large.space.contains_subspace(&small.space);
                if !same_space {
                    failures.push(format!(
                        "{params} {variant} p={p}: dim {} at W={w}, {} at W={}",
                        small.dim(),
                        large.dim(),
                        w + 2
                    ));
                }
            }
        }
    }
    if failures.is_empty() {
        (true, format!("{count} components unchanged from W to W+2"))
    } else {
        (false, first_failures(&failures))
    }
}

fn products() -> (bool, String) {
    type E = CenterElement<F3>;
    let mut failures = Vec::new();
    let mut count = 0;
    let mut expect = |ok: bool, what: String| {
        count += 1;
        if !ok {
            failures.push(what);
        }
    };
    let window = Window::new(10);
    for params in OmegaParams::grid(4, 2) {
        let model = Model::new(params);
        let (r, n, m) = (params.r(), params.n(), params.m());
        let gen = |spec| -> E { make_generator(&model, spec, window).expect("admissible") };
        let mut nilpotent = Vec::new();
        for q in 0..=3 {
            if r == n - 1 {
                nilpotent.push(GeneratorSpec::EtaPrime(q));
                nilpotent.push(GeneratorSpec::EtaDoublePrime(q));
            }
            if r == 1 && m == 0 {
                nilpotent.push(GeneratorSpec::EtaZero(q));
            }
        }
        for &a in &nilpotent {
            for &b in &nilpotent {
                let prod = multiply(&model, &gen(a), &gen(b));
                expect(prod.is_zero(), format!("{params} {a}·{b} != 0"));
            }
        }
        if r == n {
            let eta = gen(GeneratorSpec::EtaPower(1));
            let wide = Window::new(2 * (n + m) + 2);
            let eta_wide: E = make_generator(&model, GeneratorSpec::EtaPower(1), wide).unwrap();
            let mut power = eta_wide.clone();
            for k in 1..=4u32 {
                if k > 1 {
                    power = multiply(&model, &power, &eta_wide);
                }
                let direct: E = make_generator(&model, GeneratorSpec::EtaPower(k), wide).unwrap();
                expect(
                    !power.is_zero() && power == direct,
                    format!("{params} η^{k} is zero or differs from the f' shift"),
                );
            }
            if m == 0 && n == 1 {
                for q in 0..=3 {
                    let z = gen(GeneratorSpec::EtaZero(q));
                    expect(
                        multiply(&model, &eta, &z).is_zero(),
                        format!("{params} η·η^({q}) != 0"),
                    );
                    expect(
                        multiply(&model, &z, &eta).is_zero(),
                        format!("{params} η^({q})·η != 0"),
                    );
                }
            }
        }
    }
    if failures.is_empty() {
        (true, format!("{count} products as predicted"))
    } else {
        (false, first_failures(&failures))
    }
}

fn tau_sigma() -> (bool, String) {
    let mut failures = Vec::new();
    let grid = OmegaParams::grid(5, 3);
    for &params in &grid {
        let model = Model::new(params);
        let periodic = model.tau_sigma_periodic();
        if periodic != tau_sigma_closed_form(params) {
            failures.push(format!("{params}: search {periodic} vs closed form"));
        }
        for char in [2, 3] {
            for variant in [Variant::Graded, Variant::Commutative] {
                let pres = theorem_case(params, char, variant);
                let (base, nil) = pres.reduced_and_nil();
                if periodic == nil.is_empty() {
                    failures.push(format!(
                        "{params} char {char} {variant}: nil part vs periodicity"
                    ));
                }
                let reduced_is_field = base == Base::Field;
                if reduced_is_field == (params.r() == params.n()) {
                    failures.push(format!(
                        "{params} char {char} {variant}: reduced part vs r = n"
                    ));
                }
            }
        }
    }
    if failures.is_empty() {
        (
            true,
            format!(
                "{} parameter triples: periodicity, nil part and reduced part agree",
                grid.len()
            ),
        )
    } else {
        (false, first_failures(&failures))
    }
}

fn cli_determinism() -> (bool, String) {
    let dir = std::env::temp_dir().join(format!("gentle-center-check-{}", std::process::id()));
    if let Err(e) = std::fs::create_dir_all(&dir) {
        return (false, format!("cannot create {}: {e}", dir.display()));
    }
    let quiver = dir.join("lambda.quiver");
    let lambda = crate::cli::run([
        "gentle-center",
        "lambda",
        "--r",
        "2",
        "--n",
        "3",
        "--m",
        "1",
    ]);
    if std::fs::write(&quiver, &lambda.stdout).is_err() {
        return (false, "cannot write the quiver file".into());
    }
    let quiver = quiver.to_string_lossy().into_owned();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["validate", &quiver],
        vec!["lambda", "--r", "1", "--n", "2", "--m", "0"],
        vec![
            "hom", "--r", "1", "--n", "2", "--m", "1", "--family", "X", "--a", "0", "--b", "3",
            "--p", "2",
        ],
        vec![
            "center", "--r", "1", "--n", "2", "--m", "0", "--p", "2", "--window", "7",
        ],
        vec![
            "center",
            "--r",
            "2",
            "--n",
            "3",
            "--m",
            "0",
            "--p",
            "3",
            "--window",
            "8",
            "--generator",
            "eta'(1)",
        ],
        vec!["ring", "--r", "1", "--n", "1", "--m", "0", "--char", "2"],
        vec![
            "ring",
            "--r",
            "2",
            "--n",
            "2",
            "--m",
            "0",
            "--reconcile",
            "--window",
            "7",
        ],
        vec!["ar", "--r", "1", "--n", "1", "--m", "0", "--window", "1"],
        vec!["check", "--only", "1"],
    ];
    let mut failures = Vec::new();
    for args in &invocations {
        let argv: Vec<&str> = std::iter::once("gentle-center")
            .chain(args.iter().copied())
            .collect();
        let first = crate::cli::run(argv.clone());
        let second = crate::cli::run(argv);
        if first != second || first.code != 0 {
            failures.push(format!("{} (exit {})", args.join(" "), first.code));
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    if failures.is_empty() {
        (
            true,
            format!(
                "{} subcommand invocations repeat byte for byte",
                invocations.len()
            ),
        )
    } else {
        (false, first_failures(&failures))
    }
}
