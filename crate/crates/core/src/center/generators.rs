use std::fmt;

use super::{CenterElement, CenterError, Variant};
use crate::model::{ArrowKind, Basis, Family, Model, Morphism, Vertex, Window};
use crate::Field;

/// The explicit elements spanning the centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorSpec {
    /// The identity transformation, degree 0.
    Identity,
    /// `η'^(q)` for `r = n - 1`: signed `e''` loops on one `Y` class, degree `n`.
    EtaPrime(u32),
    /// `η''^(q)` for `r = n - 1`: unsigned `e''` loops on one `Y` class, degree `n`.
    EtaDoublePrime(u32),
    /// `η^(q)` for `r = 1`, `m = 0`: the `e'` endomorphism on one `X` class, degree 0.
    EtaZero(u32),
    /// `η^k` for `r = n`, `k >= 1`: `f'` shifts by `k (n + m)`, degree `k n`.
    EtaPower(u32),
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Identity => write!(f, "Id"),
            GeneratorSpec::EtaPrime(q) => write!(f, "eta'({q})"),
            GeneratorSpec::EtaDoublePrime(q) => write!(f, "eta''({q})"),
            GeneratorSpec::EtaZero(q) => write!(f, "eta0({q})"),
            GeneratorSpec::EtaPower(k) => write!(f, "eta^{k}"),
        }
    }
}

impl std::str::FromStr for GeneratorSpec {
    type Err = String;

    /// Parses the [`Display`](fmt::Display) form: `id`, `eta'(q)`,
    /// `eta''(q)`, `eta0(q)` or `eta^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || {
            format!("unknown generator `{s}` (expected id, eta'(q), eta''(q), eta0(q) or eta^k)")
        };
        let number = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let arg = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
        };
        if s == "id" || s == "Id" {
            Ok(GeneratorSpec::Identity)
        } else if let Some(k) = s.strip_prefix("eta^") {
            Ok(GeneratorSpec::EtaPower(number(k)?))
        } else if let Some(q) = arg("eta''") {
            Ok(GeneratorSpec::EtaDoublePrime(number(q)?))
        } else if let Some(q) = arg("eta'") {
            Ok(GeneratorSpec::EtaPrime(number(q)?))
        } else if let Some(q) = arg("eta0") {
            Ok(GeneratorSpec::EtaZero(number(q)?))
        } else {
            Err(bad())
        }
    }
}

impl GeneratorSpec {
    pub fn degree(&self, model: &Model) -> u32 {
        let n = model.params().n() as u32;
        match self {
            GeneratorSpec::Identity | GeneratorSpec::EtaZero(_) => 0,
            GeneratorSpec::EtaPrime(_) | GeneratorSpec::EtaDoublePrime(_) => n,
            GeneratorSpec::EtaPower(k) => k * n,
        }
    }

    /// The variant the element is constructed for.
    pub fn variant(&self) -> Variant {
        match self {
            GeneratorSpec::EtaDoublePrime(_) | GeneratorSpec::EtaPower(_) => Variant::Commutative,
            _ => Variant::Graded,
        }
    }

    pub fn is_admissible(&self, model: &Model) -> bool {
        let p = model.params();
        let (r, n, m) = (p.r(), p.n(), p.m());
        match self {
            GeneratorSpec::Identity => true,
            GeneratorSpec::EtaPrime(_) | GeneratorSpec::EtaDoublePrime(_) => r == n - 1,
            GeneratorSpec::EtaZero(_) => r == 1 && m == 0,
            GeneratorSpec::EtaPower(k) => r == n && *k >= 1,
        }
    }
}

/// The `Y` object of index 0 in the `Σ`-orbit of class `q`.
fn y_class_base(model: &Model, q: i64) -> Vertex {
    Vertex::new(Family::Y, 0, 0, model.params().n() + q)
}

/// `ε(i, v) = (-1)^{n p}` where `Y_v^(i) = Σ^p Y_(0, n+q)^(0)`.
///
/// With `r = n - 1` a full turn `Σ^r` is `τ`, so `p = i + j r` where `j` is
/// read off the first coordinate after the partial turn `Σ^i`.
pub(crate) fn orbit_exponent(model: &Model, v: &Vertex) -> i64 {
    let n = model.params().n();
    let r = model.params().r();
    let q = v.class(n, model.params().m()).expect("Y vertex");
    let partial = model.sigma_pow(&y_class_base(model, q), v.index as i64);
    let j = partial.a - v.a;
    let p = v.index as i64 + j * r;
    debug_assert_eq!(model.sigma_pow(&y_class_base(model, q), p), *v);
    p
}

pub fn make_generator<F: Field>(
    model: &Model,
    spec: GeneratorSpec,
    window: Window,
) -> Result<CenterElement<F>, CenterError> {
    if !spec.is_admissible(model) {
        return Err(CenterError::Inadmissible {
            spec,
            params: model.params(),
        });
    }
    let params = model.params();
    let (n, m) = (params.n(), params.m());
    let degree = spec.degree(model);
    let mut values = Vec::new();
    for v in model.enumerate_vertices(window) {
        let target = model.sigma_pow(&v, degree as i64);
        let value = match spec {
            GeneratorSpec::Identity => Some(Morphism::identity(v)),
            GeneratorSpec::EtaZero(q) => (v.family == Family::X && v.b - v.a == q as i64)
                .then(|| Morphism::arrow(model, ArrowKind::EPrime, v, v))
                .transpose()?,
            GeneratorSpec::EtaPrime(q) | GeneratorSpec::EtaDoublePrime(q) => {
                if v.family == Family::Y && v.class(n, m) == Some(q as i64) {
                    let coeff = match spec {
                        GeneratorSpec::EtaPrime(_) => F::sign(n * orbit_exponent(model, &v)),
                        _ => F::one(),
                    };
                    Some(Morphism::new(
                        model,
                        v,
                        target,
                        [(Basis::Arrow(ArrowKind::EDouble), coeff)],
                    )?)
                } else {
                    None
                }
            }
            GeneratorSpec::EtaPower(k) => {
                let shift = k as i64 * (n + m);
                (v.family == Family::X && v.class(n, m).is_some_and(|c| shift <= c))
                    .then(|| Morphism::arrow(model, ArrowKind::FPrime, v, target))
                    .transpose()?
            }
        };
        if let Some(f) = value {
            values.push(f);
        }
    }
    CenterElement::from_values(model, degree, spec.variant(), window, values)
}
