//! Symbolic presentations of the centers and their reconciliation with the
//! window solver.
//!
//! Every center is a trivial extension `T(A, M)`: `A` is the reduced part
//! (`F` or a polynomial ring `F[X^k]` generated in degree `k`) and `M` is a
//! square-zero ideal, a sum of copies of `F^N` (one basis vector per orbit
//! class) placed in degree 0 or `n`. When `M = 0` the presentation is just `A`.

use std::collections::BTreeMap;
use std::fmt;

use crate::center::{
    make_generator, solve_component, CenterError, ClassKey, GeneratorSpec, Subspace, Variant,
};
use crate::gentle::OmegaParams;
use crate::model::{Family, Model, Window};
use crate::Field;

/// The reduced part of a center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    /// The ground field in degree 0.
    Field,
    /// `F[X^k]`: polynomials in one generator of degree `k`.
    Poly(u32),
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Field => write!(f, "F"),
            Base::Poly(1) => write!(f, "F[X]"),
            Base::Poly(k) => write!(f, "F[X^{k}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub base: Base,
    /// Degrees of the `F^N` summands of the square-zero ideal, increasing.
    pub socle: Vec<u32>,
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.socle.is_empty() {
            return write!(f, "{}", self.base);
        }
        write!(f, "T({}, ", self.base)?;
        for (j, s) in self.socle.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            match s {
                0 => write!(f, "F^N")?,
                s => write!(f, "F^N[-{s}]")?,
            }
        }
        write!(f, ")")
    }
}

impl RingPresentation {
    fn plain(base: Base) -> Self {
        RingPresentation {
            base,
            socle: Vec::new(),
        }
    }

    fn extension(base: Base, socle: &[u32]) -> Self {
        RingPresentation {
            base,
            socle: socle.to_vec(),
        }
    }

    /// The reduced quotient `A` and the degrees of the nilpotent summands.
    pub fn reduced_and_nil(&self) -> (Base, &[u32]) {
        (self.base, &self.socle)
    }

    /// Whether the reduced part has a (one-dimensional) component in degree `p`.
    pub fn base_in_degree(&self, p: u32) -> bool {
        match self.base {
            Base::Field => p == 0,
            Base::Poly(k) => p.is_multiple_of(k),
        }
    }
}

/// The presentation of the center of `D^b(Λ(r, n, m))` over a field of
/// characteristic `char`.
pub fn theorem_case(params: OmegaParams, char: u32, variant: Variant) -> RingPresentation {
    let (r, n, m) = (params.r(), params.n(), params.m());
    let even_char = char == 2;
    let n32 = n as u32;
    if (r, n, m) == (1, 1, 0) {
        return match (variant, even_char) {
            (Variant::Graded, false) => RingPresentation::extension(Base::Poly(2), &[0]),
            _ => RingPresentation::extension(Base::Poly(1), &[0]),
        };
    }
    let kronecker_like = r == 1 && m == 0;
    if r == n && !kronecker_like {
        return match variant {
            Variant::Graded if !(n % 2 == 0 || even_char) => {
                RingPresentation::plain(Base::Poly(2 * n32))
            }
            _ => RingPresentation::plain(Base::Poly(n32)),
        };
    }
    match (r == n - 1, kronecker_like) {
        (true, true) => RingPresentation::extension(Base::Field, &[0, n32]),
        (true, false) => RingPresentation::extension(Base::Field, &[n32]),
        (false, true) if r != n => RingPresentation::extension(Base::Field, &[0]),
        _ => RingPresentation::plain(Base::Field),
    }
}

/// The explicit generators predicted to span the degree-`p` component on a
/// window, one socle generator per orbit class met by the window.
pub fn predicted_generators(
    model: &Model,
    presentation: &RingPresentation,
    variant: Variant,
    p: u32,
    window: Window,
) -> Vec<GeneratorSpec> {
    let params = model.params();
    let (n, m) = (params.n(), params.m());
    let mut out = Vec::new();
    if p == 0 {
        out.push(GeneratorSpec::Identity);
    } else if presentation.base_in_degree(p) {
        // only r = n has a polynomial reduced part; its generator has degree n
        out.push(GeneratorSpec::EtaPower(p / n as u32));
    }
    for &s in presentation.socle.iter().filter(|&&s| s == p) {
        let family = if s == 0 { Family::X } else { Family::Y };
        let mut classes: Vec<i64> = model
            .enumerate_vertices(window)
            .iter()
            .filter(|v| v.family == family && (s != 0 || v.index == 0))
            .filter_map(|v| v.class(n, m))
            .collect();
        classes.sort_unstable();
        classes.dedup();
        for q in classes {
            let q = q as u32;
            out.push(match (s, variant) {
                (0, _) => GeneratorSpec::EtaZero(q),
                (_, Variant::Graded) => GeneratorSpec::EtaPrime(q),
                (_, Variant::Commutative) => GeneratorSpec::EtaDoublePrime(q),
            });
        }
    }
    out
}

/// Solver and prediction statistics for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub p: u32,
    pub solver_dim: usize,
    pub predicted_dim: usize,
    pub solver_classes: BTreeMap<ClassKey, usize>,
    pub predicted_classes: BTreeMap<ClassKey, usize>,
    /// Every predicted generator lies in the solver's solution space.
    pub contained: bool,
}

impl DegreeReport {
    pub fn matches(&self) -> bool {
        self.contained
            && self.solver_dim == self.predicted_dim
            && self.solver_classes == self.predicted_classes
    }
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = |c: &BTreeMap<ClassKey, usize>| c.values().sum::<usize>();
        write!(
            f,
            "p={}: solver dim {} ({} on classes), predicted dim {} ({} on classes){}",
            self.p,
            self.solver_dim,
            classes(&self.solver_classes),
            self.predicted_dim,
            classes(&self.predicted_classes),
            if self.matches() { "" } else { "  MISMATCH" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct ReconcileReport {
    pub params: OmegaParams,
    pub variant: Variant,
    pub characteristic: u32,
    pub presentation: RingPresentation,
    pub inner: Window,
    pub degrees: Vec<DegreeReport>,
}

impl ReconcileReport {
    pub fn mismatch(&self) -> bool {
        self.degrees.iter().any(|d| !d.matches())
    }
}

impl fmt::Display for ReconcileReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} char {}: {}",
            self.params, self.variant, self.characteristic, self.presentation
        )?;
        for d in &self.degrees {
            writeln!(f, "  {d}")?;
        }
        write!(
            f,
            "  {}",
            if self.mismatch() {
                "MISMATCH"
            } else {
                "consistent"
            }
        )
    }
}

/// Compares the solver with the predicted generators in degrees `0..=bound`
/// on the largest inner window of `outer`.
pub fn reconcile<F: Field>(
    params: OmegaParams,
    variant: Variant,
    bound: u32,
    outer: Window,
) -> Result<ReconcileReport, CenterError> {
    let model = Model::new(params);
    let inner = crate::center::inner_window(params, outer)?;
    let presentation = theorem_case(params, F::characteristic(), variant);
    let mut degrees = Vec::new();
    for p in 0..=bound {
        let sol = solve_component::<F>(&model, p, variant, outer, inner)?;
        let mut vectors = Vec::new();
        for spec in predicted_generators(&model, &presentation, variant, p, inner) {
            let g = make_generator::<F>(&model, spec, inner)?;
            vectors.push(sol.layout.vector_of(&g));
        }
        let predicted = Subspace::new(sol.layout.cols(), vectors);
        let predicted_classes = predicted.class_dims(&sol.layout, params.n(), params.m());
        degrees.push(DegreeReport {
            p,
            solver_dim: sol.dim(),
            predicted_dim: predicted.dim(),
            solver_classes: sol.class_dims.clone(),
            predicted_classes,
            contained: sol.space.contains_subspace(&predicted),
        });
    }
    Ok(ReconcileReport {
        params,
        variant,
        characteristic: F::characteristic(),
        presentation,
        inner,
        degrees,
    })
}
