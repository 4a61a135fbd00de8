//! The combinatorial category of indecomposable perfect complexes of `Λ(r, n, m)`.
//!
//! Objects are lattice points `(a, b)` in one of the families `X`, `Y`, `Z`
//! with a cyclic index `i`. Hom spaces between two objects have a basis of
//! generator arrows (at most one per degree), plus the identity on
//! endomorphisms. The composite of generators of degrees `p` and `q` is the
//! generator of degree `p + q` between the outer objects, or zero when there
//! is none.
//!
//! For `r = n` only the `X` family exists and the index runs over `[0, n)`;
//! otherwise all three families exist with index in `[0, r)`.

mod dot;
mod morphism;
mod vertex;

pub use dot::emit_ar_dot;
pub use morphism::{Basis, Morphism};
pub use vertex::{Arrow, ArrowKind, Family, Vertex};

use arrayvec::ArrayVec;
use thiserror::Error;

use crate::gentle::OmegaParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("index {index} out of range (the model has {count} indices)")]
    IndexOutOfRange { index: u32, count: u32 },
    #[error("{0} is not an object of the model")]
    NoSuchVertex(Vertex),
    #[error("cannot compose: source of the outer morphism {outer} differs from target of the inner one {inner}")]
    NotComposable { outer: Vertex, inner: Vertex },
    #[error("{basis} is not a basis element of Hom({from}, {to})")]
    NotAHomElement {
        basis: Basis,
        from: Vertex,
        to: Vertex,
    },
    #[error("window half-width {0} exceeds the limit {1}")]
    WindowTooLarge(i64, i64),
}

/// Coordinate box `[-W, W]^2` used to truncate the infinite vertex sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Window {
    pub half_width: i64,
}

impl Window {
    pub fn new(half_width: i64) -> Self {
        assert!(half_width >= 0, "window half-width must be nonnegative");
        Window { half_width }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.a.abs() <= self.half_width && v.b.abs() <= self.half_width
    }

    pub fn shrink(&self, by: i64) -> Option<Window> {
        (self.half_width >= by).then(|| Window::new(self.half_width - by))
    }

    fn coords(&self) -> impl Iterator<Item = (i64, i64)> {
        let w = self.half_width;
        (-w..=w).flat_map(move |a| (-w..=w).map(move |b| (a, b)))
    }
}

/// A solution `τX = Σ^p X` found by [`Model::tau_sigma_witnesses`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicityWitness {
    pub family: Family,
    pub p: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Model {
    params: OmegaParams,
}

#[derive(Debug, Clone, Copy)]
struct NeighbourBox {
    family: Family,
    index: u32,
    a: (i64, i64),
    b: (i64, i64),
}

fn delta(x: bool) -> i64 {
    x as i64
}

impl Model {
    pub fn new(params: OmegaParams) -> Self {
        Model { params }
    }

    pub fn params(&self) -> OmegaParams {
        self.params
    }

    /// `r = n`, i.e. infinite global dimension.
    pub fn is_infinite_gldim(&self) -> bool {
        self.params.r() == self.params.n()
    }

    /// Number of values the cyclic index takes: `r` if `r < n`, else `n`.
    pub fn index_count(&self) -> u32 {
        self.params.r() as u32
    }

    pub fn families(&self) -> &'static [Family] {
        if self.is_infinite_gldim() {
            &[Family::X]
        } else {
            &[Family::X, Family::Y, Family::Z]
        }
    }

    fn next(&self, i: u32) -> u32 {
        (i + 1) % self.index_count()
    }

    fn prev(&self, i: u32) -> u32 {
        (i + self.index_count() - 1) % self.index_count()
    }

    fn first(&self, i: u32) -> i64 {
        delta(i == 0)
    }

    fn last(&self, i: u32) -> i64 {
        delta(i + 1 == self.index_count())
    }

    fn check_index(&self, i: u32) -> Result<(), ModelError> {
        if i < self.index_count() {
            Ok(())
        } else {
            Err(ModelError::IndexOutOfRange {
                index: i,
                count: self.index_count(),
            })
        }
    }

    /// Membership of `(a, b)` in the index set of `family` at index `i`.
    pub fn vertex_exists(
        &self,
        family: Family,
        i: u32,
        a: i64,
        b: i64,
    ) -> Result<bool, ModelError> {
        self.check_index(i)?;
        let (n, m) = (self.params.n(), self.params.m());
        Ok(match family {
            Family::X => a <= b + self.first(i) * m,
            Family::Y => !self.is_infinite_gldim() && a + self.first(i) * n <= b,
            Family::Z => !self.is_infinite_gldim(),
        })
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.vertex_exists(v.family, v.index, v.a, v.b)
            .unwrap_or(false)
    }

    pub fn vertex(&self, family: Family, i: u32, a: i64, b: i64) -> Result<Vertex, ModelError> {
        let v = Vertex::new(family, i, a, b);
        if self.vertex_exists(family, i, a, b)? {
            Ok(v)
        } else {
            Err(ModelError::NoSuchVertex(v))
        }
    }

    /// The generator arrow kinds from `v` to `w`, in increasing degree.
    ///
    /// Both vertices are assumed to exist.
    pub fn arrow_kinds(&self, v: &Vertex, w: &Vertex) -> ArrayVec<ArrowKind, 3> {
        debug_assert!(self.contains(v) && self.contains(w));
        let mut out = ArrayVec::new();
        let (n, m) = (self.params.n(), self.params.m());
        let (i, a, b) = (v.index, v.a, v.b);
        let (x, y) = (w.a, w.b);
        let same = w.index == i;
        let succ = w.index == self.next(i);
        let between = |lo: i64, t: i64, hi: i64| lo <= t && t <= hi;
        let m0 = self.first(i) * m;
        let ml = self.last(i) * m;
        let n0 = self.first(i) * n;
        let nl = self.last(i) * n;
        use ArrowKind::*;
        use Family::*;
        match (v.family, w.family) {
            (X, X) => {
                if same && w != v && between(a, x, b + m0) && y >= b {
                    out.push(FPrime);
                }
                if succ && x <= a + ml && between(a, y, b + m0) {
                    out.push(EPrime);
                }
            }
            (X, Z) => {
                if same && between(a, x, b + m0) {
                    out.push(GPrime);
                }
            }
            (Y, Y) => {
                if same && w != v && between(a, x, b - n0) && y >= b {
                    out.push(FDouble);
                }
                if succ && x <= a - nl && between(a, y, b - n0) {
                    out.push(EDouble);
                }
            }
            (Y, Z) => {
                if same && between(a, y, b - n0) {
                    out.push(GDouble);
                }
            }
            (Z, Z) => {
                if same && w != v && x >= a && y >= b {
                    out.push(F);
                }
                if succ && x <= a + ml && y <= b - nl {
                    out.push(EZ);
                }
            }
            (Z, X) => {
                if succ && x <= a + ml && y >= a {
                    out.push(HPrime);
                }
            }
            (Z, Y) if succ && x <= b - nl && y >= b => {
                out.push(HDouble);
            }
            _ => {}
        }
        out
    }

    pub fn arrows_between(&self, v: &Vertex, w: &Vertex) -> ArrayVec<Arrow, 3> {
        self.arrow_kinds(v, w)
            .into_iter()
            .map(|kind| Arrow {
                kind,
                source: *v,
                target: *w,
            })
            .collect()
    }

    /// The basis element of `Hom(v, w)` of the given degree, if any.
    ///
    /// Degree zero on an endomorphism space is the identity.
    pub fn basis_of_degree(&self, v: &Vertex, w: &Vertex, degree: u8) -> Option<Basis> {
        if degree == 0 && v == w {
            return Some(Basis::Identity);
        }
        self.arrow_kinds(v, w)
            .into_iter()
            .find(|k| k.degree() == degree)
            .map(Basis::Arrow)
    }

    /// Basis of `Hom(v, w)`: identity first when `v = w`, then arrows by degree.
    pub fn hom_basis_between(&self, v: &Vertex, w: &Vertex) -> ArrayVec<Basis, 4> {
        let mut out = ArrayVec::new();
        if v == w {
            out.push(Basis::Identity);
        }
        out.extend(self.arrow_kinds(v, w).into_iter().map(Basis::Arrow));
        out
    }

    fn shift_vector(&self, family: Family, i: u32) -> (i64, i64) {
        let (n, m) = (self.params.n(), self.params.m());
        let (first, last) = (self.first(i), self.last(i));
        match family {
            Family::X => (1 + last * m, 1 + first * m),
            Family::Y => (1 - last * n, 1 - first * n),
            Family::Z => (1 + last * m, 1 - last * n),
        }
    }

    /// Boxes of candidate endpoints for arrows leaving (`outgoing`) or
    /// entering `v`, one per arrow kind that can start or end in `v`'s family.
    fn neighbour_boxes(
        &self,
        v: &Vertex,
        outgoing: bool,
    ) -> ArrayVec<(ArrowKind, NeighbourBox), 4> {
        use ArrowKind::*;
        const LO: i64 = i64::MIN;
        const HI: i64 = i64::MAX;
        let (n, m) = (self.params.n(), self.params.m());
        let mut out = ArrayVec::new();
        let (a, b) = (v.a, v.b);
        let mut push = |kind: ArrowKind, index: u32, ar: (i64, i64), br: (i64, i64)| {
            let family = if outgoing {
                kind.target_family()
            } else {
                kind.source_family()
            };
            out.push((
                kind,
                NeighbourBox {
                    family,
                    index,
                    a: ar,
                    b: br,
                },
            ));
        };
        if outgoing {
            let i = v.index;
            let j = self.next(i);
            let (m0, ml) = (self.first(i) * m, self.last(i) * m);
            let (n0, nl) = (self.first(i) * n, self.last(i) * n);
            match v.family {
                Family::X => {
                    push(FPrime, i, (a, b + m0), (b, HI));
                    push(GPrime, i, (a, b + m0), (LO, HI));
                    push(EPrime, j, (LO, a + ml), (a, b + m0));
                }
                Family::Y => {
                    push(FDouble, i, (a, b - n0), (b, HI));
                    push(GDouble, i, (LO, HI), (a, b - n0));
                    push(EDouble, j, (LO, a - nl), (a, b - n0));
                }
                Family::Z => {
                    push(F, i, (a, HI), (b, HI));
                    push(HPrime, j, (LO, a + ml), (a, HI));
                    push(HDouble, j, (LO, b - nl), (b, HI));
                    push(EZ, j, (LO, a + ml), (LO, b - nl));
                }
            }
        } else {
            // v is the target (x, y); the boxes bound the source (a, b)
            let (x, y) = (a, b);
            let j = v.index;
            let i = self.prev(j);
            let (m0, ml) = (self.first(i) * m, self.last(i) * m);
            let (n0, nl) = (self.first(i) * n, self.last(i) * n);
            let (sm0, sn0) = (self.first(j) * m, self.first(j) * n);
            match v.family {
                Family::X => {
                    push(FPrime, j, (LO, x), (x - sm0, y));
                    push(EPrime, i, (x - ml, y), (y - m0, HI));
                    push(HPrime, i, (x - ml, y), (LO, HI));
                }
                Family::Y => {
                    push(FDouble, j, (LO, x), (x + sn0, y));
                    push(EDouble, i, (x + nl, y), (y + n0, HI));
                    push(HDouble, i, (LO, HI), (x + nl, y));
                }
                Family::Z => {
                    push(F, j, (LO, x), (LO, y));
                    push(GPrime, j, (LO, x), (x - sm0, HI));
                    push(GDouble, j, (LO, y), (y + sn0, HI));
                    push(EZ, i, (x - ml, HI), (y + nl, HI));
                }
            }
        }
        out
    }

    fn neighbours(&self, v: &Vertex, window: Window, outgoing: bool) -> Vec<Arrow> {
        let w = window.half_width;
        let mut out = Vec::new();
        for (kind, bx) in self.neighbour_boxes(v, outgoing) {
            if !self.families().contains(&bx.family) {
                continue;
            }
            let (a_lo, a_hi) = (bx.a.0.max(-w), bx.a.1.min(w));
            let (b_lo, b_hi) = (bx.b.0.max(-w), bx.b.1.min(w));
            for a in a_lo..=a_hi {
                for b in b_lo..=b_hi {
                    let u = Vertex::new(bx.family, bx.index, a, b);
                    if !self.contains(&u) {
                        continue;
                    }
                    let (source, target) = if outgoing { (*v, u) } else { (u, *v) };
                    if self.arrow_kinds(&source, &target).contains(&kind) {
                        out.push(Arrow {
                            kind,
                            source,
                            target,
                        });
                    }
                }
            }
        }
        out
    }

    /// Generator arrows out of `v` whose target lies in the window.
    pub fn arrows_from(&self, v: &Vertex, window: Window) -> Vec<Arrow> {
        self.neighbours(v, window, true)
    }

    /// Generator arrows into `v` whose source lies in the window.
    pub fn arrows_into(&self, v: &Vertex, window: Window) -> Vec<Arrow> {
        self.neighbours(v, window, false)
    }

    /// The suspension `Σ`.
    pub fn sigma(&self, v: &Vertex) -> Vertex {
        let (da, db) = self.shift_vector(v.family, v.index);
        Vertex::new(v.family, self.next(v.index), v.a + da, v.b + db)
    }

    pub fn sigma_inv(&self, v: &Vertex) -> Vertex {
        let j = self.prev(v.index);
        let (da, db) = self.shift_vector(v.family, j);
        Vertex::new(v.family, j, v.a - da, v.b - db)
    }

    /// `Σ^p` for any integer `p`.
    pub fn sigma_pow(&self, v: &Vertex, p: i64) -> Vertex {
        let mut w = *v;
        if p >= 0 {
            for _ in 0..p {
                w = self.sigma(&w);
            }
        } else {
            for _ in 0..(-p) {
                w = self.sigma_inv(&w);
            }
        }
        w
    }

    /// Auslander-Reiten translation: subtract `(1, 1)`.
    pub fn tau(&self, v: &Vertex) -> Vertex {
        Vertex::new(v.family, v.index, v.a - 1, v.b - 1)
    }

    pub fn arrow_sigma(&self, arrow: &Arrow) -> Arrow {
        Arrow {
            kind: arrow.kind,
            source: self.sigma(&arrow.source),
            target: self.sigma(&arrow.target),
        }
    }

    /// `Σ` on morphisms: each basis element goes to the same kind between the
    /// shifted endpoints, coefficients unchanged.
    pub fn sigma_morphism<F: crate::Field>(&self, f: &Morphism<F>) -> Morphism<F> {
        Morphism::from_terms_unchecked(self.sigma(&f.source()), self.sigma(&f.target()), f.terms())
    }

    pub fn sigma_pow_morphism<F: crate::Field>(&self, f: &Morphism<F>, p: u32) -> Morphism<F> {
        let p = p as i64;
        Morphism::from_terms_unchecked(
            self.sigma_pow(&f.source(), p),
            self.sigma_pow(&f.target(), p),
            f.terms(),
        )
    }

    /// `g ∘ f`.
    pub fn compose<F: crate::Field>(
        &self,
        g: &Morphism<F>,
        f: &Morphism<F>,
    ) -> Result<Morphism<F>, ModelError> {
        if g.source() != f.target() {
            return Err(ModelError::NotComposable {
                outer: g.source(),
                inner: f.target(),
            });
        }
        let (src, tgt) = (f.source(), g.target());
        let mut out = Morphism::zero(src, tgt);
        for (bf, xf) in f.terms() {
            for (bg, xg) in g.terms() {
                let d = bf.degree() + bg.degree();
                if let Some(basis) = self.basis_of_degree(&src, &tgt, d) {
                    out.add_term(basis, xf * xg);
                }
            }
        }
        Ok(out)
    }

    /// All vertices with coordinates in the window, ordered by `(family, i, a, b)`.
    pub fn enumerate_vertices(&self, window: Window) -> Vec<Vertex> {
        let mut out = Vec::new();
        for &family in self.families() {
            for i in 0..self.index_count() {
                for (a, b) in window.coords() {
                    if self.vertex_exists(family, i, a, b).expect("index in range") {
                        out.push(Vertex::new(family, i, a, b));
                    }
                }
            }
        }
        out
    }

    /// All generator arrows with both endpoints in the window, ordered by
    /// source, then target, then degree.
    pub fn enumerate_arrows(&self, window: Window) -> Vec<Arrow> {
        let verts = self.enumerate_vertices(window);
        let mut out = Vec::new();
        for v in &verts {
            for w in &verts {
                out.extend(self.arrows_between(v, w));
            }
        }
        out
    }

    /// Exhaustive search for `τv = Σ^p v` with `|p| <= 2(n + m) + 2`.
    ///
    /// Every vertex of the window `[-1, 1]^2` is tried; for each family the
    /// solution with the smallest `|p|` (negative first) is reported.
    pub fn tau_sigma_witnesses(&self) -> Vec<PeriodicityWitness> {
        let bound = 2 * (self.params.n() + self.params.m()) + 2;
        let verts = self.enumerate_vertices(Window::new(1));
        let mut out: Vec<PeriodicityWitness> = Vec::new();
        for &family in self.families() {
            let mut ps: Vec<i64> = (-bound..=bound).collect();
            ps.sort_by_key(|&p| (p.abs(), p));
            'search: for p in ps {
                for v in verts.iter().filter(|v| v.family == family) {
                    if self.sigma_pow(v, p) == self.tau(v) {
                        out.push(PeriodicityWitness { family, p });
                        break 'search;
                    }
                }
            }
        }
        out
    }

    pub fn tau_sigma_periodic(&self) -> bool {
        !self.tau_sigma_witnesses().is_empty()
    }
}

/// Closed form for the existence of `X` with `τX = Σ^p X`.
pub fn tau_sigma_closed_form(params: OmegaParams) -> bool {
    let (r, n, m) = (params.r(), params.n(), params.m());
    if r < n {
        r == n - 1 || (r == 1 && m == 0)
    } else {
        n == 1 && m == 0
    }
}

#[cfg(test)]
mod tests;
