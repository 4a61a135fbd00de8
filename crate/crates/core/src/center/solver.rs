use std::collections::{BTreeMap, HashMap};
use std::fmt;

use arrayvec::ArrayVec;
use rayon::prelude::*;

use super::{check_margin, CenterElement, CenterError, Variant};
use crate::gf::{RowReducer, SparseVec};
use crate::model::{Arrow, Basis, Family, Model, Morphism, Vertex, Window};
use crate::Field;

/// Coordinates of transformations `Id -> Σ^p` on a window: one column per
/// basis element of `Hom(V, Σ^p V)` for each object `V` of the window.
#[derive(Debug, Clone)]
pub struct Layout {
    p: u32,
    window: Window,
    verts: Vec<Vertex>,
    offsets: Vec<usize>,
    bases: Vec<ArrayVec<Basis, 4>>,
    index: HashMap<Vertex, usize>,
    cols: usize,
}

impl Layout {
    pub fn new(model: &Model, p: u32, window: Window) -> Self {
        let mut layout = Layout {
            p,
            window,
            verts: Vec::new(),
            offsets: Vec::new(),
            bases: Vec::new(),
            index: HashMap::new(),
            cols: 0,
        };
        for v in model.enumerate_vertices(window) {
            let target = model.sigma_pow(&v, p as i64);
            let basis = model.hom_basis_between(&v, &target);
            if basis.is_empty() {
                continue;
            }
            layout.index.insert(v, layout.verts.len());
            layout.verts.push(v);
            layout.offsets.push(layout.cols);
            layout.cols += basis.len();
            layout.bases.push(basis);
        }
        layout
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Objects carrying at least one coordinate, in vertex order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    fn slot(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// `(column, basis element)` pairs of the object `v`.
    fn columns_of(&self, v: &Vertex) -> impl Iterator<Item = (usize, Basis)> + '_ {
        let slot = self.slot(v);
        slot.into_iter().flat_map(move |k| {
            let off = self.offsets[k];
            self.bases[k]
                .iter()
                .enumerate()
                .map(move |(j, b)| (off + j, *b))
        })
    }

    pub fn column(&self, v: &Vertex, basis: Basis) -> Option<usize> {
        self.columns_of(v)
            .find(|&(_, b)| b == basis)
            .map(|(c, _)| c)
    }

    /// The object and basis element of a column.
    pub fn entry(&self, col: usize) -> (Vertex, Basis) {
        let k = self.offsets.partition_point(|&o| o <= col) - 1;
        (self.verts[k], self.bases[k][col - self.offsets[k]])
    }

    /// Coordinates of `el` on this layout; values outside the layout are dropped.
    pub fn vector_of<F: Field>(&self, el: &CenterElement<F>) -> SparseVec<F> {
        let mut out: SparseVec<F> = Vec::new();
        for f in el.values() {
            for (col, basis) in self.columns_of(&f.source()) {
                let x = f.coefficient(basis);
                if !x.is_zero() {
                    out.push((col, x));
                }
            }
        }
        out.sort_by_key(|&(c, _)| c);
        out
    }

    pub fn element_of<F: Field>(
        &self,
        model: &Model,
        variant: Variant,
        vector: &[(usize, F)],
    ) -> CenterElement<F> {
        let mut values: BTreeMap<Vertex, Morphism<F>> = BTreeMap::new();
        for &(col, x) in vector {
            let (v, basis) = self.entry(col);
            values
                .entry(v)
                .or_insert_with(|| Morphism::zero(v, model.sigma_pow(&v, self.p as i64)))
                .add_term(basis, x);
        }
        CenterElement::from_values(model, self.p, variant, self.window, values.into_values())
            .expect("layout columns are Hom(V, Σ^p V) basis elements")
    }
}

/// An orbit class of objects: the `X` or `Y` objects with a fixed class key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub family: Family,
    pub q: i64,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} q={}", self.family, self.q)
    }
}

/// A subspace of the coordinates of a [`Layout`], kept in reduced echelon form.
#[derive(Debug, Clone)]
pub struct Subspace<F> {
    cols: usize,
    reducer: RowReducer<F>,
}

impl<F: Field> Subspace<F> {
    pub fn new(cols: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut reducer = RowReducer::new(cols);
        for v in vectors {
            reducer.insert(v);
        }
        Subspace { cols, reducer }
    }

    pub fn dim(&self) -> usize {
        self.reducer.rank()
    }

    /// Reduced echelon basis, ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.reducer.rows()
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reducer.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows().all(|r| self.contains(r))
    }

    /// For each class, the dimension of the solutions supported on it: `dim`
    /// minus the rank of the projection away from the class.
    pub fn class_dims(&self, layout: &Layout, n: i64, m: i64) -> BTreeMap<ClassKey, usize> {
        let class_of = |col: usize| {
            let (v, _) = layout.entry(col);
            v.class(n, m).map(|q| ClassKey {
                family: v.family,
                q,
            })
        };
        let mut keys: Vec<ClassKey> = (0..self.cols).filter_map(class_of).collect();
        keys.sort();
        keys.dedup();
        let col_class: Vec<Option<ClassKey>> = (0..self.cols).map(class_of).collect();
        let rows: Vec<&SparseVec<F>> = self.rows().collect();
        let dim = rows.len();
        keys.into_iter()
            .filter_map(|key| {
                let projected = rows.iter().map(|r| {
                    r.iter()
                        .filter(|&&(c, _)| col_class[c] != Some(key))
                        .copied()
                        .collect::<SparseVec<F>>()
                });
                let d = dim - crate::gf::rank_of(self.cols, projected);
                (d > 0).then_some((key, d))
            })
            .collect()
    }
}

/// The degree-`p` component of the center restricted to an inner window.
#[derive(Debug, Clone)]
pub struct ComponentSolution<F> {
    pub p: u32,
    pub variant: Variant,
    pub outer: Window,
    pub layout: Layout,
    pub space: Subspace<F>,
    pub class_dims: BTreeMap<ClassKey, usize>,
}

impl<F: Field> ComponentSolution<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension not accounted for by solutions living on a single class.
    pub fn global_dim(&self) -> usize {
        self.dim() - self.class_dims.values().sum::<usize>()
    }

    pub fn basis(&self, model: &Model) -> Vec<CenterElement<F>> {
        self.space
            .rows()
            .map(|r| self.layout.element_of(model, self.variant, r))
            .collect()
    }

    pub fn contains(&self, el: &CenterElement<F>) -> bool {
        self.space.contains(&self.layout.vector_of(el))
    }
}

fn push_arrow_rows<F: Field>(
    model: &Model,
    layout: &Layout,
    arrow: &Arrow,
    rows: &mut Vec<SparseVec<F>>,
) {
    let p = layout.p as i64;
    let (v, w) = (arrow.source, arrow.target);
    let k = arrow.kind.degree();
    let target = model.sigma_pow(&w, p);
    let mut by_degree: BTreeMap<u8, BTreeMap<usize, F>> = BTreeMap::new();
    // Σ^p(φ) ∘ η_v
    for (col, basis) in layout.columns_of(&v) {
        let d = basis.degree() + k;
        if model.basis_of_degree(&v, &target, d).is_some() {
            *by_degree
                .entry(d)
                .or_default()
                .entry(col)
                .or_insert_with(F::zero) += F::one();
        }
    }
    // η_w ∘ φ
    for (col, basis) in layout.columns_of(&w) {
        let d = basis.degree() + k;
        if model.basis_of_degree(&v, &target, d).is_some() {
            *by_degree
                .entry(d)
                .or_default()
                .entry(col)
                .or_insert_with(F::zero) -= F::one();
        }
    }
    for row in by_degree.into_values() {
        push_normalized(row, rows);
    }
}

fn push_normalized<F: Field>(row: BTreeMap<usize, F>, rows: &mut Vec<SparseVec<F>>) {
    let row: SparseVec<F> = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    if let Some(&(_, lead)) = row.first() {
        let s = lead.inv().expect("nonzero");
        rows.push(row.into_iter().map(|(c, x)| (c, x * s)).collect());
    }
}

/// Solves for all degree-`p` central elements on `outer` and restricts them
/// to `inner`.
///
/// Unknowns are the coefficients of `η_V` for every object of `outer`. The
/// equations are naturality along every arrow with both ends in `outer` and
/// the sign law for every `V` with `ΣV` in `outer`. The restriction of the
/// solution space to `inner` is exact once `inner` keeps the margin from the
/// boundary; the per-class dimensions count solutions supported on one class.
pub fn solve_component<F: Field>(
    model: &Model,
    p: u32,
    variant: Variant,
    outer: Window,
    inner: Window,
) -> Result<ComponentSolution<F>, CenterError> {
    check_margin(model.params(), outer, inner)?;
    let full = Layout::new(model, p, outer);
    let sign: F = variant.sign(p);

    let chunks: Vec<Vec<SparseVec<F>>> = full
        .vertices()
        .par_iter()
        .map(|v| {
            let mut rows = Vec::new();
            for arrow in model.arrows_from(v, outer) {
                push_arrow_rows(model, &full, &arrow, &mut rows);
            }
            for arrow in model.arrows_into(v, outer) {
                if full.slot(&arrow.source).is_none() {
                    push_arrow_rows(model, &full, &arrow, &mut rows);
                }
            }
            let sv = model.sigma(v);
            if outer.contains(&sv) {
                for (col, basis) in full.columns_of(v) {
                    let scol = full
                        .column(&sv, basis)
                        .expect("Σ maps Hom(V, Σ^p V) onto Hom(ΣV, Σ^{p+1} V)");
                    let mut row = BTreeMap::new();
                    *row.entry(scol).or_insert_with(F::zero) += F::one();
                    *row.entry(col).or_insert_with(F::zero) -= sign;
                    push_normalized(row, &mut rows);
                }
            }
            rows
        })
        .collect();
    let mut rows: Vec<SparseVec<F>> = chunks.into_iter().flatten().collect();
    rows.sort_unstable();
    rows.dedup();

    let mut reducer = RowReducer::new(full.cols());
    for row in rows {
        reducer.insert(row);
    }

    let layout = Layout::new(model, p, inner);
    let to_inner: HashMap<usize, usize> = layout
        .vertices()
        .iter()
        .flat_map(|v| layout.columns_of(v).map(move |(c, b)| (*v, c, b)))
        .map(|(v, c, b)| {
            (
                full.column(&v, b)
                    .expect("inner objects are in the outer layout"),
                c,
            )
        })
        .collect();
    let restricted = reducer.null_space().into_iter().map(|vec| {
        let mut r: SparseVec<F> = vec
            .into_iter()
            .filter_map(|(c, x)| to_inner.get(&c).map(|&ic| (ic, x)))
            .collect();
        r.sort_by_key(|&(c, _)| c);
        r
    });
    let space = Subspace::new(layout.cols(), restricted);
    let params = model.params();
    let class_dims = space.class_dims(&layout, params.n(), params.m());
    Ok(ComponentSolution {
        p,
        variant,
        outer,
        layout,
        space,
        class_dims,
    })
}
