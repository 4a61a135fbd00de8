//! Gentle quivers with one cycle and the normal forms `Λ(r, n, m)`.
//!
//! # Text format
//!
//! Line based, UTF-8, `#` starts a comment that runs to the end of the line.
//!
//! ```text
//! vertices: 1 2
//! arrow a: 1 -> 2
//! arrow b: 1 -> 2
//! relation: b a        # the path "a, then b"
//! ```
//!
//! * `vertices:` appears exactly once, before any arrow, and lists
//!   whitespace-separated vertex names.
//! * `arrow NAME: SRC -> TGT` declares an arrow; names are unique.
//! * `relation: BETA ALPHA` declares the zero relation `BETA ∘ ALPHA`, so
//!   `target(ALPHA)` must equal `source(BETA)`.
//!
//! Any other directive is rejected with its line number.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("relation {beta}{alpha} is not composable: target({alpha}) != source({beta})")]
    NotComposable { beta: String, alpha: String },
    #[error("quiver has no vertices")]
    Empty,
    #[error("quiver is not connected")]
    Disconnected,
    #[error("quiver is not one-cycle ({arrows} arrows, {vertices} vertices)")]
    NotOneCycle { arrows: usize, vertices: usize },
    #[error("(r, n, m) = ({r}, {n}, {m}) is outside Ω (need n >= 1 and 1 <= r <= n)")]
    OutsideOmega { r: i64, n: i64, m: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite connected quiver together with a set of length-two zero relations.
///
/// A relation `(beta, alpha)` stands for the path `beta ∘ alpha`: first
/// `alpha`, then `beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleQuiver {
    vertices: Vec<String>,
    arrows: Vec<QuiverArrow>,
    relations: Vec<(usize, usize)>,
}

/// One failed gentleness axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Axiom (1): more than two arrows start at the vertex.
    TooManyOutgoing {
        vertex: String,
        count: usize,
    },
    /// Axiom (1): more than two arrows end at the vertex.
    TooManyIncoming {
        vertex: String,
        count: usize,
    },
    /// Axiom (3): several continuations of the arrow avoid the relations.
    FreeSuccessors {
        arrow: String,
        count: usize,
    },
    FreePredecessors {
        arrow: String,
        count: usize,
    },
    /// Axiom (4): several continuations of the arrow lie in the relations.
    RelationSuccessors {
        arrow: String,
        count: usize,
    },
    RelationPredecessors {
        arrow: String,
        count: usize,
    },
}

impl Violation {
    pub fn axiom(&self) -> u8 {
        match self {
            Violation::TooManyOutgoing { .. } | Violation::TooManyIncoming { .. } => 1,
            Violation::FreeSuccessors { .. } | Violation::FreePredecessors { .. } => 3,
            Violation::RelationSuccessors { .. } | Violation::RelationPredecessors { .. } => 4,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ax = self.axiom();
        match self {
            Violation::TooManyOutgoing { vertex, count } => {
                write!(f, "axiom ({ax}): {count} arrows start at vertex {vertex}")
            }
            Violation::TooManyIncoming { vertex, count } => {
                write!(f, "axiom ({ax}): {count} arrows end at vertex {vertex}")
            }
            Violation::FreeSuccessors { arrow, count } => write!(
                f,
                "axiom ({ax}): {count} arrows continue {arrow} outside the relations"
            ),
            Violation::FreePredecessors { arrow, count } => write!(
                f,
                "axiom ({ax}): {count} arrows precede {arrow} outside the relations"
            ),
            Violation::RelationSuccessors { arrow, count } => write!(
                f,
                "axiom ({ax}): {count} arrows continue {arrow} inside the relations"
            ),
            Violation::RelationPredecessors { arrow, count } => write!(
                f,
                "axiom ({ax}): {count} arrows precede {arrow} inside the relations"
            ),
        }
    }
}

/// Partition of the arrows of a one-cycle quiver.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleArrows {
    pub clockwise: BTreeSet<usize>,
    pub anticlockwise: BTreeSet<usize>,
    pub non_cycle: BTreeSet<usize>,
}

impl GentleQuiver {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        arrows: impl IntoIterator<Item = (S, S, S)>,
        relations: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self, QuiverError> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateName(v.clone()));
            }
        }
        let mut qarrows = Vec::new();
        let mut aindex = HashMap::new();
        for (name, s, t) in arrows {
            let (name, s, t): (String, String, String) = (name.into(), s.into(), t.into());
            let source = *vindex.get(&s).ok_or(QuiverError::UnknownVertex(s))?;
            let target = *vindex.get(&t).ok_or(QuiverError::UnknownVertex(t))?;
            if aindex.insert(name.clone(), qarrows.len()).is_some() {
                return Err(QuiverError::DuplicateName(name));
            }
            qarrows.push(QuiverArrow {
                name,
                source,
                target,
            });
        }
        let mut rels = Vec::new();
        for (beta, alpha) in relations {
            let (beta, alpha): (String, String) = (beta.into(), alpha.into());
            let b = *aindex
                .get(&beta)
                .ok_or(QuiverError::UnknownArrow(beta.clone()))?;
            let a = *aindex
                .get(&alpha)
                .ok_or(QuiverError::UnknownArrow(alpha.clone()))?;
            if qarrows[a].target != qarrows[b].source {
                return Err(QuiverError::NotComposable { beta, alpha });
            }
            if !rels.contains(&(b, a)) {
                rels.push((b, a));
            }
        }
        let q = GentleQuiver {
            vertices,
            arrows: qarrows,
            relations: rels,
        };
        if q.vertices.is_empty() {
            return Err(QuiverError::Empty);
        }
        if !q.connected_without(None) {
            return Err(QuiverError::Disconnected);
        }
        Ok(q)
    }

    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let err = |line: usize, msg: &str| QuiverError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if vertices.is_some() {
                    return Err(err(line_no, "`vertices:` given twice"));
                }
                vertices = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("arrow ") {
                if vertices.is_none() {
                    return Err(err(line_no, "arrow declared before `vertices:`"));
                }
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line_no, "expected `arrow NAME: SRC -> TGT`"))?;
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| err(line_no, "expected `SRC -> TGT`"))?;
                let (name, s, t) = (name.trim(), s.trim(), t.trim());
                if [name, s, t]
                    .iter()
                    .any(|x| x.is_empty() || x.contains(char::is_whitespace))
                {
                    return Err(err(
                        line_no,
                        "arrow name and endpoints must be single tokens",
                    ));
                }
                arrows.push((name.to_string(), s.to_string(), t.to_string()));
            } else if let Some(rest) = line.strip_prefix("relation:") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [beta, alpha] = parts[..] else {
                    return Err(err(line_no, "expected `relation: BETA ALPHA`"));
                };
                relations.push((beta.to_string(), alpha.to_string()));
            } else {
                let word = line.split_whitespace().next().unwrap_or(line);
                return Err(err(line_no, &format!("unknown directive `{word}`")));
            }
        }
        let vertices =
            vertices.ok_or_else(|| err(text.lines().count().max(1), "missing `vertices:`"))?;
        GentleQuiver::new(vertices, arrows, relations)
    }

    /// Serializes to the text format accepted by [`GentleQuiver::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices.join(" "));
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        for &(b, a) in &self.relations {
            out.push_str(&format!(
                "relation: {} {}\n",
                self.arrows[b].name, self.arrows[a].name
            ));
        }
        out
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[QuiverArrow] {
        &self.arrows
    }

    /// Relations as `(beta, alpha)` arrow indices.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn is_relation(&self, beta: usize, alpha: usize) -> bool {
        self.relations.contains(&(beta, alpha))
    }

    /// Lists every violated gentleness axiom; empty means gentle.
    ///
    /// Axiom (2) holds by construction since relations are arrow pairs.
    pub fn gentle_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            let outgoing = self.arrows.iter().filter(|a| a.source == v).count();
            let incoming = self.arrows.iter().filter(|a| a.target == v).count();
            if outgoing > 2 {
                out.push(Violation::TooManyOutgoing {
                    vertex: name.clone(),
                    count: outgoing,
                });
            }
            if incoming > 2 {
                out.push(Violation::TooManyIncoming {
                    vertex: name.clone(),
                    count: incoming,
                });
            }
        }
        for (ai, a) in self.arrows.iter().enumerate() {
            let succ: Vec<usize> = (0..self.arrows.len())
                .filter(|&b| self.arrows[b].source == a.target)
                .collect();
            let pred: Vec<usize> = (0..self.arrows.len())
                .filter(|&g| self.arrows[g].target == a.source)
                .collect();
            let free_succ = succ.iter().filter(|&&b| !self.is_relation(b, ai)).count();
            let rel_succ = succ.len() - free_succ;
            let free_pred = pred.iter().filter(|&&g| !self.is_relation(ai, g)).count();
            let rel_pred = pred.len() - free_pred;
            let arrow = || a.name.clone();
            if free_succ > 1 {
                out.push(Violation::FreeSuccessors {
                    arrow: arrow(),
                    count: free_succ,
                });
            }
            if free_pred > 1 {
                out.push(Violation::FreePredecessors {
                    arrow: arrow(),
                    count: free_pred,
                });
            }
            if rel_succ > 1 {
                out.push(Violation::RelationSuccessors {
                    arrow: arrow(),
                    count: rel_succ,
                });
            }
            if rel_pred > 1 {
                out.push(Violation::RelationPredecessors {
                    arrow: arrow(),
                    count: rel_pred,
                });
            }
        }
        out
    }

    pub fn is_gentle(&self) -> bool {
        self.gentle_violations().is_empty()
    }

    /// Equally many arrows and vertices (connectivity is a construction invariant).
    pub fn is_one_cycle(&self) -> bool {
        self.arrows.len() == self.vertices.len()
    }

    fn connected_without(&self, skip: Option<usize>) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for (i, a) in self.arrows.iter().enumerate() {
            if Some(i) != skip {
                adj[a.source].push(a.target);
                adj[a.target].push(a.source);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Splits the arrows into clockwise, anticlockwise and non-cycle arrows.
    ///
    /// The cycle is walked starting from its smallest vertex name towards the
    /// smaller of its two cycle neighbours (ties by arrow declaration order);
    /// arrows traversed from source to target are clockwise. A loop counts as
    /// clockwise.
    pub fn cycle_arrows(&self) -> Result<CycleArrows, QuiverError> {
        if !self.is_one_cycle() {
            return Err(QuiverError::NotOneCycle {
                arrows: self.arrows.len(),
                vertices: self.vertices.len(),
            });
        }
        let mut part = CycleArrows::default();
        let mut on_cycle = Vec::new();
        for i in 0..self.arrows.len() {
            if self.connected_without(Some(i)) {
                on_cycle.push(i);
            } else {
                part.non_cycle.insert(i);
            }
        }
        if let [single] = on_cycle[..] {
            // a loop is the whole cycle
            part.clockwise.insert(single);
            return Ok(part);
        }
        let other_end = |arrow: usize, at: usize| {
            let a = &self.arrows[arrow];
            if a.source == at {
                a.target
            } else {
                a.source
            }
        };
        let start = on_cycle
            .iter()
            .flat_map(|&i| [self.arrows[i].source, self.arrows[i].target])
            .min_by(|&x, &y| self.vertices[x].cmp(&self.vertices[y]))
            .expect("cycle is nonempty");
        let first = on_cycle
            .iter()
            .copied()
            .filter(|&i| self.arrows[i].source == start || self.arrows[i].target == start)
            .min_by(|&x, &y| {
                let (ex, ey) = (other_end(x, start), other_end(y, start));
                self.vertices[ex].cmp(&self.vertices[ey]).then(x.cmp(&y))
            })
            .expect("start vertex lies on the cycle");

        let mut at = start;
        let mut arrow = first;
        loop {
            let a = &self.arrows[arrow];
            if a.source == at {
                part.clockwise.insert(arrow);
            } else {
                part.anticlockwise.insert(arrow);
            }
            at = other_end(arrow, at);
            let next = on_cycle.iter().copied().find(|&j| {
                j != arrow
                    && !part.clockwise.contains(&j)
                    && !part.anticlockwise.contains(&j)
                    && (self.arrows[j].source == at || self.arrows[j].target == at)
            });
            match next {
                Some(j) => arrow = j,
                None => break,
            }
        }
        Ok(part)
    }

    /// Counts of relations with both arrows clockwise, resp. both anticlockwise.
    pub fn clock_counts(&self) -> Result<(usize, usize), QuiverError> {
        let part = self.cycle_arrows()?;
        let count = |set: &BTreeSet<usize>| {
            self.relations
                .iter()
                .filter(|(b, a)| set.contains(b) && set.contains(a))
                .count()
        };
        Ok((count(&part.clockwise), count(&part.anticlockwise)))
    }

    pub fn clock_condition(&self) -> Result<bool, QuiverError> {
        let (cw, acw) = self.clock_counts()?;
        Ok(cw == acw)
    }
}

/// A triple `(r, n, m)` in `Ω`: `n >= 1`, `m >= 0`, `1 <= r <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaParams {
    r: u32,
    n: u32,
    m: u32,
}

impl OmegaParams {
    pub fn new(r: i64, n: i64, m: i64) -> Result<Self, QuiverError> {
        if n < 1 || m < 0 || r < 1 || r > n || n > u32::MAX as i64 || m > u32::MAX as i64 {
            return Err(QuiverError::OutsideOmega { r, n, m });
        }
        Ok(OmegaParams {
            r: r as u32,
            n: n as u32,
            m: m as u32,
        })
    }

    pub fn r(&self) -> i64 {
        self.r as i64
    }

    pub fn n(&self) -> i64 {
        self.n as i64
    }

    pub fn m(&self) -> i64 {
        self.m as i64
    }

    /// Every triple with `n <= max_n`, `m <= max_m`, in lexicographic `(n, r, m)` order.
    pub fn grid(max_n: i64, max_m: i64) -> Vec<OmegaParams> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for r in 1..=n {
                for m in 0..=max_m {
                    out.push(OmegaParams::new(r, n, m).expect("grid stays inside Ω"));
                }
            }
        }
        out
    }
}

impl fmt::Display for OmegaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.n, self.m)
    }
}

/// The quiver `Δ(n, m)` with the relations `ℜ(r, n)`.
///
/// Vertices are `-m, ..., -1, 0, ..., n-1`; arrow `a{j}` goes `j -> j+1` for
/// `j < 0` and `i -> i+1 mod n` on the cycle.
pub fn build_lambda(params: OmegaParams) -> GentleQuiver {
    let (r, n, m) = (params.r(), params.n(), params.m());
    let vertices: Vec<String> = (-m..n).map(|j| j.to_string()).collect();
    let mut arrows = Vec::new();
    for j in -m..0 {
        arrows.push((format!("a{j}"), j.to_string(), (j + 1).to_string()));
    }
    for i in 0..n {
        arrows.push((format!("a{i}"), i.to_string(), ((i + 1) % n).to_string()));
    }
    let mut relations = Vec::new();
    for i in (n - r)..=(n - 2) {
        relations.push((format!("a{}", i + 1), format!("a{i}")));
    }
    relations.push(("a0".to_string(), format!("a{}", n - 1)));
    GentleQuiver::new(vertices, arrows, relations).expect("Δ(n, m) is a valid quiver")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> GentleQuiver {
        GentleQuiver::parse("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n").unwrap()
    }

    fn names(q: &GentleQuiver, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| q.arrows()[i].name.clone()).collect()
    }

    #[test]
    fn lambda_212_is_gentle() {
        assert!(build_lambda(OmegaParams::new(1, 2, 1).unwrap()).is_gentle());
    }

    // Hand enumeration of the four axioms for the Kronecker quiver: each vertex
    // has two arrows on one side and none on the other, no arrow has any
    // continuation, so axioms (1), (3), (4) hold and (2) is vacuous.
    #[test]
    fn kronecker_is_gentle_one_cycle() {
        let q = kronecker();
        assert!(q.is_gentle());
        assert!(q.is_one_cycle());
        assert_eq!(q.clock_condition(), Ok(true));
    }

    #[test]
    fn three_arrow_star_violates_axiom_one() {
        let q = GentleQuiver::parse(
            "vertices: c x y z\narrow a: c -> x\narrow b: c -> y\narrow d: c -> z\n",
        )
        .unwrap();
        let v = q.gentle_violations();
        assert!(!q.is_gentle());
        assert!(v.iter().any(|x| x.axiom() == 1));
    }

    #[test]
    fn axiom_three_and_four_violations() {
        // a: 1 -> 2 followed by two free arrows out of 2
        let q = GentleQuiver::parse(
            "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 4\n",
        )
        .unwrap();
        assert!(q.gentle_violations().iter().any(|x| x.axiom() == 3));
        let q = GentleQuiver::parse(
            "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 4\nrelation: b a\nrelation: c a\n",
        )
        .unwrap();
        assert!(q.gentle_violations().iter().any(|x| x.axiom() == 4));
    }

    #[test]
    fn one_cycle_counts() {
        assert!(build_lambda(OmegaParams::new(2, 3, 2).unwrap()).is_one_cycle());
        let a3 =
            GentleQuiver::parse("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap();
        assert!(!a3.is_one_cycle());
        assert!(matches!(
            a3.cycle_arrows(),
            Err(QuiverError::NotOneCycle { .. })
        ));
    }

    #[test]
    fn cycle_orientation_examples() {
        let q = build_lambda(OmegaParams::new(1, 2, 0).unwrap());
        let part = q.cycle_arrows().unwrap();
        assert_eq!(names(&q, &part.clockwise), vec!["a0", "a1"]);
        assert!(part.anticlockwise.is_empty());

        let q = build_lambda(OmegaParams::new(1, 2, 1).unwrap());
        let part = q.cycle_arrows().unwrap();
        assert_eq!(names(&q, &part.non_cycle), vec!["a-1"]);

        let q = kronecker();
        let part = q.cycle_arrows().unwrap();
        assert_eq!(part.clockwise.len(), 1);
        assert_eq!(part.anticlockwise.len(), 1);
    }

    #[test]
    fn clock_condition_fails_for_lambda() {
        for (r, n, m) in [(1, 2, 0), (2, 3, 1), (1, 1, 0)] {
            let q = build_lambda(OmegaParams::new(r, n, m).unwrap());
            assert_eq!(q.clock_condition(), Ok(false), "({r}, {n}, {m})");
        }
    }

    #[test]
    fn lambda_relations() {
        let rels = |r, n, m| {
            let q = build_lambda(OmegaParams::new(r, n, m).unwrap());
            let mut v: Vec<String> = q
                .relations()
                .iter()
                .map(|&(b, a)| format!("{}{}", q.arrows()[b].name, q.arrows()[a].name))
                .collect();
            v.sort();
            (q.vertices().len(), q.arrows().len(), v)
        };
        assert_eq!(rels(1, 1, 0), (1, 1, vec!["a0a0".to_string()]));
        assert_eq!(
            rels(2, 3, 1),
            (4, 4, vec!["a0a2".to_string(), "a2a1".to_string()])
        );
        assert_eq!(
            rels(3, 3, 0),
            (
                3,
                3,
                vec!["a0a2".to_string(), "a1a0".to_string(), "a2a1".to_string()]
            )
        );
    }

    #[test]
    fn omega_membership() {
        assert!(OmegaParams::new(0, 2, 0).is_err());
        assert!(OmegaParams::new(3, 2, 0).is_err());
        assert!(OmegaParams::new(1, 0, 0).is_err());
        assert!(OmegaParams::new(1, 1, -1).is_err());
        assert_eq!(OmegaParams::grid(2, 1).len(), 6);
    }

    #[test]
    fn text_round_trip() {
        let q = build_lambda(OmegaParams::new(2, 3, 1).unwrap());
        assert_eq!(GentleQuiver::parse(&q.to_text()).unwrap(), q);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = GentleQuiver::parse("vertices: 1\n\nfrobnicate 3\n").unwrap_err();
        assert_eq!(
            e,
            QuiverError::Parse {
                line: 3,
                msg: "unknown directive `frobnicate`".into()
            }
        );
        let e = GentleQuiver::parse("arrow a: 1 -> 1\n").unwrap_err();
        assert!(matches!(e, QuiverError::Parse { line: 1, .. }));
        let e =
            GentleQuiver::parse("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation: b a\n")
                .unwrap_err();
        assert!(matches!(e, QuiverError::NotComposable { .. }));
        let e = GentleQuiver::parse("vertices: 1 2\n").unwrap_err();
        assert_eq!(e, QuiverError::Disconnected);
    }

    #[test]
    fn comments_are_ignored() {
        let q = GentleQuiver::parse(
            "# a loop\nvertices: 0   # one vertex\narrow a0: 0 -> 0\nrelation: a0 a0 # a0 a0 = 0\n",
        )
        .unwrap();
        assert_eq!(q, build_lambda(OmegaParams::new(1, 1, 0).unwrap()));
    }
}
