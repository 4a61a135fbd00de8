use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::X => "X",
            Family::Y => "Y",
            Family::Z => "Z",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" | "x" => Ok(Family::X),
            "Y" | "y" => Ok(Family::Y),
            "Z" | "z" => Ok(Family::Z),
            other => Err(format!("unknown family `{other}` (expected X, Y or Z)")),
        }
    }
}

/// An indecomposable object: family, cyclic index and lattice coordinate.
///
/// The derived order is the lexicographic order on `(family, index, a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub family: Family,
    pub index: u32,
    pub a: i64,
    pub b: i64,
}

impl Vertex {
    pub fn new(family: Family, index: u32, a: i64, b: i64) -> Self {
        Vertex {
            family,
            index,
            a,
            b,
        }
    }

    /// The Σ-invariant quantity `b - a` corrected at index 0: `b + δ·m - a`
    /// for `X`, `b - a - δ·n` for `Y`. `None` for `Z`.
    pub fn class(&self, n: i64, m: i64) -> Option<i64> {
        let first = (self.index == 0) as i64;
        match self.family {
            Family::X => Some(self.b + first * m - self.a),
            Family::Y => Some(self.b - self.a - first * n),
            Family::Z => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}({},{})", self.family, self.index, self.a, self.b)
    }
}

/// The ten kinds of generator arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowKind {
    /// `f'`: `X^(i) -> X^(i)`, degree 0.
    FPrime,
    /// `g'`: `X^(i) -> Z^(i)`, degree 1.
    GPrime,
    /// `e'`: `X^(i) -> X^(i+1)`, degree 2.
    EPrime,
    /// `f''`: `Y^(i) -> Y^(i)`, degree 0.
    FDouble,
    /// `g''`: `Y^(i) -> Z^(i)`, degree 1.
    GDouble,
    /// `e''`: `Y^(i) -> Y^(i+1)`, degree 2.
    EDouble,
    /// `f`: `Z^(i) -> Z^(i)`, degree 0.
    F,
    /// `h'`: `Z^(i) -> X^(i+1)`, degree 1.
    HPrime,
    /// `h''`: `Z^(i) -> Y^(i+1)`, degree 1.
    HDouble,
    /// degree-2 arrow `Z^(i) -> Z^(i+1)`.
    EZ,
}

impl ArrowKind {
    pub const ALL: [ArrowKind; 10] = [
        ArrowKind::FPrime,
        ArrowKind::GPrime,
        ArrowKind::EPrime,
        ArrowKind::FDouble,
        ArrowKind::GDouble,
        ArrowKind::EDouble,
        ArrowKind::F,
        ArrowKind::HPrime,
        ArrowKind::HDouble,
        ArrowKind::EZ,
    ];

    pub fn degree(self) -> u8 {
        use ArrowKind::*;
        match self {
            FPrime | FDouble | F => 0,
            GPrime | GDouble | HPrime | HDouble => 1,
            EPrime | EDouble | EZ => 2,
        }
    }

    pub fn source_family(self) -> Family {
        use ArrowKind::*;
        match self {
            FPrime | GPrime | EPrime => Family::X,
            FDouble | GDouble | EDouble => Family::Y,
            F | HPrime | HDouble | EZ => Family::Z,
        }
    }

    pub fn target_family(self) -> Family {
        use ArrowKind::*;
        match self {
            FPrime | EPrime | HPrime => Family::X,
            FDouble | EDouble | HDouble => Family::Y,
            GPrime | GDouble | F | EZ => Family::Z,
        }
    }

    /// Whether the arrow raises the cyclic index by one.
    pub fn steps_index(self) -> bool {
        use ArrowKind::*;
        matches!(self, EPrime | EDouble | EZ | HPrime | HDouble)
    }

    pub fn name(self) -> &'static str {
        use ArrowKind::*;
        match self {
            FPrime => "f'",
            GPrime => "g'",
            EPrime => "e'",
            FDouble => "f''",
            GDouble => "g''",
            EDouble => "e''",
            F => "f",
            HPrime => "h'",
            HDouble => "h''",
            EZ => "eZ",
        }
    }
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub source: Vertex,
    pub target: Vertex,
}

impl Arrow {
    pub fn degree(&self) -> u8 {
        self.kind.degree()
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.kind, self.source, self.target)
    }
}
