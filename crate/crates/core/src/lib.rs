//! Graded centers of the perfect derived categories of the derived discrete
//! algebras `Λ(r, n, m)`, computed by exact linear algebra over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf`]: prime fields and sparse Gauss-Jordan elimination,
//! * [`gentle`]: gentle one-cycle quivers, the clock condition, `Λ(r, n, m)`,
//! * [`model`]: the combinatorial category of indecomposable perfect complexes,
//! * [`hom`]: the spaces `Hom(V, Σ^p V)` and their closed-form dimensions,
//! * [`center`]: natural transformations `Id -> Σ^p`, the window solver,
//!   explicit generators and products,
//! * [`ring`]: symbolic presentations of the centers and reconciliation with
//!   the solver,
//! * [`cli`]: the command-line front end.
//!
//! Everything that touches scalars is generic over [`Field`]; the aliases
//! [`F2`], [`F3`], [`F5`], [`F7`], [`F11`], [`F13`] are the concrete fields used
//! by the CLI.

pub mod acceptance;
pub mod center;
pub mod cli;
pub mod gentle;
pub mod gf;
pub mod hom;
pub mod model;
pub mod ring;

pub use gf::{Field, Fp};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;

/// Runs `$body` with the type alias `$F` bound to the prime field of
/// characteristic `$p`, or evaluates to `Err(GfError::UnsupportedPrime)`.
#[macro_export]
macro_rules! with_field {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = $crate::F2;
                Ok($body)
            }
            3 => {
                type $F = $crate::F3;
                Ok($body)
            }
            5 => {
                type $F = $crate::F5;
                Ok($body)
            }
            7 => {
                type $F = $crate::F7;
                Ok($body)
            }
            11 => {
                type $F = $crate::F11;
                Ok($body)
            }
            13 => {
                type $F = $crate::F13;
                Ok($body)
            }
            other => Err($crate::gf::GfError::UnsupportedPrime(other)),
        }
    };
}
