use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::GfError;

/// Scalar type the model, the solver and the center elements are generic over.
///
/// All structure constants of the category are `0` or `±1`, so `from_i64` is
/// the only way integers enter the computation.
pub trait Field:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// The characteristic (a prime for every implementor in this crate).
    fn characteristic() -> u32;

    fn from_i64(x: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(self) -> Option<Self>;

    fn try_inv(self) -> Result<Self, GfError> {
        self.inv().ok_or(GfError::ZeroInverse)
    }

    /// `(-1)^e` as a field element.
    fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

pub(crate) const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`, stored fully reduced in `[0, P)`.
///
/// The modulus is part of the type, so mixing residues of different fields
/// is a compile error rather than a runtime failure.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const PRIME_MODULUS: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(x: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_MODULUS;
        Fp(x.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub const fn modulus() -> u32 {
        P
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u64 + (P - rhs.0) as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Field for Fp<P> {
    fn characteristic() -> u32 {
        P
    }

    fn from_i64(x: i64) -> Self {
        Fp::new(x)
    }

    fn inv(self) -> Option<Self> {
        // Fermat: x^(p-2) = x^-1 for x != 0.
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type F2 = Fp<2>;
    type F3 = Fp<3>;
    type F5 = Fp<5>;
    type F7 = Fp<7>;

    #[test]
    fn small_tables() {
        assert_eq!(F3::new(2) * F3::new(2), F3::new(1));
        assert_eq!(F2::new(1) + F2::new(1), F2::zero());
        assert_eq!(F5::new(3).inv(), Some(F5::new(2)));
        assert_eq!(F3::new(-1), F3::new(2));
        assert_eq!(-F2::one(), F2::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(F7::zero().inv(), None);
        assert_eq!(F7::zero().try_inv(), Err(GfError::ZeroInverse));
    }

    #[test]
    fn sign_reduces_in_char_two() {
        assert_eq!(F2::sign(1), F2::one());
        assert_eq!(F3::sign(1), F3::new(2));
        assert_eq!(F3::sign(-4), F3::one());
    }

    #[test]
    fn prime_check() {
        assert!(is_prime(2) && is_prime(3) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
    }

    proptest! {
        #[test]
        fn field_axioms_mod_7(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
            let (a, b, c) = (F7::new(a), F7::new(b), F7::new(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a - b + b, a);
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), F7::one());
            }
        }
    }
}
