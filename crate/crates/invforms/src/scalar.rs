//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! Every quantity in this crate — form coefficients, operator matrices,
//! kernel bases — is a [`Scalar`]: a complex number `re + im·i` whose real
//! and imaginary parts are arbitrary-precision rationals. There is no
//! floating point anywhere, so equality is exact and every rank or kernel
//! computed downstream is decided, not approximated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    /// The additive identity `0`.
    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    /// The multiplicative identity `1`.
    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// A real integer scalar.
    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// The real rational `num/den`.
    ///
    /// # Panics
    /// Panics if `den == 0`; a zero denominator in source code is a bug,
    /// not an input condition.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// `a + b·i` from rational parts.
    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    /// A real scalar from a rational.
    pub fn from_rational(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    /// Real part.
    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Imaginary part.
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|s|² = re² + im²` as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// Division, or `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.checked_recip().map(|r| self * &r)
    }

    /// `i^n` for any (possibly negative) integer power.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Scalar::one(),
            1 => Scalar::i(),
            2 => -Scalar::one(),
            _ => -Scalar::i(),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// # Panics
    /// Panics on division by zero; use [`Scalar::checked_div`] for fallible
    /// division.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Canonical rendering:
/// * real: the rational itself (`3/4`, `-2`, `0`);
/// * purely imaginary: `{im} i` (`1 i`, `-1/2 i`);
/// * mixed: `({re} + {im} i)`, the sign always attached to the rational.
///
/// This is the coefficient syntax used by [`crate::form::Form`]'s text
/// format; parse/print round-trips are bit-exact.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{} i", self.im)
        } else {
            write!(f, "({} + {} i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_exactly() {
        let a = Scalar::from_parts(
            BigRational::new(BigInt::from(3), BigInt::from(7)),
            BigRational::new(BigInt::from(-2), BigInt::from(5)),
        );
        let b = &Scalar::ratio(1, 3) + &(&Scalar::i() * &Scalar::ratio(4, 9));
        let c = Scalar::from_int(-6);

        // Associativity and distributivity on a non-trivial triple.
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));

        // Exact inverses.
        assert_eq!(&a * &a.checked_recip().unwrap(), Scalar::one());
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), -Scalar::one());
        assert_eq!(Scalar::i_pow(2), -Scalar::one());
        assert_eq!(Scalar::i_pow(-1), -Scalar::i());
        assert_eq!(Scalar::i_pow(-2), -Scalar::one());
        assert_eq!(Scalar::i_pow(7), -Scalar::i());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let s = Scalar::from_parts(
            BigRational::new(BigInt::from(22), BigInt::from(7)),
            BigRational::new(BigInt::from(-1), BigInt::from(3)),
        );
        assert_eq!(s.conj().conj(), s);
        assert_eq!(&s * &s.conj(), Scalar::from_rational(s.norm_sqr()));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_none());
        assert!(Scalar::zero().checked_recip().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::from_int(-2).to_string(), "-2");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::i().to_string(), "1 i");
        assert_eq!((-Scalar::ratio(1, 2) * Scalar::i()).to_string(), "-1/2 i");
        let mixed = &Scalar::one() + &(&Scalar::ratio(-3, 4) * &Scalar::i());
        assert_eq!(mixed.to_string(), "(1 + -3/4 i)");
    }
}
