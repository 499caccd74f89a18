use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Field of coefficients for [`Poly`](super::Poly) and friends.
///
/// Implemented for [`Rational`] and [`Cyclotomic`](super::Cyclotomic).
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;
    /// `Some(r)` when the value lies in the prime field.
    fn as_rational(&self) -> Option<Rational>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True when printing as a factor needs no parentheses.
    fn is_atomic(&self) -> bool {
        true
    }

    /// True when the printed form starts with a minus sign that can be
    /// pulled out as a term separator.
    fn is_negative_display(&self) -> bool {
        false
    }

    fn latex(&self) -> String {
        self.to_string()
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_negative_display(&self) -> bool {
        self.is_negative()
    }
    fn latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else if self.is_negative() {
            format!("-\\frac{{{}}}{{{}}}", -self.numer(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}
