use std::fmt;

use super::coeff::{Coeff, Rational};
use super::poly::{Monomial, Poly, Var};
use super::ratfun::RationalFunction;
use super::unipoly::UniPoly;

/// An element of the field `Q(q)`, kept reduced with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct QFn {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl QFn {
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero_value());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().unwrap().clone();
        let inv = lc.recip();
        Some(QFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    fn zero_value() -> Self {
        QFn {
            num: UniPoly::zero(),
            den: UniPoly::constant(Rational::one()),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        let one = Rational::one();
        if k >= 0 {
            Self::from_unipoly(UniPoly::monomial(one, k as usize))
        } else {
            Self::new(
                UniPoly::constant(one.clone()),
                UniPoly::monomial(one, (-k) as usize),
            )
            .unwrap()
        }
    }

    pub fn from_unipoly(p: UniPoly<Rational>) -> Self {
        QFn {
            num: p,
            den: UniPoly::constant(Rational::one()),
        }
    }

    pub fn numerator(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<Rational> {
        &self.den
    }

    /// Converts a Laurent polynomial in `q` alone.
    pub fn from_laurent(p: &Poly<Rational>) -> Option<Self> {
        let mut acc = Self::zero_value();
        for (m, c) in p.terms() {
            if m.pairs().iter().any(|(v, _)| *v != Var::Q) {
                return None;
            }
            acc = Coeff::add(&acc, &Self::q_pow(m.exp(Var::Q)).scale(c));
        }
        Some(acc)
    }

    /// Converts a rational function in `q` alone.
    pub fn from_ratfun(r: &RationalFunction<Rational>) -> Option<Self> {
        let n = Self::from_laurent(r.numerator())?;
        let d = Self::from_laurent(r.denominator())?;
        Some(n.mul(&d.inv()?))
    }

    pub fn to_ratfun(&self) -> RationalFunction<Rational> {
        let conv = |u: &UniPoly<Rational>| {
            let mut p = Poly::zero();
            for (k, c) in u.coeffs().iter().enumerate() {
                p.add_term(Monomial::var_pow(Var::Q, k as i32), c.clone());
            }
            p
        };
        RationalFunction::new(conv(&self.num), conv(&self.den)).unwrap()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }
}

impl Coeff for QFn {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::from_unipoly(UniPoly::constant(Rational::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }
    fn neg(&self) -> Self {
        QFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_rational(r: Rational) -> Self {
        Self::from_unipoly(UniPoly::constant(r))
    }
    fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(&self.num.coeffs()[0] / &self.den.coeffs()[0]),
            _ => None,
        }
    }
    fn is_atomic(&self) -> bool {
        false
    }
}

impl fmt::Display for QFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfun())
    }
}
