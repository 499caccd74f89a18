use std::collections::BTreeMap;
use std::fmt;

use super::coeff::{Coeff, Rational};
use super::poly::{Poly, Var};

/// Laurent polynomial in `q` with rational coefficients.
///
/// This is the coefficient ring of algebra elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0)
    }

    /// `c * q^e`.
    pub fn term(c: Rational, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::term(Rational::one(), e)
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv() -> Self {
        Self::q_pow(1).sub(&Self::q_pow(-1))
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, &(ca * cb));
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.add_mul_assign(self, other);
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `q -> q^-1`.
    pub fn mirror(&self) -> Self {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn to_poly<C: Coeff>(&self) -> Poly<C> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.add_term(
                super::Monomial::var_pow(Var::Q, *e),
                C::from_rational(c.clone()),
            );
        }
        out
    }

    /// Inverse of [`to_poly`](Self::to_poly); `None` if other variables occur.
    pub fn from_poly(p: &Poly<Rational>) -> Option<Self> {
        let mut out = Self::zero();
        for (m, c) in p.terms() {
            let e = m.exp(Var::Q);
            if m.degree_total_abs() != e.unsigned_abs() as i64 {
                return None;
            }
            out.add_term(e, c);
        }
        Some(out)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly::<Rational>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn difference_of_squares() {
        let a = LaurentQ::q_minus_qinv();
        let b = LaurentQ::q_pow(1).add(&LaurentQ::q_pow(-1));
        assert_eq!(a.mul(&b), LaurentQ::q_pow(2).sub(&LaurentQ::q_pow(-2)));
        assert_eq!(
            a.mul(&a),
            LaurentQ::from_terms([(2, rat(1, 1)), (0, rat(-2, 1)), (-2, rat(1, 1))])
        );
        assert_eq!(a.mul(&a).to_string(), "q^-2 - 2 + q^2");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = LaurentQ::q_pow(3);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a), LaurentQ::zero());
    }
}
