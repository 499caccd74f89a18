use std::fmt;

use super::coeff::Coeff;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials. Equality is by cross-multiplication,
/// so the representation need not be fully reduced.
#[derive(Clone, Debug)]
pub struct RationalFunction<C: Coeff> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> RationalFunction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn numerator(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(num: Poly<C>, den: Poly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(q) = num.div_exact(&den) {
            return Self::from_poly(q);
        }
        // Cancel when the numerator divides the denominator.
        let (num, den) = match den.div_exact(&num) {
            Some(q) => (Poly::one(), q),
            None => (num, den),
        };
        // Make the denominator's leading term a bare monomial with
        // coefficient one and no spare monomial factor.
        let content = den.monomial_content();
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        let lci = lc.inv().unwrap();
        let num = num.mul_monomial(&content.inv()).scale(&lci);
        let den = den.mul_monomial(&content.inv()).scale(&lci);
        RationalFunction { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        // Use the larger denominator when one divides the other.
        if let Some(f) = other.den.div_exact(&self.den) {
            return Self::normalized(self.num.mul(&f).add(&other.num), other.den.clone());
        }
        if let Some(f) = self.den.div_exact(&other.den) {
            return Self::normalized(self.num.add(&other.num.mul(&f)), self.den.clone());
        }
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow_i(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, bindings: &[(super::Var, RationalFunction<C>)]) -> Result<Self> {
        let n = self.num.substitute_rf(bindings)?;
        let d = self.den.substitute_rf(bindings)?;
        if d.is_zero() {
            let var = bindings
                .iter()
                .map(|(v, _)| v.name())
                .collect::<Vec<_>>()
                .join(",");
            return Err(Error::ZeroDenominator { var });
        }
        n.div(&d)
    }

    /// The Laurent polynomial equal to this function.
    pub fn to_laurent(&self) -> Result<Poly<C>> {
        self.num
            .div_exact(&self.den)
            .ok_or_else(|| Error::NotLaurent {
                denominator: self.den.to_string(),
            })
    }
}

impl<C: Coeff> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<C: Coeff> From<Poly<C>> for RationalFunction<C> {
    fn from(p: Poly<C>) -> Self {
        Self::from_poly(p)
    }
}

impl<C: Coeff> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
