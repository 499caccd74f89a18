use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::Signed;

use super::coeff::{rat, Coeff, Rational};
use super::unipoly::UniPoly;

/// Euler's totient.
pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| k.gcd(&d) == 1).count() as u32
}

fn phi_cache() -> &'static Mutex<HashMap<u32, UniPoly<Rational>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, UniPoly<Rational>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, via `x^d - 1 = prod_{k | d} Phi_k`.
pub fn cyclotomic_polynomial(d: u32) -> UniPoly<Rational> {
    assert!(d >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = UniPoly::monomial(rat(1, 1), d as usize).sub(&UniPoly::constant(rat(1, 1)));
    for k in 1..d {
        if d.is_multiple_of(k) {
            let (q, r) = p.div_rem(&cyclotomic_polynomial(k));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    phi_cache().lock().unwrap().insert(d, p.clone());
    p
}

/// An element of the cyclotomic field `Q(zeta_d)`, stored as a residue
/// modulo `Phi_d` in the power basis `1, zeta_d, zeta_d^2, ...`.
///
/// Values of different orders can be mixed freely; they are lifted to the
/// least common multiple of their orders. Rationals have order 1.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    poly: UniPoly<Rational>,
}

impl Cyclotomic {
    fn reduce(order: u32, p: UniPoly<Rational>) -> Self {
        let r = Self::residue(order, p);
        // Rationals are kept at order 1 so that printing is canonical.
        let order = if r.degree().unwrap_or(0) == 0 {
            1
        } else {
            order
        };
        Cyclotomic { order, poly: r }
    }

    fn residue(order: u32, p: UniPoly<Rational>) -> UniPoly<Rational> {
        p.div_rem(&cyclotomic_polynomial(order)).1
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            poly: UniPoly::constant(r),
        }
    }

    /// `zeta_d^k` for a primitive `d`-th root of unity `zeta_d`.
    pub fn zeta_pow(d: u32, k: i64) -> Self {
        assert!(d >= 1);
        let e = k.rem_euclid(d as i64) as usize;
        if d == 1 {
            return Self::rational(rat(1, 1));
        }
        Self::reduce(d, UniPoly::monomial(rat(1, 1), e))
    }

    pub fn zeta(d: u32) -> Self {
        Self::zeta_pow(d, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the power basis of `zeta_order`.
    pub fn coefficients(&self) -> &[Rational] {
        self.poly.coeffs()
    }

    /// Power-basis coefficients of the value in `Q(zeta_m)`, for a multiple
    /// `m` of the order.
    pub fn lift(&self, m: u32) -> UniPoly<Rational> {
        assert!(
            m.is_multiple_of(self.order),
            "cannot lift order {} to {}",
            self.order,
            m
        );
        if m == self.order {
            return self.poly.clone();
        }
        let step = (m / self.order) as usize;
        let mut v = vec![Rational::zero(); step * self.poly.coeffs().len().max(1)];
        for (k, c) in self.poly.coeffs().iter().enumerate() {
            v[k * step] = c.clone();
        }
        Self::residue(m, UniPoly::new(v))
    }

    fn common(&self, other: &Self) -> (u32, UniPoly<Rational>, UniPoly<Rational>) {
        let m = self.order.lcm(&other.order);
        (m, self.lift(m), other.lift(m))
    }

    pub fn conj(&self) -> Self {
        // zeta -> zeta^-1
        let d = self.order;
        let mut acc = Self::rational(Rational::zero());
        for (k, c) in self.poly.coeffs().iter().enumerate() {
            acc = Coeff::add(&acc, &Self::zeta_pow(d, -(k as i64)).scale(c));
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::reduce(self.order, self.poly.scale(c))
    }

    fn term_count(&self) -> usize {
        self.poly.coeffs().iter().filter(|c| !c.is_zero()).count()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl Coeff for Cyclotomic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let (m, a, b) = self.common(other);
        Self::reduce(m, a.add(&b))
    }
    fn mul(&self, other: &Self) -> Self {
        let (m, a, b) = self.common(other);
        Self::reduce(m, a.mul(&b))
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            poly: self.poly.neg(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.poly.ext_gcd(&cyclotomic_polynomial(self.order));
        debug_assert_eq!(g.degree(), Some(0));
        Some(Self::reduce(self.order, s))
    }
    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.poly.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.poly.coeffs()[0].clone()),
            _ => None,
        }
    }
    fn is_atomic(&self) -> bool {
        self.term_count() <= 1
    }
    fn latex(&self) -> String {
        let d = self.order;
        self.to_string()
            .replace(&format!("ζ{d}"), &format!("\\zeta_{{{d}}}"))
            .replace('*', " ")
    }
    fn is_negative_display(&self) -> bool {
        self.term_count() == 1 && self.poly.coeffs().iter().any(|c| c.is_negative())
    }
}

impl fmt::Display for Cyclotomic {
    /// Power-basis form, e.g. `-1 - ζ3` or `1/2*ζ8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let d = self.order;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "ζ{d}")?,
                (1, false) => write!(f, "{mag}*ζ{d}")?,
                (_, true) => write!(f, "ζ{d}^{k}")?,
                (_, false) => write!(f, "{mag}*ζ{d}^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let p = |v: &[i64]| UniPoly::new(v.iter().map(|&c| rat(c, 1)).collect());
        assert_eq!(cyclotomic_polynomial(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta6_squared() {
        let z = Cyclotomic::zeta(6);
        let expect = Coeff::sub(&z, &Cyclotomic::one());
        assert_eq!(z.mul(&z), expect);
        assert_eq!(z.mul(&z).to_string(), "-1 + ζ6");
    }

    #[test]
    fn mixed_orders() {
        // zeta_4^2 = -1, zeta_6^3 = -1
        assert_eq!(Cyclotomic::zeta_pow(4, 2), Cyclotomic::rational(rat(-1, 1)));
        assert_eq!(Cyclotomic::zeta_pow(6, 3), Cyclotomic::zeta_pow(4, 2));
        // zeta_3 = zeta_6^2
        assert_eq!(Cyclotomic::zeta(3), Cyclotomic::zeta_pow(6, 2));
        let s = Cyclotomic::zeta(3).add(&Cyclotomic::zeta(4));
        assert_eq!(s.order(), 12);
    }

    #[test]
    fn exact_orders() {
        for d in 1..=12u32 {
            let z = Cyclotomic::zeta(d);
            let mut acc = Cyclotomic::one();
            for k in 1..=d {
                acc = acc.mul(&z);
                assert_eq!(acc.is_one(), k == d, "order of zeta_{d}");
            }
        }
    }

    #[test]
    fn conjugation() {
        let z = Cyclotomic::zeta(5);
        assert!(z.mul(&z.conj()).is_one());
    }
}
