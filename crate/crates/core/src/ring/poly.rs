use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::{Coeff, Rational};
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

/// Polynomial variables. The derived order (`z < E < x1 < x2 < ... < s < q`)
/// fixes the canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z,
    E,
    X(u8),
    /// Square root of the Homflypt variable: `lambda = s^2`.
    S,
    Q,
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Z => "z".into(),
            Var::E => "E".into(),
            Var::X(k) => format!("x{k}"),
            Var::S => "s".into(),
            Var::Q => "q".into(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Var::X(k) => format!("x_{{{k}}}"),
            Var::S => "\\sqrt{\\lambda}".into(),
            v => v.name(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A Laurent monomial: variables with nonzero integer exponents, sorted by
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(it: I) -> Self {
        let mut m = Self::one();
        for (v, e) in it {
            m = m.mul(&Self::var_pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Sum of absolute exponents.
    pub fn degree_total_abs(&self) -> i64 {
        self.0.iter().map(|(_, e)| e.unsigned_abs() as i64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (*v, e * k)).collect())
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// The monomial with variable `v` removed.
    pub fn without(&self, v: Var) -> Self {
        Monomial(self.0.iter().filter(|(w, _)| *w != v).cloned().collect())
    }

    /// Componentwise minimum of exponents (treating absent variables as 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let vars: BTreeSet<Var> = self
            .0
            .iter()
            .chain(other.0.iter())
            .map(|(v, _)| *v)
            .collect();
        Monomial::from_pairs(vars.into_iter().map(|v| (v, self.exp(v).min(other.exp(v)))))
    }

    fn fmt_factors(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }

    fn latex(&self) -> String {
        self.0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.latex()
                } else {
                    format!("{}^{{{e}}}", v.latex())
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Monomial {
    /// Lexicographic on exponent vectors, variables taken in ascending order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    let o = match va.cmp(&vb) {
                        Ordering::Less => {
                            i += 1;
                            ea.cmp(&0)
                        }
                        Ordering::Greater => {
                            j += 1;
                            0.cmp(&eb)
                        }
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                            ea.cmp(&eb)
                        }
                    };
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial.
///
/// Trace values use the variables `z`, `E`, `x_k` and `q`; invariants use
/// `q`, `s` and `E`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(Monomial::var_pow(v, e), C::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(C::from_rational(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca.mul(cb));
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
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.add_mul_assign(self, other);
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents are only allowed for monomials.
    pub fn pow_i(&self, n: i32) -> Result<Self> {
        if n >= 0 {
            return Ok(self.pow(n as u32));
        }
        let (m, c) = self.as_monomial().ok_or_else(|| {
            Error::InexactDivision(format!("negative power of non-monomial {self}"))
        })?;
        let ci = c.inv().ok_or(Error::DivisionByZero)?;
        Ok(Self::term(m.inv(), ci).pow((-n) as u32))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| *v))
            .collect()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// Groups terms by the exponent of `v`: `self = sum_k out[k] * v^k`.
    pub fn collect_by(&self, v: Var) -> BTreeMap<i32, Poly<C>> {
        let mut out: BTreeMap<i32, Poly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v))
                .or_default()
                .add_term(m.without(v), c.clone());
        }
        out
    }

    /// Greatest monomial dividing every term (exponentwise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Substitutes a polynomial for `v`. Negative powers of `v` require
    /// `value` to be a monomial.
    pub fn substitute(&self, v: Var, value: &Poly<C>) -> Result<Poly<C>> {
        let mut out = Self::zero();
        let mut cache: BTreeMap<i32, Poly<C>> = BTreeMap::new();
        for (k, rest) in self.collect_by(v) {
            let pw = match cache.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = value
                        .pow_i(k)
                        .map_err(|_| Error::ZeroDenominator { var: v.name() })?;
                    cache.insert(k, p.clone());
                    p
                }
            };
            out.add_mul_assign(&rest, &pw);
        }
        Ok(out)
    }

    /// Substitutes rational functions for several variables at once.
    pub fn substitute_rf(
        &self,
        bindings: &[(Var, RationalFunction<C>)],
    ) -> Result<RationalFunction<C>> {
        let mut out = RationalFunction::zero();
        for (m, c) in &self.terms {
            let mut term = RationalFunction::from_poly(Poly::constant(c.clone()));
            let mut free = Monomial::one();
            for &(var, e) in &m.0 {
                match bindings.iter().find(|(b, _)| *b == var) {
                    Some((_, val)) => {
                        if e < 0 && val.is_zero() {
                            return Err(Error::ZeroDenominator { var: var.name() });
                        }
                        term = term.mul(&val.pow_i(e)?);
                    }
                    None => free = free.mul(&Monomial::var_pow(var, e)),
                }
            }
            term = term.mul(&RationalFunction::from_poly(Self::term(free, C::one())));
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly<C>) -> Option<Poly<C>> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            let ci = c.inv()?;
            return Some(self.mul_monomial(&m.inv()).scale(&ci));
        }
        // Clear monomial content so both sides are honest polynomials with
        // no variable factor; the quotient is then a polynomial too.
        let mn = self.monomial_content();
        let md = divisor.monomial_content();
        let mut rem = self.mul_monomial(&mn.inv());
        let den = divisor.mul_monomial(&md.inv());
        let (lm, lc) = den.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.inv()?;
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.mul(&lm.inv());
            if qm.0.iter().any(|(_, e)| *e < 0) {
                return None;
            }
            let qc = rc.mul(&lc_inv);
            let t = Self::term(qm, qc);
            rem = rem.sub(&den.mul(&t));
            quot.add_assign(&t);
        }
        Some(quot.mul_monomial(&mn.mul(&md.inv())))
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = m.latex();
            if m.is_one() {
                out.push_str(&mag.latex());
            } else if mag.is_one() {
                out.push_str(&body);
            } else if mag.is_atomic() {
                out.push_str(&format!("{} {}", mag.latex(), body));
            } else {
                out.push_str(&format!("\\left({}\\right) {}", mag.latex(), body));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Canonical text: terms in ascending monomial order joined by
    /// ` + ` / ` - `, factors joined by `*`, e.g. `-1/2*s^3*q^-2 + z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    if mag.is_atomic() {
                        write!(f, "{mag}*")?;
                    } else {
                        write!(f, "({mag})*")?;
                    }
                }
                m.fmt_factors(f)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Poly<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

impl Poly<Rational> {
    /// Parses the canonical text form (also accepts `−` for minus and
    /// arbitrary spacing).
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let position = self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i);
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|(_, c)| *c)
            .collect();
        s.parse().ok()
    }

    fn exponent(&mut self) -> Result<i32> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = matches!(self.peek(), Some('-') | Some('−'));
        if neg {
            self.pos += 1;
        }
        let n = self
            .integer()
            .ok_or_else(|| self.err("expected exponent"))?;
        let n: i32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self, coeff: &mut Rational, mono: &mut Monomial) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().unwrap();
                self.skip_ws();
                let mut r = Rational::from(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self
                        .integer()
                        .ok_or_else(|| self.err("expected denominator"))?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    r /= Rational::from(d);
                }
                *coeff *= r;
                Ok(())
            }
            Some(c) => {
                let v = match c {
                    'z' => Var::Z,
                    'E' => Var::E,
                    's' => Var::S,
                    'q' => Var::Q,
                    'x' => {
                        self.pos += 1;
                        let k = self
                            .integer()
                            .ok_or_else(|| self.err("expected index after x"))?;
                        let k: u8 = k
                            .try_into()
                            .map_err(|_| self.err("variable index too large"))?;
                        self.pos -= 1;
                        Var::X(k)
                    }
                    _ => return Err(self.err(format!("unexpected character {c:?}"))),
                };
                self.pos += 1;
                let e = self.exponent()?;
                *mono = mono.mul(&Monomial::var_pow(v, e));
                Ok(())
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn parse(&mut self) -> Result<Poly<Rational>> {
        let mut out = Poly::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.err("empty polynomial"));
                }
                return Ok(out);
            }
            let neg = match self.sign() {
                Some(n) => n,
                None if first => false,
                None => return Err(self.err("expected + or -")),
            };
            first = false;
            let mut coeff = Rational::from(BigInt::from(if neg { -1 } else { 1 }));
            let mut mono = Monomial::one();
            self.factor(&mut coeff, &mut mono)?;
            loop {
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.factor(&mut coeff, &mut mono)?;
                } else {
                    break;
                }
            }
            out.add_term(mono, coeff);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn p(s: &str) -> Poly<Rational> {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        for s in [
            "0",
            "1",
            "-1/2*s^3*q^-2",
            "q^-2 - 2 + q^2",
            "-x1*x2^2 + z + 3*z*E",
            "-s*q",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("q^2 − 2 + q^-2").to_string(), "q^-2 - 2 + q^2");
    }

    #[test]
    fn laurent_order_is_s_then_q() {
        let x = p("s^2 + q^-1*s + q^5 + q*s^-1");
        assert_eq!(x.to_string(), "s^-1*q + q^5 + s*q^-1 + s^2");
    }

    #[test]
    fn exact_division() {
        let a = p("q^2 - 1");
        let b = p("q - q^-1");
        assert_eq!(a.div_exact(&b), Some(p("q")));
        let c = p("z^2*q - q^-1");
        assert_eq!(c.div_exact(&p("z*q - 1")), Some(p("z + q^-1")));
        assert_eq!(p("q + 1").div_exact(&p("q - 1")), None);
        assert_eq!(p("s^2 - s^4").div_exact(&p("s")), Some(p("s - s^3")));
    }

    #[test]
    fn substitution() {
        let x = p("1 + x1*z");
        assert_eq!(x.substitute(Var::X(1), &Poly::zero()).unwrap(), Poly::one());
        let y = p("s^-3 + s");
        assert_eq!(y.substitute(Var::S, &p("q^2")).unwrap(), p("q^-6 + q^2"));
        assert!(y.substitute(Var::S, &p("q + 1")).is_err());
    }

    #[test]
    fn parse_errors_have_positions() {
        match Poly::parse("q + y") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(Poly::parse("q +").is_err());
        assert!(Poly::parse("1/0").is_err());
        assert_eq!(p("2*3/4*q").coeff(&Monomial::var_pow(Var::Q, 1)), rat(3, 2));
    }
}
