use std::collections::HashMap;
use std::fmt;

use crate::braid::{FramedBraidWord, Permutation};
use crate::error::{Error, Result};
use crate::ring::{rat, LaurentQ, Rational};
use crate::MAX_STRANDS;

/// Basis monomial `t_1^{a_1} ... t_n^{a_n} g_w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial {
    pub a: [u8; MAX_STRANDS],
    pub w: Permutation,
}

impl YMonomial {
    pub fn identity(n: usize) -> Self {
        YMonomial {
            a: [0; MAX_STRANDS],
            w: Permutation::identity(n),
        }
    }

    pub fn new(framing: &[u32], w: Permutation) -> Self {
        let mut a = [0; MAX_STRANDS];
        for (slot, &x) in a.iter_mut().zip(framing) {
            *slot = x as u8;
        }
        YMonomial { a, w }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn framing(&self) -> &[u8] {
        &self.a[..self.n()]
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {}]", self.framing(), self.w)
    }
}

/// An element of `Y_{d,n}(q)`: a finite combination of basis monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct YElement {
    d: u32,
    n: usize,
    terms: HashMap<YMonomial, LaurentQ>,
}

/// The generators of `Y_{d,n}(q)` and the standard idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    G(usize),
    GInv(usize),
    /// `t_i^k`.
    T(usize, u32),
    /// `e_i = e_{i,i+1}`.
    E(usize),
    /// `e_{i,j} = (1/d) Σ_s t_i^s t_j^{-s}`.
    EPair(usize, usize),
    /// `e_i^{(m)} = t_i^m e_i`.
    EShift(usize, u32),
}

impl YElement {
    pub fn zero(d: u32, n: usize) -> Self {
        YElement {
            d,
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(d: u32, n: usize) -> Self {
        Self::monomial(d, YMonomial::identity(n), LaurentQ::one())
    }

    pub fn monomial(d: u32, m: YMonomial, c: LaurentQ) -> Self {
        let mut x = Self::zero(d, m.n());
        x.add_term(m, c);
        x
    }

    pub fn modulus(&self) -> u32 {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &YMonomial) -> LaurentQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &LaurentQ)> {
        self.terms.iter()
    }

    /// Terms sorted by monomial, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&YMonomial, &LaurentQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, m: YMonomial, c: LaurentQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::Mismatch(format!(
                "Y({},{}) vs Y({},{})",
                self.d, self.n, other.d, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentQ::constant(rat(-1, 1))))
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut out = Self::zero(self.d, self.n);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.add_term(*m, x.mul(c));
        }
        out
    }

    /// `self · t_j^k`.
    pub fn mul_t(&self, j: usize, k: u32) -> Self {
        let d = self.d;
        let mut out = Self::zero(d, self.n);
        for (m, c) in &self.terms {
            let mut m2 = *m;
            let p = m.w.apply(j) - 1;
            m2.a[p] = ((m2.a[p] as u32 + k) % d) as u8;
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Adds `c · (monomial m) · e_{j,j+1}` to `out`, where the idempotent is
    /// transported through `g_w` to `e_{w(j), w(j+1)}`.
    fn push_e(out: &mut Self, m: &YMonomial, j: usize, c: &LaurentQ) {
        let d = out.d;
        let c = c.scale(&rat(1, d as i64));
        let (p, r) = (m.w.apply(j) - 1, m.w.apply(j + 1) - 1);
        for s in 0..d {
            let mut m2 = *m;
            m2.a[p] = ((m2.a[p] as u32 + s) % d) as u8;
            m2.a[r] = ((m2.a[r] as u32 + d - s) % d) as u8;
            out.add_term(m2, c.clone());
        }
    }

    /// `self · g_j`.
    pub fn mul_g(&self, j: usize) -> Self {
        let mut out = Self::zero(self.d, self.n);
        let qq = LaurentQ::q_minus_qinv();
        for (m, c) in &self.terms {
            let mut m2 = *m;
            m2.w.swap_positions(j);
            out.add_term(m2, c.clone());
            if m.w.apply(j) > m.w.apply(j + 1) {
                Self::push_e(&mut out, m, j, &c.mul(&qq));
            }
        }
        out
    }

    /// `self · g_j^{-1} = self · (g_j - (q - q^{-1}) e_j)`.
    pub fn mul_g_inv(&self, j: usize) -> Self {
        let mut out = self.mul_g(j);
        let qq = LaurentQ::q_minus_qinv().scale(&rat(-1, 1));
        for (m, c) in &self.terms {
            Self::push_e(&mut out, m, j, &c.mul(&qq));
        }
        out
    }

    /// `self · e_{i,j}`.
    pub fn mul_e_pair(&self, i: usize, j: usize) -> Self {
        let d = self.d;
        let mut out = Self::zero(d, self.n);
        let inv = rat(1, d as i64);
        for (m, c) in &self.terms {
            let c = c.scale(&inv);
            let (p, r) = (m.w.apply(i) - 1, m.w.apply(j) - 1);
            for s in 0..d {
                let mut m2 = *m;
                m2.a[p] = ((m2.a[p] as u32 + s) % d) as u8;
                m2.a[r] = ((m2.a[r] as u32 + d - s) % d) as u8;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    pub fn mul_generator(&self, g: Generator) -> Self {
        match g {
            Generator::G(j) => self.mul_g(j),
            Generator::GInv(j) => self.mul_g_inv(j),
            Generator::T(j, k) => self.mul_t(j, k),
            Generator::E(j) => self.mul_e_pair(j, j + 1),
            Generator::EPair(i, j) => self.mul_e_pair(i, j),
            Generator::EShift(j, m) => self.mul_t(j, m).mul_e_pair(j, j + 1),
        }
    }

    /// `self · (monomial m)`.
    pub fn mul_monomial(&self, m: &YMonomial) -> Self {
        let mut x = self.clone();
        for j in 1..=self.n {
            if m.a[j - 1] != 0 {
                x = x.mul_t(j, m.a[j - 1] as u32);
            }
        }
        for j in m.w.reduced_word() {
            x = x.mul_g(j);
        }
        x
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.d, self.n);
        for (m, c) in other.sorted_terms() {
            for (m2, c2) in self.mul_monomial(m).terms {
                out.add_term(m2, c2.mul(c));
            }
        }
        Ok(out)
    }

    /// Embeds into `Y_{d,n+1}(q)`.
    pub fn embed(&self) -> Self {
        let mut out = Self::zero(self.d, self.n + 1);
        for (m, c) in &self.terms {
            out.add_term(
                YMonomial {
                    a: m.a,
                    w: m.w.embed(),
                },
                c.clone(),
            );
        }
        out
    }
}

impl fmt::Display for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m:?}")?;
        }
        Ok(())
    }
}

/// Constructor for elements of a fixed `Y_{d,n}(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YokonumaAlgebra {
    pub d: u32,
    pub n: usize,
}

impl YokonumaAlgebra {
    pub fn new(d: u32, n: usize) -> Result<Self> {
        if d == 0 || d > 255 {
            return Err(Error::IndexOutOfRange {
                what: "modulus",
                index: d as i64,
            });
        }
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::TooManyStrands(n));
        }
        Ok(YokonumaAlgebra { d, n })
    }

    pub fn one(&self) -> YElement {
        YElement::one(self.d, self.n)
    }

    pub fn zero(&self) -> YElement {
        YElement::zero(self.d, self.n)
    }

    pub fn scalar(&self, c: Rational) -> YElement {
        YElement::one(self.d, self.n).scale(&LaurentQ::constant(c))
    }

    pub fn generator(&self, g: Generator) -> Result<YElement> {
        let n = self.n;
        let bad = |i: usize| Error::IndexOutOfRange {
            what: "generator",
            index: i as i64,
        };
        match g {
            Generator::G(i) | Generator::GInv(i) | Generator::E(i) | Generator::EShift(i, _) => {
                if i == 0 || i >= n {
                    return Err(bad(i));
                }
            }
            Generator::T(i, _) => {
                if i == 0 || i > n {
                    return Err(bad(i));
                }
            }
            Generator::EPair(i, j) => {
                if i == 0 || j == 0 || i > n || j > n || i == j {
                    return Err(bad(if i == 0 || i > n { i } else { j }));
                }
            }
        }
        Ok(self.one().mul_generator(g))
    }

    pub fn g(&self, i: usize) -> YElement {
        self.generator(Generator::G(i)).unwrap()
    }

    pub fn g_inv(&self, i: usize) -> YElement {
        self.generator(Generator::GInv(i)).unwrap()
    }

    pub fn t(&self, i: usize, k: u32) -> YElement {
        self.generator(Generator::T(i, k)).unwrap()
    }

    pub fn e(&self, i: usize) -> YElement {
        self.generator(Generator::E(i)).unwrap()
    }

    /// Image of a framed braid: `t^a` followed by the crossings.
    pub fn braid_to_element(&self, b: &FramedBraidWord) -> Result<YElement> {
        if b.modulus() != self.d && !(b.is_unframed() && b.modulus() == 1) {
            return Err(Error::Mismatch(format!(
                "braid modulus {} vs algebra modulus {}",
                b.modulus(),
                self.d
            )));
        }
        if b.strands() != self.n {
            return Err(Error::Mismatch(format!(
                "{} strands vs Y({},{})",
                b.strands(),
                self.d,
                self.n
            )));
        }
        let framing: Vec<u32> = b.framing().iter().map(|a| a % self.d).collect();
        let mut x = YElement::monomial(
            self.d,
            YMonomial::new(&framing, Permutation::identity(self.n)),
            LaurentQ::one(),
        );
        for &l in b.word().letters() {
            let j = l.unsigned_abs() as usize;
            x = if l > 0 { x.mul_g(j) } else { x.mul_g_inv(j) };
        }
        Ok(x)
    }
}
