use std::collections::HashMap;
use std::fmt;

use super::partition::SetPartition;
use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::ring::{rat, LaurentQ};

/// Basis monomial `E_P b_w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiedMonomial {
    pub p: SetPartition,
    pub w: Permutation,
}

impl TiedMonomial {
    pub fn identity(n: usize) -> Self {
        TiedMonomial {
            p: SetPartition::discrete(n),
            w: Permutation::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }
}

impl fmt::Debug for TiedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.p, self.w)
    }
}

/// Generators of `ℰ_n(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EGenerator {
    B(usize),
    BInv(usize),
    /// The tie `ε_i` between strands `i` and `i + 1`.
    Tie(usize),
    /// The tie `ε_{i,j}`.
    TiePair(usize, usize),
}

/// An element of `ℰ_n(q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EElement {
    n: usize,
    terms: HashMap<TiedMonomial, LaurentQ>,
}

impl EElement {
    pub fn zero(n: usize) -> Self {
        EElement {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(TiedMonomial::identity(n), LaurentQ::one())
    }

    pub fn monomial(m: TiedMonomial, c: LaurentQ) -> Self {
        let mut x = Self::zero(m.n());
        x.add_term(m, c);
        x
    }

    pub fn generator(n: usize, g: EGenerator) -> Result<Self> {
        let ok = match g {
            EGenerator::B(i) | EGenerator::BInv(i) | EGenerator::Tie(i) => i >= 1 && i < n,
            EGenerator::TiePair(i, j) => i >= 1 && j >= 1 && i <= n && j <= n && i != j,
        };
        if !ok {
            return Err(Error::IndexOutOfRange {
                what: "generator",
                index: match g {
                    EGenerator::B(i) | EGenerator::BInv(i) | EGenerator::Tie(i) => i as i64,
                    EGenerator::TiePair(i, j) => (i * 100 + j) as i64,
                },
            });
        }
        Ok(Self::one(n).mul_generator(g))
    }

    /// Image of a classical braid word.
    pub fn from_braid(b: &BraidWord) -> Self {
        let mut x = Self::one(b.strands());
        for &l in b.letters() {
            let j = l.unsigned_abs() as usize;
            x = if l > 0 { x.mul_b(j) } else { x.mul_b_inv(j) };
        }
        x
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

    pub fn coeff(&self, m: &TiedMonomial) -> LaurentQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TiedMonomial, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn sorted_terms(&self) -> Vec<(&TiedMonomial, &LaurentQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, m: TiedMonomial, c: LaurentQ) {
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
        if self.n != other.n {
            return Err(Error::Mismatch(format!("E_{} vs E_{}", self.n, other.n)));
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
        let mut out = Self::zero(self.n);
        for (m, x) in &self.terms {
            out.add_term(*m, x.mul(c));
        }
        out
    }

    /// `self · ε_{i,j}`: the tie is transported through `b_w`.
    pub fn mul_tie(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let p = m.p.join(m.w.apply(i), m.w.apply(j));
            out.add_term(TiedMonomial { p, w: m.w }, c.clone());
        }
        out
    }

    /// `self · E_Q`.
    pub fn mul_partition(&self, q: &SetPartition) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let p = m.p.join_with(&q.permute(&m.w));
            out.add_term(TiedMonomial { p, w: m.w }, c.clone());
        }
        out
    }

    /// `self · b_j`.
    pub fn mul_b(&self, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        let qq = LaurentQ::q_minus_qinv();
        for (m, c) in &self.terms {
            let (a, b) = (m.w.apply(j), m.w.apply(j + 1));
            out.add_term(
                TiedMonomial {
                    p: m.p,
                    w: m.w.times_s(j),
                },
                c.clone(),
            );
            if a > b {
                out.add_term(
                    TiedMonomial {
                        p: m.p.join(a, b),
                        w: m.w,
                    },
                    c.mul(&qq),
                );
            }
        }
        out
    }

    /// `self · b_j^{-1} = self · (b_j - (q - q^{-1}) ε_j)`.
    pub fn mul_b_inv(&self, j: usize) -> Self {
        let mut out = self.mul_b(j);
        let qq = LaurentQ::q_minus_qinv().scale(&rat(-1, 1));
        for (m, c) in self.mul_tie(j, j + 1).terms {
            out.add_term(m, c.mul(&qq));
        }
        out
    }

    pub fn mul_generator(&self, g: EGenerator) -> Self {
        match g {
            EGenerator::B(j) => self.mul_b(j),
            EGenerator::BInv(j) => self.mul_b_inv(j),
            EGenerator::Tie(j) => self.mul_tie(j, j + 1),
            EGenerator::TiePair(i, j) => self.mul_tie(i, j),
        }
    }

    pub fn mul_monomial(&self, m: &TiedMonomial) -> Self {
        let mut x = self.mul_partition(&m.p);
        for j in m.w.reduced_word() {
            x = x.mul_b(j);
        }
        x
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (m, c) in other.sorted_terms() {
            for (m2, c2) in self.mul_monomial(m).terms {
                out.add_term(m2, c2.mul(c));
            }
        }
        Ok(out)
    }

    /// Embeds into `ℰ_{n+1}(q)`.
    pub fn embed(&self) -> Self {
        let mut out = Self::zero(self.n + 1);
        for (m, c) in &self.terms {
            out.add_term(
                TiedMonomial {
                    p: m.p.embed(),
                    w: m.w.embed(),
                },
                c.clone(),
            );
        }
        out
    }
}

impl fmt::Display for EElement {
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
