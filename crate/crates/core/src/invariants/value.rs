use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{rat, Coeff, Cyclotomic, Monomial, Poly, Rational, RationalFunction, Var};

/// `q - q^{-1}`.
pub fn q_diff<C: Coeff>() -> Poly<C> {
    Poly::var(Var::Q).sub(&Poly::var_pow(Var::Q, -1))
}

/// A link invariant value `num / (q - q^{-1})^k`, with `k` as small as
/// possible. Knot invariants have `k = 0`; the Homflypt-type invariants of
/// split links keep a power of `q - q^{-1}` in the denominator.
#[derive(Clone, Debug)]
pub struct InvariantPolynomial {
    num: Poly<Cyclotomic>,
    qdiff: u32,
}

impl InvariantPolynomial {
    /// Builds `num / (q - q^{-1})^k` and cancels common factors
    /// `q - q^{-1}`.
    pub fn new(num: Poly<Cyclotomic>, k: u32) -> Self {
        let mut num = num;
        let mut k = k;
        if num.is_zero() {
            k = 0;
        }
        let d = q_diff::<Cyclotomic>();
        while k > 0 {
            match num.div_exact(&d) {
                Some(x) => {
                    num = x;
                    k -= 1;
                }
                None => break,
            }
        }
        InvariantPolynomial { num, qdiff: k }
    }

    pub fn from_poly(p: Poly<Cyclotomic>) -> Self {
        Self::new(p, 0)
    }

    pub fn from_rational_poly(p: &Poly<Rational>) -> Self {
        Self::from_poly(p.map_coeffs(|c| Cyclotomic::rational(c.clone())))
    }

    /// Parses canonical text, `poly` or `(poly)/(q - q^-1)^k`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(idx) = rest.find(")/(q - q^-1)") {
                let num = Poly::parse(&rest[..idx])?;
                let tail = &rest[idx + ")/(q - q^-1)".len()..];
                let k = match tail.strip_prefix('^') {
                    Some(e) => e.trim().parse::<u32>().map_err(|_| Error::Parse {
                        position: s.len() - tail.len(),
                        message: "bad exponent".into(),
                    })?,
                    None if tail.is_empty() => 1,
                    None => {
                        return Err(Error::Parse {
                            position: s.len() - tail.len(),
                            message: "trailing text".into(),
                        })
                    }
                };
                return Ok(Self::new(
                    num.map_coeffs(|c| Cyclotomic::rational(c.clone())),
                    k,
                ));
            }
        }
        Ok(Self::from_rational_poly(&Poly::parse(s)?))
    }

    pub fn numerator(&self) -> &Poly<Cyclotomic> {
        &self.num
    }

    pub fn qdiff_power(&self) -> u32 {
        self.qdiff
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.qdiff == 0
    }

    /// The Laurent polynomial, or an error carrying the denominator.
    pub fn to_laurent(&self) -> Result<Poly<Cyclotomic>> {
        if self.qdiff == 0 {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurent {
                denominator: format!("(q - q^-1)^{}", self.qdiff),
            })
        }
    }

    /// Rational coefficients, if all coefficients are rational.
    pub fn rational_numerator(&self) -> Option<Poly<Rational>> {
        let mut out = Poly::zero();
        for (m, c) in self.num.terms() {
            out.add_term(m.clone(), c.as_rational()?);
        }
        Some(out)
    }

    pub fn to_ratfun(&self) -> RationalFunction<Cyclotomic> {
        RationalFunction::new(self.num.clone(), q_diff::<Cyclotomic>().pow(self.qdiff)).unwrap()
    }

    fn lift(&self, k: u32) -> Poly<Cyclotomic> {
        self.num.mul(&q_diff::<Cyclotomic>().pow(k - self.qdiff))
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.qdiff.max(other.qdiff);
        Self::new(self.lift(k).add(&other.lift(k)), k)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        InvariantPolynomial {
            num: self.num.neg(),
            qdiff: self.qdiff,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.qdiff + other.qdiff)
    }

    /// Multiplies by a Laurent polynomial.
    pub fn scale(&self, p: &Poly<Cyclotomic>) -> Self {
        Self::new(self.num.mul(p), self.qdiff)
    }

    pub fn scale_rational(&self, p: &Poly<Rational>) -> Self {
        self.scale(&p.map_coeffs(|c| Cyclotomic::rational(c.clone())))
    }

    /// Multiplies by `(q - q^{-1})^e` for any integer `e`.
    pub fn times_qdiff(&self, e: i32) -> Self {
        if e >= 0 {
            self.scale(&q_diff::<Cyclotomic>().pow(e as u32))
        } else {
            Self::new(self.num.clone(), self.qdiff + e.unsigned_abs())
        }
    }

    /// Substitutes a Laurent polynomial for a variable other than `q`.
    pub fn substitute(&self, v: Var, value: &Poly<Cyclotomic>) -> Result<Self> {
        assert_ne!(v, Var::Q, "substituting q would break the qdiff form");
        Ok(Self::new(self.num.substitute(v, value)?, self.qdiff))
    }

    /// Sets `λ = q^4`, i.e. `s = q^2`.
    pub fn substitute_s_q2(&self) -> Result<Self> {
        Ok(Self::new(
            self.num.substitute(Var::S, &Poly::var_pow(Var::Q, 2))?,
            self.qdiff,
        ))
    }

    /// `q ↦ q^{-1}`, `s ↦ s^{-1}`.
    pub fn mirror(&self) -> Self {
        let mut num = Poly::zero();
        for (m, c) in self.num.terms() {
            let flipped = Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| match v {
                Var::Q | Var::S => (v, -e),
                _ => (v, e),
            }));
            num.add_term(flipped, c.clone());
        }
        // (q - q^-1) changes sign under the mirror.
        if self.qdiff % 2 == 1 {
            num = num.neg();
        }
        Self::new(num, self.qdiff)
    }

    pub fn latex(&self) -> String {
        match self.qdiff {
            0 => self.num.latex(),
            1 => format!("\\frac{{{}}}{{q - q^{{-1}}}}", self.num.latex()),
            k => format!("\\frac{{{}}}{{(q - q^{{-1}})^{{{k}}}}}", self.num.latex()),
        }
    }
}

impl PartialEq for InvariantPolynomial {
    fn eq(&self, other: &Self) -> bool {
        let k = self.qdiff.max(other.qdiff);
        self.lift(k) == other.lift(k)
    }
}

impl fmt::Display for InvariantPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qdiff {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/(q - q^-1)", self.num),
            k => write!(f, "({})/(q - q^-1)^{k}", self.num),
        }
    }
}

/// How the Homflypt variable is treated when normalizing a trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lambda {
    /// Keep `s = √λ` as a variable.
    Generic,
    /// Set `λ = q^4`, i.e. `s = q^2`.
    QFourth,
}

/// Turns a trace polynomial `Σ c_k z^k` into the invariant
/// `((1-λ)/(√λ (q-q^{-1}) E))^{n-1} √λ^ε tr` with `z = (q-q^{-1})E/(1-λ)`.
///
/// `e_value` is the value of `E` (a constant or the variable `E`).
pub fn normalize_trace(
    trace: &Poly<Cyclotomic>,
    n: usize,
    eps: i32,
    e_value: &Poly<Cyclotomic>,
    lambda: Lambda,
) -> Result<InvariantPolynomial> {
    let nm1 = (n - 1) as i32;
    let s = Poly::<Cyclotomic>::var(Var::S);
    let one_minus = Poly::one().sub(&s.mul(&s));
    let qd = q_diff::<Cyclotomic>();
    let mut num = Poly::zero();
    for (k, ck) in trace.collect_by(Var::Z) {
        if k < 0 || k > nm1 {
            return Err(Error::Unsupported(format!(
                "trace has z-degree {k} on {n} strands"
            )));
        }
        let term = ck
            .mul(&qd.pow(k as u32))
            .mul(&e_value.pow_i(k - nm1)?)
            .mul(&one_minus.pow((nm1 - k) as u32));
        num.add_assign(&term);
    }
    num = num.mul(&Poly::var_pow(Var::S, eps - nm1));
    if lambda == Lambda::QFourth {
        num = num.substitute(Var::S, &Poly::var_pow(Var::Q, 2))?;
    }
    Ok(InvariantPolynomial::new(num, nm1 as u32))
}

/// The same normalization done with rational functions and generic
/// substitution; used to cross-check [`normalize_trace`].
pub fn normalize_trace_rational(
    trace: &Poly<Cyclotomic>,
    n: usize,
    eps: i32,
    e_value: &Poly<Cyclotomic>,
    lambda: Lambda,
) -> Result<RationalFunction<Cyclotomic>> {
    let s = Poly::<Cyclotomic>::var(Var::S);
    let lam = match lambda {
        Lambda::Generic => s.mul(&s),
        Lambda::QFourth => Poly::var_pow(Var::Q, 4),
    };
    let root = match lambda {
        Lambda::Generic => s,
        Lambda::QFourth => Poly::var_pow(Var::Q, 2),
    };
    let one_minus = Poly::one().sub(&lam);
    let qd = q_diff::<Cyclotomic>();
    let z = RationalFunction::new(qd.mul(e_value), one_minus.clone())?;
    let traced = trace.substitute_rf(&[(Var::Z, z)])?;
    let factor = RationalFunction::new(one_minus, root.mul(&qd).mul(e_value))?;
    let out = traced
        .mul(&factor.pow_i((n - 1) as i32)?)
        .mul(&RationalFunction::from_poly(root).pow_i(eps)?);
    Ok(out)
}

/// Converts a rational trace to cyclotomic coefficients.
pub fn to_cyclotomic(p: &Poly<Rational>) -> Poly<Cyclotomic> {
    p.map_coeffs(|c| Cyclotomic::rational(c.clone()))
}

/// `E = 1/m` as a constant polynomial.
pub fn e_constant(m: usize) -> Poly<Cyclotomic> {
    Poly::constant(Cyclotomic::rational(rat(1, m as i64)))
}
