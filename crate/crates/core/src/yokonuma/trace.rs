use std::collections::HashMap;

use super::element::{YElement, YMonomial};
use crate::error::Result;
use crate::esystem::esystem_solution;
use crate::ring::{Coeff, Cyclotomic, Monomial, Poly, Rational, Var};

/// Trace values: polynomials in `z`, `x_1..x_{d-1}` (or `E`) with Laurent
/// coefficients in `q` (carried as the variable `q`).
pub type TraceValue = Poly<Rational>;

/// The trace parameter `x_s`, with `x_0 = 1`.
pub fn x_var(s: u32) -> TraceValue {
    if s == 0 {
        Poly::one()
    } else {
        Poly::var(Var::X(s as u8))
    }
}

/// Computes the Markov trace on `Y_{d,n}(q)` with generic parameters,
/// caching monomial traces across calls.
#[derive(Debug, Default)]
pub struct YTracer {
    memo: HashMap<(u32, YMonomial), TraceValue>,
}

impl YTracer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trace(&mut self, x: &YElement) -> TraceValue {
        let mut out = Poly::zero();
        for (m, c) in x.sorted_terms() {
            let t = self.trace_monomial(x.modulus(), m);
            out.add_mul_assign(&t, &c.to_poly());
        }
        out
    }

    /// Trace of a basis monomial `t^a g_w`, peeling the top strand.
    ///
    /// Write `g_w = g_{w'} g_{m-1} g_{m-2} ... g_i` with `w'` fixing `m` and
    /// `i = w^{-1}(m)`. If `i = m` the top strand is a free loop carrying
    /// `t_m^{a_m}`, giving the factor `x_{a_m}`. Otherwise `t_m^{a_m}` slides
    /// down to strand `i`, the trace rule for `g_{m-1}` gives a factor `z`,
    /// and by cyclicity the framing returns to the front of the word.
    pub fn trace_monomial(&mut self, d: u32, m: &YMonomial) -> TraceValue {
        let n = m.n();
        if n == 0 {
            return Poly::one();
        }
        if let Some(v) = self.memo.get(&(d, *m)) {
            return v.clone();
        }
        let i = m.w.preimage(n);
        let top = m.a[n - 1] as u32;
        let mut lower = *m;
        lower.a[n - 1] = 0;
        let value = if i == n {
            lower.w = m.w.restrict();
            x_var(top).mul(&self.trace_monomial(d, &lower))
        } else {
            let mut imgs = m.w.images();
            imgs.remove(i - 1);
            let w_prime = crate::braid::Permutation::from_images(&imgs).unwrap();
            lower.w = w_prime;
            lower.a[i - 1] = ((lower.a[i - 1] as u32 + top) % d) as u8;
            let mut x = YElement::monomial(d, lower, crate::ring::LaurentQ::one());
            for j in (i..n - 1).rev() {
                x = x.mul_g(j);
            }
            Poly::var(Var::Z).mul(&self.trace(&x))
        };
        self.memo.insert((d, *m), value.clone());
        value
    }
}

/// Binds `x_s` to the E-system solution parametrized by `subset` of `Z/dZ`.
pub fn specialize_trace(t: &TraceValue, d: u32, subset: &[u32]) -> Result<Poly<Cyclotomic>> {
    let sol = esystem_solution(d, subset)?;
    let mut out = Poly::zero();
    for (m, c) in t.terms() {
        let mut coeff = Cyclotomic::from_rational(c.clone());
        let mut rest = Monomial::one();
        for &(v, e) in m.pairs() {
            match v {
                Var::X(s) => {
                    let val = sol.x(s as u32);
                    for _ in 0..e {
                        coeff = coeff.mul(&val);
                    }
                }
                _ => rest = rest.mul(&Monomial::var_pow(v, e)),
            }
        }
        out.add_term(rest, coeff);
    }
    Ok(out)
}
