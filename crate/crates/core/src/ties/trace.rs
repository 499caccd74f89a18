use std::collections::HashMap;

use super::element::{EElement, TiedMonomial};
use crate::braid::Permutation;
use crate::ring::{LaurentQ, Poly, Var};
use crate::yokonuma::{TraceValue, YElement, YMonomial};

/// Markov trace on `ℰ_n(q)` with parameters `z` and `E`.
///
/// A tie joining the top strand to a lower block contributes a factor `E`
/// when that strand closes up on itself. This extends the rule
/// `tr(a e_n) = E tr(a)` from adjacent ties to arbitrary ones; it is
/// checked against the Yokonuma-Hecke trace through [`phi_map`].
#[derive(Debug, Default)]
pub struct ETracer {
    memo: HashMap<TiedMonomial, TraceValue>,
}

impl ETracer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trace(&mut self, x: &EElement) -> TraceValue {
        let mut out = Poly::zero();
        for (m, c) in x.sorted_terms() {
            let t = self.trace_monomial(m);
            out.add_mul_assign(&t, &c.to_poly());
        }
        out
    }

    pub fn trace_monomial(&mut self, m: &TiedMonomial) -> TraceValue {
        let n = m.n();
        if n == 0 {
            return Poly::one();
        }
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let i = m.w.preimage(n);
        let value = if i == n {
            let lower = TiedMonomial {
                p: m.p.remove_last(),
                w: m.w.restrict(),
            };
            let rest = self.trace_monomial(&lower);
            if m.p.block_size(n) > 1 {
                rest.mul(&Poly::var(Var::E))
            } else {
                rest
            }
        } else {
            // b_w = b_{w'} b_{n-1} ... b_i with w' fixing n.
            let mut imgs = m.w.images();
            imgs.remove(i - 1);
            imgs.push(n);
            let w_full = Permutation::from_images(&imgs).unwrap();
            // Move the ties to the right of b_{w'}, pass b_{n-1} through
            // tr(a ε_{k,n} b_{n-1}) = z tr(a ε_{k,n-1}), then back.
            let s = m.p.permute(&w_full.inverse()).join(n - 1, n).remove_last();
            let w_lower = w_full.restrict();
            let p_lower = s.permute(&w_lower);
            let mut x = EElement::monomial(
                TiedMonomial {
                    p: p_lower,
                    w: w_lower,
                },
                LaurentQ::one(),
            );
            for j in (i..n - 1).rev() {
                x = x.mul_b(j);
            }
            Poly::var(Var::Z).mul(&self.trace(&x))
        };
        self.memo.insert(*m, value.clone());
        value
    }
}

/// The homomorphism `ℰ_n(q) → Y_{d,n}(q)`, `b_i ↦ g_i`, `ε_i ↦ e_i`.
///
/// `E_P` maps to the product of `e_{i,j}` along each block, i.e. the sum of
/// framings whose block sums vanish mod `d`, weighted by
/// `d^{-(n - #blocks)}`.
pub fn phi_map(x: &EElement, d: u32) -> YElement {
    let n = x.strands();
    let mut out = YElement::zero(d, n);
    for (m, c) in x.sorted_terms() {
        let blocks = m.p.blocks();
        let weight = crate::ring::rat(1, (d as i64).pow((n - blocks.len()) as u32));
        let c = c.scale(&weight);
        // Enumerate framings: free choice on all but the last element of
        // each block; the last one balances the block sum.
        let free: Vec<usize> = blocks
            .iter()
            .flat_map(|b| b[..b.len() - 1].iter().copied())
            .collect();
        let total = (d as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut a = vec![0u32; n];
            let mut k = code;
            for &i in &free {
                a[i - 1] = (k % d as usize) as u32;
                k /= d as usize;
            }
            for b in &blocks {
                let last = *b.last().unwrap();
                let s: u32 = b[..b.len() - 1].iter().map(|&i| a[i - 1]).sum();
                a[last - 1] = (d - s % d) % d;
            }
            out.add_term(YMonomial::new(&a, m.w), c.clone());
        }
    }
    out
}
