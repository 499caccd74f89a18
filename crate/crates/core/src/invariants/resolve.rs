use std::collections::HashMap;

use super::value::{InvariantPolynomial, Lambda};
use super::{classical_invariant, InvariantKind, InvariantSpec};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{Cyclotomic, Poly, Var};

/// Node budget used by the CLI and the tests.
pub const DEFAULT_BUDGET: usize = 200_000;

/// A skein resolution tree for `Θ`: mixed crossings are switched until the
/// components are stacked in layers, at which point the link is split.
#[derive(Clone, Debug)]
pub enum ResolutionNode {
    /// A split union of knots, each given as a braid word.
    Leaf { knots: Vec<BraidWord> },
    /// `X(L) = a X(L') + b X(L₀)`, where `L'` has the crossing at
    /// `position` switched and `L₀` smooths it.
    Switch {
        position: usize,
        positive: bool,
        switched: Box<ResolutionNode>,
        smoothed: Box<ResolutionNode>,
    },
}

impl ResolutionNode {
    /// Builds the tree for the closure of `b`, failing once more than
    /// `budget` nodes have been created.
    pub fn build(b: &BraidWord, budget: usize) -> Result<Self> {
        let mut count = 0;
        build(b, budget, &mut count)
    }

    pub fn size(&self) -> usize {
        match self {
            ResolutionNode::Leaf { .. } => 1,
            ResolutionNode::Switch {
                switched, smoothed, ..
            } => 1 + switched.size() + smoothed.size(),
        }
    }
}

/// Component label of the strand that passes over at each crossing,
/// along with the labels of both strands.
fn crossing_info(b: &BraidWord) -> Vec<(usize, usize, usize)> {
    let (_, mut labels) = b.closure_components();
    let mut out = Vec::with_capacity(b.len());
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, c) = (labels[i], labels[i + 1]);
        // σ_i carries the strand at position i over; σ_i^{-1} the one at i+1.
        let over = if l > 0 { a } else { c };
        out.push((over, a, c));
        labels.swap(i, i + 1);
    }
    out
}

fn build(b: &BraidWord, budget: usize, count: &mut usize) -> Result<ResolutionNode> {
    *count += 1;
    if *count > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let info = crossing_info(b);
    let bad = info
        .iter()
        .position(|&(over, a, c)| a != c && over != a.min(c));
    let Some(position) = bad else {
        return Ok(ResolutionNode::Leaf {
            knots: split_knots(b),
        });
    };
    let mut letters = b.letters().to_vec();
    let positive = letters[position] > 0;
    letters[position] = -letters[position];
    let switched = b.with_letters(letters.clone());
    letters.remove(position);
    let smoothed = b.with_letters(letters);
    Ok(ResolutionNode::Switch {
        position,
        positive,
        switched: Box::new(build(&switched, budget, count)?),
        smoothed: Box::new(build(&smoothed, budget, count)?),
    })
}

/// Splits a layered braid into one braid per component, keeping only the
/// crossings of each component with itself.
fn split_knots(b: &BraidWord) -> Vec<BraidWord> {
    let (k, mut labels) = b.closure_components();
    let sizes: Vec<usize> = (0..k)
        .map(|c| labels.iter().filter(|&&x| x == c).count())
        .collect();
    let mut words = vec![Vec::new(); k];
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let c = labels[i];
        if c == labels[i + 1] {
            let rank = labels[..i].iter().filter(|&&x| x == c).count() as i32 + 1;
            words[c].push(l.signum() * rank);
        }
        labels.swap(i, i + 1);
    }
    words
        .into_iter()
        .zip(sizes)
        .map(|(w, n)| BraidWord::new(n, w).expect("sub-braid letters are in range"))
        .collect()
}

/// Evaluates `Θ(q, λ, E)` of the closure of `b` by skein resolution,
/// independently of the trace machinery for links: only Homflypt values of
/// knots are taken from the traces.
pub fn skein_resolve_theta(
    b: &BraidWord,
    e_value: &Poly<Cyclotomic>,
    lambda: Lambda,
    budget: usize,
) -> Result<InvariantPolynomial> {
    let tree = ResolutionNode::build(b, budget)?;
    let mut memo = HashMap::new();
    let v = evaluate(&tree, e_value, &mut memo)?;
    match lambda {
        Lambda::Generic => Ok(v),
        Lambda::QFourth => v.substitute_s_q2(),
    }
}

fn evaluate(
    node: &ResolutionNode,
    e_value: &Poly<Cyclotomic>,
    memo: &mut HashMap<BraidWord, InvariantPolynomial>,
) -> Result<InvariantPolynomial> {
    let s = Poly::<Cyclotomic>::var(Var::S);
    match node {
        ResolutionNode::Leaf { knots } => {
            let k = knots.len() as i32;
            // δ = (1 - s²)/(s (q - q^{-1}))
            let delta = Poly::one().sub(&s.mul(&s)).mul(&Poly::var_pow(Var::S, -1));
            let mut v = InvariantPolynomial::from_poly(
                e_value.pow_i(1 - k)?.mul(&delta.pow((k - 1) as u32)),
            )
            .times_qdiff(1 - k);
            let spec = InvariantSpec::new(InvariantKind::Homflypt, 1);
            for knot in knots {
                let p = match memo.get(knot) {
                    Some(p) => p.clone(),
                    None => {
                        let p = classical_invariant(&spec, knot)?;
                        memo.insert(knot.clone(), p.clone());
                        p
                    }
                };
                v = v.mul(&p);
            }
            Ok(v)
        }
        ResolutionNode::Switch {
            positive,
            switched,
            smoothed,
            ..
        } => {
            let a = evaluate(switched, e_value, memo)?;
            let z = evaluate(smoothed, e_value, memo)?.times_qdiff(1);
            Ok(if *positive {
                // X₊ = s² X₋ + s (q - q^{-1}) X₀
                a.scale(&s.mul(&s)).add(&z.scale(&s))
            } else {
                // X₋ = s^{-2} X₊ - s^{-1} (q - q^{-1}) X₀
                a.scale(&Poly::var_pow(Var::S, -2))
                    .sub(&z.scale(&Poly::var_pow(Var::S, -1)))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::invariants::e_constant;

    #[test]
    fn split_knots_of_layered_braid() {
        let b = parse_braid("B3 s1 s1 s1").unwrap().word().clone();
        let knots = split_knots(&b.with_letters(vec![1, 1, 1]));
        assert_eq!(knots.len(), 2);
        let tree =
            ResolutionNode::build(&parse_braid("B2 s1 s1").unwrap().word().clone(), 10).unwrap();
        assert!(tree.size() <= 3);
    }

    #[test]
    fn resolution_matches_trace_on_hopf() {
        let b = parse_braid("B2 s1 s1").unwrap().word().clone();
        for d in 1..4 {
            let e = e_constant(d);
            let r = skein_resolve_theta(&b, &e, Lambda::Generic, 100).unwrap();
            let t = classical_invariant(&InvariantSpec::new(InvariantKind::ThetaD, d as u32), &b)
                .unwrap();
            assert_eq!(r, t, "d={d}");
        }
    }
}
