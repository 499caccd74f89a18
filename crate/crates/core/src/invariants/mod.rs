//! Link invariants assembled from the traces, plus skein-relation checks
//! and an independent skein-resolution evaluator.

mod checks;
mod resolve;
mod value;

use std::fmt;
use std::str::FromStr;

pub use checks::{
    compare_pair, disjoint_union_check, knot_coincidence_check, skein_check, split_product_check,
    SkeinKind,
};
pub use resolve::{skein_resolve_theta, ResolutionNode, DEFAULT_BUDGET};
pub use value::{
    e_constant, normalize_trace, normalize_trace_rational, q_diff, to_cyclotomic,
    InvariantPolynomial, Lambda,
};

use crate::braid::{BraidWord, FramedBraidWord};
use crate::error::{Error, Result};
use crate::esystem::canonical_subset;
use crate::ring::{Cyclotomic, Poly, Var};
use crate::ties::{EElement, ETracer};
use crate::yokonuma::{specialize_trace, YTracer, YokonumaAlgebra};

/// Which invariant to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// `P(q, λ)`.
    Homflypt,
    /// `V(q) = P(q, q^4)`.
    Jones,
    /// `Θ_d(q, λ)` of a classical link.
    ThetaD,
    /// `θ_d(q) = Θ_d(q, q^4)`.
    ThetaSmallD,
    /// `Φ_{d,D}(q, λ)` of a framed link.
    PhiDD,
    /// `Θ(q, λ, E)` with symbolic `E`.
    ThetaGeneral,
    /// `θ(q, E) = Θ(q, q^4, E)`.
    ThetaSmallGeneral,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 7] = [
        InvariantKind::Homflypt,
        InvariantKind::Jones,
        InvariantKind::ThetaD,
        InvariantKind::ThetaSmallD,
        InvariantKind::PhiDD,
        InvariantKind::ThetaGeneral,
        InvariantKind::ThetaSmallGeneral,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InvariantKind::Homflypt => "homflypt",
            InvariantKind::Jones => "jones",
            InvariantKind::ThetaD => "theta_d",
            InvariantKind::ThetaSmallD => "theta_small_d",
            InvariantKind::PhiDD => "phi_dD",
            InvariantKind::ThetaGeneral => "theta_general",
            InvariantKind::ThetaSmallGeneral => "theta_small_general",
        }
    }

    fn lambda(&self) -> Lambda {
        match self {
            InvariantKind::Jones
            | InvariantKind::ThetaSmallD
            | InvariantKind::ThetaSmallGeneral => Lambda::QFourth,
            _ => Lambda::Generic,
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantKind::ALL
            .iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown invariant kind {s:?}"),
            })
    }
}

/// An invariant together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpec {
    pub kind: InvariantKind,
    /// The modulus `d` (ignored by the Homflypt, Jones and general kinds).
    pub d: u32,
    /// The subset `D`; `None` means all of `Z/dZ`.
    pub subset: Option<Vec<u32>>,
}

impl InvariantSpec {
    pub fn new(kind: InvariantKind, d: u32) -> Self {
        InvariantSpec {
            kind,
            d,
            subset: None,
        }
    }

    pub fn with_subset(mut self, subset: Vec<u32>) -> Self {
        self.subset = Some(subset);
        self
    }

    /// The subset `D`, validated, defaulting to `Z/dZ`.
    pub fn subset(&self) -> Result<Vec<u32>> {
        match &self.subset {
            Some(s) => canonical_subset(self.d, s),
            None => Ok((0..self.d).collect()),
        }
    }

    /// The value substituted for `E`.
    fn e_value(&self) -> Result<Poly<Cyclotomic>> {
        Ok(match self.kind {
            InvariantKind::Homflypt | InvariantKind::Jones => e_constant(1),
            InvariantKind::ThetaGeneral | InvariantKind::ThetaSmallGeneral => Poly::var(Var::E),
            _ => e_constant(self.subset()?.len()),
        })
    }
}

/// Trace of a classical braid in the braids-and-ties engine (variables
/// `z`, `E`, `q`).
pub fn ties_trace(b: &BraidWord) -> Poly<crate::ring::Rational> {
    ETracer::new().trace(&EElement::from_braid(b))
}

/// Specialized Yokonuma-Hecke trace `tr_{d,D}` of a framed braid.
pub fn y_trace(b: &FramedBraidWord, d: u32, subset: &[u32]) -> Result<Poly<Cyclotomic>> {
    let y = YokonumaAlgebra::new(d, b.strands())?;
    let fb = if b.modulus() == d {
        b.clone()
    } else {
        b.with_modulus(d)?
    };
    let x = y.braid_to_element(&fb)?;
    let t = YTracer::new().trace(&x);
    specialize_trace(&t, d, subset)
}

/// Computes an invariant of the closure of `b`.
///
/// Classical kinds use the braids-and-ties trace (with `E = 1/|D|`, or `E`
/// symbolic); `phi_dD` uses the Yokonuma-Hecke trace specialized at `D`.
pub fn invariant(spec: &InvariantSpec, b: &FramedBraidWord) -> Result<InvariantPolynomial> {
    let n = b.strands();
    let eps = b.word().exponent_sum();
    let e_val = spec.e_value()?;
    let trace = if spec.kind == InvariantKind::PhiDD {
        if spec.d == 0 {
            return Err(Error::IndexOutOfRange {
                what: "modulus",
                index: 0,
            });
        }
        y_trace(b, spec.d, &spec.subset()?)?
    } else {
        if !b.is_unframed() {
            return Err(Error::Unsupported(format!(
                "{} is defined for classical braids; use phi_dD for framed ones",
                spec.kind
            )));
        }
        if matches!(
            spec.kind,
            InvariantKind::ThetaD | InvariantKind::ThetaSmallD
        ) {
            spec.subset()?;
        }
        let t = ties_trace(b.word());
        to_cyclotomic(&t).substitute(Var::E, &e_val)?
    };
    normalize_trace(&trace, n, eps, &e_val, spec.kind.lambda())
}

/// Convenience wrapper for classical braid words.
pub fn classical_invariant(spec: &InvariantSpec, b: &BraidWord) -> Result<InvariantPolynomial> {
    invariant(spec, &FramedBraidWord::classical(b.clone()))
}

/// `Θ_d` computed from the Yokonuma-Hecke engine rather than the ties
/// engine, for cross-checking.
pub fn theta_via_yokonuma(
    b: &BraidWord,
    d: u32,
    subset: &[u32],
    lambda: Lambda,
) -> Result<InvariantPolynomial> {
    let subset = canonical_subset(d, subset)?;
    let fb = FramedBraidWord::new(b.clone(), vec![0; b.strands()], d)?;
    let t = y_trace(&fb, d, &subset)?;
    normalize_trace(
        &t,
        b.strands(),
        b.exponent_sum(),
        &e_constant(subset.len()),
        lambda,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn inv(kind: InvariantKind, d: u32, text: &str) -> InvariantPolynomial {
        invariant(&InvariantSpec::new(kind, d), &parse_braid(text).unwrap()).unwrap()
    }

    fn lp(s: &str) -> InvariantPolynomial {
        InvariantPolynomial::parse(s).unwrap()
    }

    #[test]
    fn unknot_is_one() {
        for w in ["B1", "B2 s1", "B2 s1^-1", "B3 s1 s2^-1"] {
            assert_eq!(inv(InvariantKind::Homflypt, 1, w), lp("1"));
            assert_eq!(inv(InvariantKind::ThetaGeneral, 1, w), lp("1"));
        }
    }

    #[test]
    fn hopf_values() {
        assert_eq!(
            inv(InvariantKind::Homflypt, 1, "B2 s1 s1"),
            lp("(-s^3 - s + s*q^-2 + s*q^2)/(q - q^-1)")
        );
        assert_eq!(inv(InvariantKind::Jones, 1, "B2 s1 s1"), lp("-q - q^5"));
    }

    #[test]
    fn trefoil_jones() {
        // V(σ1^3) with V(q) = P(q, q^4)
        let v = inv(InvariantKind::Jones, 1, "B2 s1 s1 s1");
        let p = inv(InvariantKind::Homflypt, 1, "B2 s1 s1 s1");
        assert!(v.is_laurent());
        assert_eq!(p, lp("-s^4 + 2*s^2 + s^2*q^-2 - 2*s^2 + s^2*q^2"));
        assert_eq!(v, lp("q^2 + q^6 - q^8"));
    }

    #[test]
    fn framed_needs_phi() {
        let b = parse_braid("B2 d=2 t1^1 s1").unwrap();
        assert!(invariant(&InvariantSpec::new(InvariantKind::ThetaD, 2), &b).is_err());
        assert!(invariant(&InvariantSpec::new(InvariantKind::PhiDD, 2), &b).is_ok());
    }
}
