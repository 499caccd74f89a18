use super::value::{e_constant, q_diff, InvariantPolynomial};
use super::{classical_invariant, invariant, y_trace, InvariantKind, InvariantSpec};
use crate::braid::{BraidWord, FramedBraidWord, LinkRecord};
use crate::error::{Error, Result};
use crate::esystem::canonical_subset;
use crate::ring::{Coeff, Cyclotomic, Poly, Var};
use crate::yokonuma::{YElement, YTracer, YokonumaAlgebra};

/// Rescales `z ↦ z/E`: multiplies the coefficient of `z^k` by `E^{-k}`.
fn rescale_z(p: &Poly<Cyclotomic>, e: &Cyclotomic) -> Poly<Cyclotomic> {
    let ei = e.inv().unwrap();
    let mut out = Poly::zero();
    for (k, c) in p.collect_by(Var::Z) {
        let mut f = Cyclotomic::one();
        for _ in 0..k {
            f = f.mul(&ei);
        }
        out.add_assign(&c.scale(&f).mul(&Poly::var_pow(Var::Z, k)));
    }
    out
}

fn e_of(subset: &[u32]) -> Cyclotomic {
    Cyclotomic::rational(crate::ring::rat(1, subset.len() as i64))
}

fn pow_c(x: &Cyclotomic, k: i64) -> Cyclotomic {
    let base = if k < 0 { x.inv().unwrap() } else { x.clone() };
    (0..k.abs()).fold(Cyclotomic::one(), |acc, _| acc.mul(&base))
}

/// Checks `tr_{d,D}(α)(z) = E_D^{n-k} τ(α)(z/E_D)` for a braid whose
/// closure has `k` components and no mixed crossings.
fn trace_identity(b: &BraidWord, d: u32, subset: &[u32]) -> Result<bool> {
    let k = b.closure_components().0;
    let n = b.strands();
    let fb = FramedBraidWord::new(b.clone(), vec![0; n], d)?;
    let tr_d = y_trace(&fb, d, subset)?;
    let tau = y_trace(&FramedBraidWord::classical(b.clone()), 1, &[0])?;
    let e = e_of(subset);
    let rhs = rescale_z(&tau, &e).scale(&pow_c(&e, (n - k) as i64));
    Ok(tr_d == rhs)
}

/// Knot coincidence: for a knot-closing braid, the specialized trace equals
/// `E_D^{n-1} τ(α)(z/E_D)` and `Θ_{d,D}` equals the Homflypt polynomial.
pub fn knot_coincidence_check(b: &BraidWord, d: u32, subset: &[u32]) -> Result<bool> {
    let k = b.closure_components().0;
    if k != 1 {
        return Err(Error::NotAKnot(k));
    }
    let subset = canonical_subset(d, subset)?;
    if !trace_identity(b, d, &subset)? {
        return Ok(false);
    }
    let theta = super::theta_via_yokonuma(b, d, &subset, super::Lambda::Generic)?;
    let p = classical_invariant(&InvariantSpec::new(InvariantKind::Homflypt, 1), b)?;
    Ok(theta == p)
}

/// Disjoint unions of `k` knots: the trace identity with `E_D^{n-k}` and
/// `Θ_{d,D} = E_D^{1-k} P`.
pub fn disjoint_union_check(b: &BraidWord, d: u32, subset: &[u32]) -> Result<bool> {
    if !b.mixed_crossings().is_empty() {
        return Err(Error::NotSplit);
    }
    let k = b.closure_components().0;
    let subset = canonical_subset(d, subset)?;
    if !trace_identity(b, d, &subset)? {
        return Ok(false);
    }
    let theta = super::theta_via_yokonuma(b, d, &subset, super::Lambda::Generic)?;
    let p = classical_invariant(&InvariantSpec::new(InvariantKind::Homflypt, 1), b)?;
    let e = e_of(&subset);
    Ok(theta == p.scale(&Poly::constant(pow_c(&e, 1 - k as i64))))
}

/// `Θ_d(L₁ ⊔ L₂) = ((1-λ)/(√λ (q-q^{-1}) E_D)) Θ_d(L₁) Θ_d(L₂)`, with the
/// split union realized by placing `b2` to the right of `b1`.
pub fn split_product_check(b1: &BraidWord, b2: &BraidWord, d: u32) -> Result<bool> {
    let n1 = b1.strands();
    let mut letters = b1.letters().to_vec();
    letters.extend(
        b2.letters()
            .iter()
            .map(|l| l.signum() * (l.abs() + n1 as i32)),
    );
    let joint = BraidWord::new(n1 + b2.strands(), letters)?;
    let spec = InvariantSpec::new(InvariantKind::ThetaD, d);
    let t = classical_invariant(&spec, &joint)?;
    let t1 = classical_invariant(&spec, b1)?;
    let t2 = classical_invariant(&spec, b2)?;
    let s = Poly::<Cyclotomic>::var(Var::S);
    let delta = Poly::one()
        .sub(&s.mul(&s))
        .mul(&Poly::var_pow(Var::S, -1))
        .mul(&e_constant(d as usize).pow_i(-1)?);
    let rhs = t1.mul(&t2).scale(&delta).times_qdiff(-1);
    Ok(t == rhs)
}

/// The skein relations that can be checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeinKind {
    /// `(1/√λ) P(L₊) - √λ P(L₋) = (q - q^{-1}) P(L₀)` at any crossing.
    Homflypt,
    /// The same relation for `Θ_d`, at mixed crossings only.
    ThetaMixed { d: u32 },
    /// Same, for `Θ(q, λ, E)` with symbolic `E`.
    ThetaGeneralMixed,
    /// `q^{-2} θ_d(L₊) - q^2 θ_d(L₋) = (q - q^{-1}) θ_d(L₀)` at mixed
    /// crossings.
    ThetaSmallMixed { d: u32 },
    /// `(1/√λ) Φ(L₊) - √λ Φ(L₋) = ((q - q^{-1})/d) Σ_s Φ(L_s)`.
    PhiFramed { d: u32, subset: Vec<u32> },
}

fn triple(b: &BraidWord, position: usize) -> (BraidWord, BraidWord, BraidWord) {
    let l = b.letters()[position].abs();
    let mut plus = b.letters().to_vec();
    plus[position] = l;
    let mut minus = plus.clone();
    minus[position] = -l;
    let mut zero = plus.clone();
    zero.remove(position);
    (
        b.with_letters(plus),
        b.with_letters(minus),
        b.with_letters(zero),
    )
}

/// Checks a skein relation at the crossing with the given (0-based)
/// position in the word.
pub fn skein_check(kind: &SkeinKind, b: &FramedBraidWord, position: usize) -> Result<bool> {
    let word = b.word();
    if position >= word.len() {
        return Err(Error::IndexOutOfRange {
            what: "crossing position",
            index: position as i64,
        });
    }
    let (spec, a, c) = match kind {
        SkeinKind::PhiFramed { d, subset } => return phi_skein(b, *d, subset, position),
        SkeinKind::Homflypt => (
            InvariantSpec::new(InvariantKind::Homflypt, 1),
            Poly::var_pow(Var::S, -1),
            Poly::var(Var::S),
        ),
        SkeinKind::ThetaMixed { d } => (
            InvariantSpec::new(InvariantKind::ThetaD, *d),
            Poly::var_pow(Var::S, -1),
            Poly::var(Var::S),
        ),
        SkeinKind::ThetaGeneralMixed => (
            InvariantSpec::new(InvariantKind::ThetaGeneral, 1),
            Poly::var_pow(Var::S, -1),
            Poly::var(Var::S),
        ),
        SkeinKind::ThetaSmallMixed { d } => (
            InvariantSpec::new(InvariantKind::ThetaSmallD, *d),
            Poly::var_pow(Var::Q, -2),
            Poly::var_pow(Var::Q, 2),
        ),
    };
    if *kind != SkeinKind::Homflypt && !word.mixed_crossings().contains(&position) {
        return Err(Error::NotMixed(position));
    }
    let (plus, minus, zero) = triple(word, position);
    let f = |w: &BraidWord| classical_invariant(&spec, w);
    let lhs = f(&plus)?.scale(&a).sub(&f(&minus)?.scale(&c));
    let rhs = f(&zero)?.scale(&q_diff());
    Ok(lhs == rhs)
}

fn phi_skein(b: &FramedBraidWord, d: u32, subset: &[u32], position: usize) -> Result<bool> {
    let subset = canonical_subset(d, subset)?;
    let b = if b.modulus() == d {
        b.clone()
    } else {
        b.with_modulus(d)?
    };
    let n = b.strands();
    let y = YokonumaAlgebra::new(d, n)?;
    let letters = b.word().letters();
    let i = letters[position].unsigned_abs() as usize;
    let start = y.braid_to_element(&FramedBraidWord::new(
        BraidWord::new(n, letters[..position].to_vec())?,
        b.framing().iter().map(|&a| a as i64).collect(),
        d,
    )?)?;
    let finish = |mut x: YElement| {
        for &l in &letters[position + 1..] {
            let j = l.unsigned_abs() as usize;
            x = if l > 0 { x.mul_g(j) } else { x.mul_g_inv(j) };
        }
        x
    };
    let eps0 = b.word().exponent_sum() - letters[position].signum();
    let e_val = e_constant(subset.len());
    let mut tracer = YTracer::new();
    let mut value = |x: &YElement, eps: i32| -> Result<InvariantPolynomial> {
        let t = crate::yokonuma::specialize_trace(&tracer.trace(x), d, &subset)?;
        super::normalize_trace(&t, n, eps, &e_val, super::Lambda::Generic)
    };
    let plus = value(&finish(start.mul_g(i)), eps0 + 1)?;
    let minus = value(&finish(start.mul_g_inv(i)), eps0 - 1)?;
    let mut sum = InvariantPolynomial::from_poly(Poly::zero());
    for s in 0..d {
        let x = finish(start.mul_t(i, s).mul_t(i + 1, (d - s) % d));
        sum = sum.add(&value(&x, eps0)?);
    }
    let lhs = plus
        .scale(&Poly::var_pow(Var::S, -1))
        .sub(&minus.scale(&Poly::var(Var::S)));
    let rhs = sum
        .scale(&q_diff())
        .scale(&Poly::constant(Cyclotomic::rational(crate::ring::rat(
            1, d as i64,
        ))));
    Ok(lhs == rhs)
}

/// Difference of an invariant on two catalog records.
pub fn compare_pair(
    a: &LinkRecord,
    b: &LinkRecord,
    spec: &InvariantSpec,
) -> Result<InvariantPolynomial> {
    let d = spec.d.max(1);
    let fa = invariant(spec, &a.framed(d)?)?;
    let fb = invariant(spec, &b.framed(d)?)?;
    Ok(fa.sub(&fb))
}
