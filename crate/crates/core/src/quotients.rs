//! Trace-level checks for the Temperley-Lieb type quotients.
//!
//! Quotient algebras are never built. A statement "the trace passes to the
//! quotient by ⟨r⟩" is checked as `tr(m r) = 0` for every basis monomial
//! `m`, and relations are checked as identities in the parent algebra.
//!
//! Two presentations appear: the `q`-presentation used by the engines, with
//! `g² = 1 + (q - q^{-1}) e g`, and the `u`-presentation with
//! `g̃² = 1 + (u - 1) e + (u - 1) e g̃`. They are related by `u = q²` and
//! `g̃ = g + (q - 1) e g`, under which the trace parameter becomes
//! `z̃ = q z`.

use std::fmt;

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::esystem::{canonical_subset, esystem_solution};
use crate::ring::{
    rat, Coeff, Cyclotomic, LaurentQ, Monomial, Poly, QFn, Rational, RationalFunction, UniPoly, Var,
};
use crate::ties::{phi_map, EElement, EGenerator, ETracer, SetPartition, TiedMonomial};
use crate::yokonuma::{x_var, TraceValue, YElement, YTracer, YokonumaAlgebra};

fn lq(c: i64, e: i32) -> LaurentQ {
    LaurentQ::term(rat(c, 1), e)
}

fn y3(d: u32) -> YokonumaAlgebra {
    YokonumaAlgebra::new(d, 3).expect("three strands always fit")
}

fn sum(parts: &[YElement]) -> YElement {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, x| acc.add(x).expect("same algebra"))
}

/// `1 + c(g_1 + g_2) + c²(g_1 g_2 + g_2 g_1) + c³ g_1 g_2 g_1` in `Y_{d,3}`,
/// where `gen(i)` supplies `g_i`.
fn steinberg_with(d: u32, c: &LaurentQ, gen: impl Fn(usize) -> YElement) -> YElement {
    let (g1, g2) = (gen(1), gen(2));
    let g12 = g1.multiply(&g2).unwrap();
    let g21 = g2.multiply(&g1).unwrap();
    let g121 = g12.multiply(&g1).unwrap();
    let c2 = c.mul(c);
    sum(&[
        YElement::one(d, 3),
        g1.add(&g2).unwrap().scale(c),
        g12.add(&g21).unwrap().scale(&c2),
        g121.scale(&c2.mul(c)),
    ])
}

/// `g_{1,2} = 1 + q(g_1 + g_2) + q²(g_1 g_2 + g_2 g_1) + q³ g_1 g_2 g_1`.
/// For `d = 1` this is the Steinberg element `h_{1,2}` of `H_3(q)`.
pub fn steinberg(d: u32) -> YElement {
    let y = y3(d);
    steinberg_with(d, &LaurentQ::q_pow(1), |i| y.g(i))
}

/// `e_1 e_2` in `Y_{d,3}`.
pub fn e1e2(d: u32) -> YElement {
    let y = y3(d);
    y.e(1).multiply(&y.e(2)).unwrap()
}

/// The FTL ideal generator `r_{1,2} = e_1 e_2 g_{1,2}`.
pub fn ftl_generator(d: u32) -> YElement {
    e1e2(d).multiply(&steinberg(d)).unwrap()
}

/// The same generator written in the `u`-presentation,
/// `e_1 e_2 (1 + g̃_1 + g̃_2 + g̃_1 g̃_2 + g̃_2 g̃_1 + g̃_1 g̃_2 g̃_1)`.
pub fn ftl_generator_u(d: u32) -> YElement {
    let y = y3(d);
    let body = steinberg_with(d, &LaurentQ::one(), |i| switch_g(&y, i));
    e1e2(d).multiply(&body).unwrap()
}

/// `g̃_i = g_i + (q - 1) e_i g_i`.
pub fn switch_g(y: &YokonumaAlgebra, i: usize) -> YElement {
    let eg = y.e(i).multiply(&y.g(i)).unwrap();
    y.g(i)
        .add(&eg.scale(&lq(1, 1).sub(&LaurentQ::one())))
        .unwrap()
}

/// `b̃_i = b_i + (q - 1) ε_i b_i` in `ℰ_n(q)`.
pub fn switch_b(n: usize, i: usize) -> Result<EElement> {
    let b = EElement::generator(n, EGenerator::B(i))?;
    let eb = EElement::generator(n, EGenerator::Tie(i))?.multiply(&b)?;
    b.add(&eb.scale(&lq(1, 1).sub(&LaurentQ::one())))
}

/// `ε_1 ε_2 b_{1,2}` in `ℰ_3(q)`, the PTL ideal generator.
pub fn ptl_generator() -> EElement {
    let b = |i| EElement::generator(3, EGenerator::B(i)).unwrap();
    let (b1, b2) = (b(1), b(2));
    let b12 = b1.multiply(&b2).unwrap();
    let b21 = b2.multiply(&b1).unwrap();
    let b121 = b12.multiply(&b1).unwrap();
    let q = LaurentQ::q_pow(1);
    let body = EElement::one(3)
        .add(&b1.add(&b2).unwrap().scale(&q))
        .and_then(|x| x.add(&b12.add(&b21).unwrap().scale(&q.pow(2))))
        .and_then(|x| x.add(&b121.scale(&q.pow(3))))
        .unwrap();
    EElement::one(3)
        .mul_tie(1, 2)
        .mul_tie(2, 3)
        .multiply(&body)
        .unwrap()
}

/// The inductive basis of `Y_{d,3}`: the six families
/// `t_1^a t_2^b t_3^c`, `t_1^a g_1 t_1^b t_3^c`, `t_1^a t_2^b g_2 g_1 t_1^c`,
/// `t_1^a t_2^b g_2 t_2^c`, `t_1^a g_1 t_1^b g_2 t_2^c`,
/// `t_1^a g_1 t_1^b g_2 g_1 t_1^c`, for `0 ≤ a, b, c < d`.
pub fn y3_basis(d: u32) -> Vec<YElement> {
    let one = YElement::one(d, 3);
    let mut out = Vec::with_capacity(6 * (d as usize).pow(3));
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let t1a = one.mul_t(1, a);
                out.push(t1a.mul_t(2, b).mul_t(3, c));
                out.push(t1a.mul_g(1).mul_t(1, b).mul_t(3, c));
                out.push(t1a.mul_t(2, b).mul_g(2).mul_g(1).mul_t(1, c));
                out.push(t1a.mul_t(2, b).mul_g(2).mul_t(2, c));
                out.push(t1a.mul_g(1).mul_t(1, b).mul_g(2).mul_t(2, c));
                out.push(t1a.mul_g(1).mul_t(1, b).mul_g(2).mul_g(1).mul_t(1, c));
            }
        }
    }
    out
}

/// All `E_P b_w` in `ℰ_n`.
pub fn tied_basis(n: usize) -> Vec<EElement> {
    let perms = all_permutations(n);
    SetPartition::all(n)
        .into_iter()
        .flat_map(|p| {
            perms
                .iter()
                .map(move |&w| EElement::monomial(TiedMonomial { p, w }, LaurentQ::one()))
        })
        .collect()
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if left.is_empty() {
            out.push(Permutation::from_images(prefix).unwrap());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            prefix.push(v);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// Values of the trace parameters, all over one common denominator:
/// `x_k = x_num[k] / den` and `z = z_num / den` (the `q`-side `z`).
#[derive(Clone, Debug, PartialEq)]
pub struct TraceParameters {
    pub x_num: Vec<Poly<Cyclotomic>>,
    pub z_num: Poly<Cyclotomic>,
    pub den: Poly<Cyclotomic>,
}

impl TraceParameters {
    /// An E-system solution for `D` together with a value of `z`.
    pub fn esystem(d: u32, subset: &[u32], z: &RationalFunction<Cyclotomic>) -> Result<Self> {
        let sol = esystem_solution(d, subset)?;
        let den = z.denominator().clone();
        Ok(TraceParameters {
            x_num: (0..d).map(|k| den.scale(&sol.x(k))).collect(),
            z_num: z.numerator().clone(),
            den,
        })
    }

    pub fn x(&self, k: u32) -> RationalFunction<Cyclotomic> {
        let k = k as usize % self.x_num.len();
        RationalFunction::new(self.x_num[k].clone(), self.den.clone()).unwrap()
    }

    pub fn z(&self) -> RationalFunction<Cyclotomic> {
        RationalFunction::new(self.z_num.clone(), self.den.clone()).unwrap()
    }

    /// `den^K · t(x, z)`, with `K` the largest total degree of `t` in the
    /// parameters. It vanishes exactly when `t` vanishes at these values.
    pub fn evaluate(&self, t: &TraceValue) -> Poly<Cyclotomic> {
        let degree = |m: &Monomial| {
            m.pairs()
                .iter()
                .filter(|(v, _)| matches!(v, Var::Z | Var::X(_)))
                .map(|&(_, e)| e as u32)
                .sum::<u32>()
        };
        let top = t.terms().map(|(m, _)| degree(m)).max().unwrap_or(0);
        let mut out = Poly::zero();
        for (m, c) in t.terms() {
            let mut term = Poly::constant(Cyclotomic::from_rational(c.clone()));
            for &(v, e) in m.pairs() {
                let factor = match v {
                    Var::Z => self.z_num.pow(e as u32),
                    Var::X(k) => self.x_num[k as usize % self.x_num.len()].pow(e as u32),
                    _ => Poly::var_pow(v, e),
                };
                term = term.mul(&factor);
            }
            out.add_assign(&term.mul(&self.den.pow(top - degree(m))));
        }
        out
    }

    pub fn annihilates(&self, t: &TraceValue) -> bool {
        self.evaluate(t).is_zero()
    }
}

/// `u = q²` as a polynomial.
fn u() -> Poly<Cyclotomic> {
    Poly::var_pow(Var::Q, 2)
}

fn rational_constant(r: Rational) -> Poly<Cyclotomic> {
    Poly::constant(Cyclotomic::rational(r))
}

/// `z = -q^{-1}/((q² + 1)|D|)`, the value giving the one-variable
/// invariants.
pub fn ftl_z(size: usize) -> RationalFunction<Cyclotomic> {
    RationalFunction::new(
        Poly::var_pow(Var::Q, -1).neg(),
        u().add(&Poly::one())
            .scale(&Cyclotomic::rational(rat(size as i64, 1))),
    )
    .unwrap()
}

/// The discarded value `z̃ = -1/|D|`, i.e. `z = -q^{-1}/|D|`.
pub fn discarded_z(size: usize) -> RationalFunction<Cyclotomic> {
    RationalFunction::new(
        Poly::var_pow(Var::Q, -1).neg(),
        rational_constant(rat(size as i64, 1)),
    )
    .unwrap()
}

/// Outcome of an annihilation check over a list of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilation {
    pub checked: usize,
    /// Index of the first basis monomial whose trace does not vanish.
    pub first_failure: Option<usize>,
}

impl Annihilation {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for Annihilation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure {
            None => write!(f, "{} monomials annihilated", self.checked),
            Some(i) => write!(f, "monomial #{i} of {} survives", self.checked),
        }
    }
}

/// Traces `tr(m · r)` for all basis monomials `m`, with generic parameters.
pub fn ideal_traces(basis: &[YElement], r: &YElement) -> Vec<TraceValue> {
    let mut tracer = YTracer::new();
    basis
        .iter()
        .map(|m| tracer.trace(&m.multiply(r).expect("same algebra")))
        .collect()
}

fn annihilation(traces: &[TraceValue], params: &TraceParameters) -> Annihilation {
    Annihilation {
        checked: traces.len(),
        first_failure: traces.iter().position(|t| !params.annihilates(t)),
    }
}

/// Checks `tr_{d,D}(m r_{1,2}) = 0` at `z = z0` for all `6d³` basis
/// monomials `m` of `Y_{d,3}`.
pub fn ftl_annihilation_check(
    d: u32,
    subset: &[u32],
    z0: &RationalFunction<Cyclotomic>,
) -> Result<Annihilation> {
    let subset = canonical_subset(d, subset)?;
    let params = TraceParameters::esystem(d, &subset, z0)?;
    Ok(annihilation(
        &ideal_traces(&y3_basis(d), &ftl_generator(d)),
        &params,
    ))
}

/// The left-hand sides of
/// `(u+1) z̃² x_m + (u+2) z̃ E^{(m)} + tr(e_1^{(m)} e_2) = 0`, `0 ≤ m < d`,
/// as trace polynomials (with `z̃ = q z`).
pub fn ftl_system(d: u32) -> Vec<TraceValue> {
    let y = y3(d);
    let mut tracer = YTracer::new();
    let zt = Poly::var(Var::Z).mul(&Poly::var(Var::Q));
    let u = Poly::<Rational>::var_pow(Var::Q, 2);
    (0..d)
        .map(|m| {
            let em = y.e(1).mul_t(1, m);
            let e_shift = tracer.trace(&em);
            let e1e2 = tracer.trace(&em.multiply(&y.e(2)).unwrap());
            u.add(&Poly::one())
                .mul(&zt.pow(2))
                .mul(&x_var(m))
                .add(&u.add(&Poly::from_int(2)).mul(&zt).mul(&e_shift))
                .add(&e1e2)
        })
        .collect()
}

/// Residual numerators of [`ftl_system`] at the given parameters.
pub fn ftl_system_residuals(d: u32, params: &TraceParameters) -> Vec<Poly<Cyclotomic>> {
    ftl_system(d).iter().map(|t| params.evaluate(t)).collect()
}

/// A solution family of the FTL conditions in the `u`-presentation:
/// `x_k = -z̃ (Σ_{m∈Sup₁} χ_m(t^k) + (u+1) Σ_{m∈Sup₂} χ_m(t^k))` and
/// `z̃ = -1/(|Sup₁| + (u+1)|Sup₂|)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FTLParameterFamily {
    pub d: u32,
    pub sup1: Vec<u32>,
    pub sup2: Vec<u32>,
    pub params: TraceParameters,
}

impl FTLParameterFamily {
    /// `z̃ = q z` as a rational function.
    pub fn z_tilde(&self) -> RationalFunction<Cyclotomic> {
        self.params
            .z()
            .mul(&RationalFunction::from_poly(Poly::var(Var::Q)))
    }
}

pub fn ftl_family(d: u32, sup1: &[u32], sup2: &[u32]) -> Result<FTLParameterFamily> {
    let norm = |s: &[u32]| -> Result<Vec<u32>> {
        if s.is_empty() {
            Ok(Vec::new())
        } else {
            canonical_subset(d, s)
        }
    };
    let (s1, s2) = (norm(sup1)?, norm(sup2)?);
    if s1.is_empty() && s2.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&m) = s1.iter().find(|m| s2.contains(m)) {
        return Err(Error::OverlappingSupports(m));
    }
    let u1 = u().add(&Poly::one());
    let size = |s: &[u32]| rational_constant(rat(s.len() as i64, 1));
    let den = size(&s1).add(&u1.mul(&size(&s2)));
    let chi_sum = |s: &[u32], k: u32| {
        s.iter().fold(Cyclotomic::zero(), |acc, &m| {
            acc.add(&Cyclotomic::zeta_pow(d, (m * k) as i64))
        })
    };
    let x_num = (0..d)
        .map(|k| Poly::constant(chi_sum(&s1, k)).add(&u1.scale(&chi_sum(&s2, k))))
        .collect();
    Ok(FTLParameterFamily {
        d,
        sup1: s1,
        sup2: s2,
        params: TraceParameters {
            x_num,
            z_num: Poly::var_pow(Var::Q, -1).neg(),
            den,
        },
    })
}

/// Every `(Sup₁, Sup₂)` with disjoint supports, not both empty, as bit
/// masks over `Z/dZ`.
pub fn ftl_support_pairs(d: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    // Each residue is in Sup₁, Sup₂, or neither.
    for code in 1..3u32.pow(d) {
        let (mut s1, mut s2) = (Vec::new(), Vec::new());
        let mut c = code;
        for m in 0..d {
            match c % 3 {
                1 => s1.push(m),
                2 => s2.push(m),
                _ => {}
            }
            c /= 3;
        }
        out.push((s1, s2));
    }
    out
}

/// Common roots in `z` of `τ(m h_{1,2})` over the six permutations `m` of
/// `H_3`, as elements of `Q(q)`.
pub fn tl_jones_z_check() -> Result<Vec<QFn>> {
    let traces = ideal_traces(&y3_basis(1), &steinberg(1));
    let mut g = UniPoly::<QFn>::zero();
    for t in &traces {
        g = g.gcd(&in_z(t)?);
    }
    roots(&g)
}

/// `-q^{-1}/(q² + 1)` and `-q^{-1}`.
pub fn jones_values() -> [QFn; 2] {
    let qinv = QFn::q_pow(-1);
    let u1 = Coeff::add(&QFn::q_pow(2), &QFn::one());
    [qinv.mul(&u1.inv().unwrap()).neg(), qinv.neg()]
}

/// A trace value with only `z` and `q` as a polynomial in `z` over `Q(q)`.
fn in_z(t: &TraceValue) -> Result<UniPoly<QFn>> {
    let mut coeffs: Vec<QFn> = Vec::new();
    for (k, c) in t.collect_by(Var::Z) {
        if k < 0 {
            return Err(Error::Unsupported("negative power of z".into()));
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, QFn::zero());
        }
        coeffs[k] = QFn::from_laurent(&c)
            .ok_or_else(|| Error::Unsupported(format!("coefficient {c} is not in Q(q)")))?;
    }
    Ok(UniPoly::new(coeffs))
}

fn roots(p: &UniPoly<QFn>) -> Result<Vec<QFn>> {
    let p = p.monic();
    match p.degree() {
        None => Err(Error::Unsupported(
            "the zero polynomial has every root".into(),
        )),
        Some(0) => Ok(Vec::new()),
        Some(1) => Ok(vec![p.coeff(0).neg()]),
        Some(2) => {
            let (b, c) = (p.coeff(1), p.coeff(0));
            let four = QFn::from_rational(rat(4, 1));
            let disc = b.mul(&b).sub(&four.mul(&c));
            let root = QFn::new(
                disc.numerator().sqrt_exact().ok_or(Error::InexactDivision(
                    "discriminant is not a square".into(),
                ))?,
                disc.denominator()
                    .sqrt_exact()
                    .ok_or(Error::InexactDivision(
                        "discriminant is not a square".into(),
                    ))?,
            )
            .unwrap();
            let half = QFn::from_rational(rat(1, 2));
            let mut out = vec![b.neg().add(&root).mul(&half), b.neg().sub(&root).mul(&half)];
            out.dedup();
            Ok(out)
        }
        Some(k) => Err(Error::Unsupported(format!("degree {k} root finding"))),
    }
}

/// `F_i = q h_i + 1` in `H_3(q)`, so that `f_i = F_i/(q² + 1)`.
pub fn tl_idempotent_numerator(i: usize) -> YElement {
    let y = y3(1);
    y.g(i).scale(&LaurentQ::q_pow(1)).add(&y.one()).unwrap()
}

/// `f_i² = f_i`, checked as `F_i² = (q² + 1) F_i`.
pub fn tl_idempotent_check(i: usize) -> bool {
    let f = tl_idempotent_numerator(i);
    f.multiply(&f).unwrap() == f.scale(&lq(1, 2).add(&LaurentQ::one()))
}

/// `f_i f_j f_i - δ f_i` with `δ^{-1} = 2 + q² + q^{-2}` is annihilated by
/// `τ` at `z = -q^{-1}/(q² + 1)` against all of `H_3`. Scaled by
/// `(q² + 1)³` the element is `F_i F_j F_i - q² F_i`.
pub fn tl_delta_certificate(i: usize, j: usize) -> Result<Annihilation> {
    let (fi, fj) = (tl_idempotent_numerator(i), tl_idempotent_numerator(j));
    let x = fi
        .multiply(&fj)?
        .multiply(&fi)?
        .sub(&fi.scale(&LaurentQ::q_pow(2)))?;
    let params = TraceParameters::esystem(1, &[0], &ftl_z(1))?;
    Ok(annihilation(&ideal_traces(&y3_basis(1), &x), &params))
}

/// Report of the partition Temperley-Lieb checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtlReport {
    /// `φ(ε_1 ε_2 b_{1,2}) = e_1 e_2 g_{1,2}` in `Y_{d,3}`.
    pub image_matches: bool,
    /// `tr(m ε_1 ε_2 b_{1,2})` at `E = 1/|D|`, `z = -q^{-1}/((q²+1)|D|)`,
    /// one entry per `|D|` in `1..=d`.
    pub annihilation: Vec<Annihilation>,
}

impl PtlReport {
    pub fn holds(&self) -> bool {
        self.image_matches && self.annihilation.iter().all(Annihilation::holds)
    }
}

pub fn ptl_checks(d: u32) -> Result<PtlReport> {
    let gen = ptl_generator();
    let image_matches = phi_map(&gen, d) == ftl_generator(d);
    let mut tracer = ETracer::new();
    let traces: Vec<TraceValue> = tied_basis(3)
        .iter()
        .map(|m| tracer.trace(&m.multiply(&gen).unwrap()))
        .collect();
    let mut annihilation_reports = Vec::new();
    for size in 1..=d as usize {
        let e = rational_constant(rat(1, size as i64));
        let z = ftl_z(size);
        let params = TraceParameters {
            x_num: vec![z.denominator().clone()],
            z_num: z.numerator().clone(),
            den: z.denominator().clone(),
        };
        let specialized: Vec<TraceValue> = traces
            .iter()
            .map(|t| {
                let c = crate::invariants::to_cyclotomic(t)
                    .substitute(Var::E, &e)
                    .unwrap();
                c.map_coeffs(|x| x.as_rational().expect("rational trace"))
            })
            .collect();
        annihilation_reports.push(annihilation(&specialized, &params));
    }
    Ok(PtlReport {
        image_matches,
        annihilation: annihilation_reports,
    })
}

/// `g̃² = 1 + (u - 1) e + (u - 1) e g̃` with `g̃ = g + (q - 1) e g`, `u = q²`,
/// and the inverse change `g = g̃ + (q^{-1} - 1) e g̃`.
pub fn y_switch_check(d: u32) -> Result<bool> {
    let y = YokonumaAlgebra::new(d, 2)?;
    let gt = switch_g(&y, 1);
    let um1 = lq(1, 2).sub(&LaurentQ::one());
    let e = y.e(1);
    let rhs = y
        .one()
        .add(&e.scale(&um1))?
        .add(&e.multiply(&gt)?.scale(&um1))?;
    let back = gt.add(&e.multiply(&gt)?.scale(&lq(1, -1).sub(&LaurentQ::one())))?;
    Ok(gt.multiply(&gt)? == rhs && back == y.g(1))
}

/// The same change of presentation in `ℰ_2(q)`, plus `φ(b̃) = g̃`.
pub fn e_switch_check(d: u32) -> Result<bool> {
    let bt = switch_b(2, 1)?;
    let um1 = lq(1, 2).sub(&LaurentQ::one());
    let eps = EElement::generator(2, EGenerator::Tie(1))?;
    let rhs = EElement::one(2)
        .add(&eps.scale(&um1))?
        .add(&eps.multiply(&bt)?.scale(&um1))?;
    let y = YokonumaAlgebra::new(d, 2)?;
    Ok(bt.multiply(&bt)? == rhs && phi_map(&bt, d) == switch_g(&y, 1))
}

/// `tr_{d,D}(g̃^m)` as a polynomial in `z`.
pub fn switched_power_trace(d: u32, subset: &[u32], m: u32) -> Result<Poly<Cyclotomic>> {
    let y = YokonumaAlgebra::new(d, 2)?;
    let gt = switch_g(&y, 1);
    let mut x = y.one();
    for _ in 0..m {
        x = x.multiply(&gt)?;
    }
    crate::yokonuma::specialize_trace(&YTracer::new().trace(&x), d, subset)
}

/// Closed forms for `tr_{d,D}(g̃^m)` with `z̃ = q z`, `u = q²`:
/// `1 + A z̃ + A/|D|` with `A = (u^m - 1)/(u + 1)` for even `m`, and
/// `A z̃ + A/|D| - 1/|D|` with `A = (u^m + 1)/(u + 1)` for odd `m`.
pub fn switched_power_formula(size: usize, m: u32) -> Poly<Cyclotomic> {
    let um = Poly::<Cyclotomic>::var_pow(Var::Q, 2 * m as i32);
    let u1 = u().add(&Poly::one());
    let even = m.is_multiple_of(2);
    let a_num = if even {
        um.sub(&Poly::one())
    } else {
        um.add(&Poly::one())
    };
    let a = a_num.div_exact(&u1).expect("u + 1 divides u^m ∓ 1");
    let inv_size = rational_constant(rat(1, size as i64));
    let zt = Poly::var(Var::Z).mul(&Poly::var(Var::Q));
    let base = a.mul(&zt).add(&a.mul(&inv_size));
    if even {
        base.add(&Poly::one())
    } else {
        base.sub(&inv_size)
    }
}

/// The odd-power formula with `A = (u^m - 1)/(u + 1)`, multiplied through
/// by `u + 1`: `(u^m - 1)(z̃ + 1/|D|) - (u + 1)/|D|`. Compare it with
/// `(u + 1) tr(g̃^m)`; the two agree only at `z̃ = -1/|D|`.
pub fn switched_power_formula_alt(size: usize, m: u32) -> Poly<Cyclotomic> {
    let um = Poly::<Cyclotomic>::var_pow(Var::Q, 2 * m as i32);
    let inv_size = rational_constant(rat(1, size as i64));
    let zt = Poly::var(Var::Z).mul(&Poly::var(Var::Q));
    um.sub(&Poly::one())
        .mul(&zt.add(&inv_size))
        .sub(&inv_size.mul(&u().add(&Poly::one())))
}

/// Evaluates a polynomial in `z` at a rational value, returning the
/// numerator of the result.
pub fn eval_z_numerator(
    p: &Poly<Cyclotomic>,
    z: &RationalFunction<Cyclotomic>,
) -> Poly<Cyclotomic> {
    let params = TraceParameters {
        x_num: vec![z.denominator().clone()],
        z_num: z.numerator().clone(),
        den: z.denominator().clone(),
    };
    let mut acc = Poly::zero();
    let top = p.max_exp(Var::Z).unwrap_or(0).max(0);
    for (k, c) in p.collect_by(Var::Z) {
        let term = c
            .mul(&params.z_num.pow(k as u32))
            .mul(&params.den.pow((top - k) as u32));
        acc.add_assign(&term);
    }
    acc
}
