//! Verification suites: batches of exact checks reported one line each as
//! `CHECK <name> PASS|FAIL <witness>`.
//!
//! Random inputs are drawn from a ChaCha8 stream seeded per suite, before
//! any check runs, so a report depends only on the configuration. Checks
//! run in parallel and are reported in construction order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braid::{
    random_knot_word, random_mixed_word, random_split_word, random_word, BraidWord,
    FramedBraidWord, LinkRecord, MarkovMove,
};
use crate::error::{Error, Result};
use crate::esystem::{all_solutions, fourier_search, verify_esystem, GroupAlgebraElement};
use crate::invariants::{
    classical_invariant, disjoint_union_check, e_constant, invariant, knot_coincidence_check,
    q_diff, skein_check, skein_resolve_theta, ties_trace, to_cyclotomic, y_trace, InvariantKind,
    InvariantPolynomial, InvariantSpec, Lambda, SkeinKind,
};
use crate::quotients::{
    discarded_z, e_switch_check, ftl_annihilation_check, ftl_family, ftl_generator,
    ftl_support_pairs, ftl_system_residuals, ftl_z, ideal_traces, jones_values, ptl_checks,
    switched_power_formula, switched_power_trace, tl_delta_certificate, tl_idempotent_check,
    tl_jones_z_check, y3_basis, y_switch_check,
};
use crate::ring::{rat, Coeff, Cyclotomic, Poly, Var};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_f7a1;

/// The outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "CHECK {} {} {}", self.name, status, self.witness)
    }
}

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ESystem,
    Tl,
    Ftl,
    Ptl,
    Switch,
    Engines,
    Hopf,
    Knots,
    Skein,
    Markov,
    Catalog,
    All,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::ESystem,
        Suite::Tl,
        Suite::Ftl,
        Suite::Ptl,
        Suite::Switch,
        Suite::Engines,
        Suite::Hopf,
        Suite::Knots,
        Suite::Skein,
        Suite::Markov,
        Suite::Catalog,
        Suite::All,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::ESystem => "esystem",
            Suite::Tl => "tl",
            Suite::Ftl => "ftl",
            Suite::Ptl => "ptl",
            Suite::Switch => "switch",
            Suite::Engines => "engines",
            Suite::Hopf => "hopf",
            Suite::Knots => "knots",
            Suite::Skein => "skein",
            Suite::Markov => "markov",
            Suite::Catalog => "catalog",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown suite {s:?}"),
            })
    }
}

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest modulus; algebraic suites run for every `d` up to this.
    pub d: u32,
    /// Largest number of strands for random braids.
    pub n: usize,
    pub seed: u64,
    /// Random samples per randomized check.
    pub samples: usize,
    /// Longest random braid word.
    pub max_len: usize,
    /// Node budget for the skein-resolution oracle.
    pub budget: usize,
    pub catalog: Vec<LinkRecord>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            d: 3,
            n: 4,
            seed: DEFAULT_SEED,
            samples: 20,
            max_len: 8,
            budget: crate::invariants::DEFAULT_BUDGET,
            catalog: Vec::new(),
        }
    }
}

type Task = Box<dyn FnOnce() -> CheckResult + Send>;

fn task<F>(name: String, f: F) -> Task
where
    F: FnOnce() -> Result<(bool, String)> + Send + 'static,
{
    Box::new(move || match f() {
        Ok((pass, witness)) => CheckResult {
            name,
            pass,
            witness,
        },
        Err(e) => CheckResult {
            name,
            pass: false,
            witness: format!("error: {e}"),
        },
    })
}

/// Runs a suite (`All` runs every other suite in order).
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckResult> {
    let tasks = match suite {
        Suite::All => Suite::ALL[..Suite::ALL.len() - 1]
            .iter()
            .flat_map(|&s| build(s, cfg))
            .collect(),
        s => build(s, cfg),
    };
    tasks.into_par_iter().map(|t| t()).collect()
}

fn build(suite: Suite, cfg: &VerifyConfig) -> Vec<Task> {
    // Each suite gets its own stream so its report does not depend on what
    // ran before it.
    let stream = Suite::ALL.iter().position(|&s| s == suite).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    match suite {
        Suite::ESystem => esystem_tasks(cfg, &mut rng),
        Suite::Tl => tl_tasks(),
        Suite::Ftl => ftl_tasks(cfg),
        Suite::Ptl => (1..=cfg.d)
            .map(|d| {
                task(format!("ptl[d={d}]"), move || {
                    let r = ptl_checks(d)?;
                    let checked: usize = r.annihilation.iter().map(|a| a.checked).sum();
                    Ok((
                        r.holds(),
                        format!("image={} checked={checked}", r.image_matches),
                    ))
                })
            })
            .collect(),
        Suite::Switch => switch_tasks(cfg),
        Suite::Engines => engine_tasks(cfg, &mut rng),
        Suite::Hopf => hopf_tasks(cfg),
        Suite::Knots => knot_tasks(cfg, &mut rng),
        Suite::Skein => skein_tasks(cfg, &mut rng),
        Suite::Markov => markov_tasks(cfg, &mut rng),
        Suite::Catalog => catalog_tasks(cfg, &mut rng),
        Suite::All => unreachable!(),
    }
}

fn subset_text(subset: &[u32]) -> String {
    let v: Vec<String> = subset.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn random_cyclotomic(rng: &mut ChaCha8Rng, d: u32) -> Cyclotomic {
    (0..d as i64).fold(Cyclotomic::zero(), |acc, j| {
        let c = rng.gen_range(-3i64..=3);
        acc.add(&Cyclotomic::zeta_pow(d, j).scale(&rat(c, 1)))
    })
}

fn random_element(rng: &mut ChaCha8Rng, d: u32) -> GroupAlgebraElement {
    GroupAlgebraElement::new((0..d).map(|_| random_cyclotomic(rng, d)).collect())
}

/// The five properties of the Fourier transform on one random input.
fn fourier_properties(
    a: &GroupAlgebraElement,
    b: &GroupAlgebraElement,
    k: i64,
) -> Result<Option<&'static str>> {
    let d = a.order();
    let dc = Cyclotomic::rational(rat(d as i64, 1));
    if a.convolve(b)?.fourier() != a.fourier().pointwise(&b.fourier())? {
        return Ok(Some("convolution"));
    }
    let lhs = a.pointwise(b)?.fourier().scale(&dc);
    if lhs != a.fourier().convolve(&b.fourier())? {
        return Ok(Some("pointwise"));
    }
    if GroupAlgebraElement::delta(d, k).fourier() != GroupAlgebraElement::character(d, -k) {
        return Ok(Some("delta"));
    }
    if GroupAlgebraElement::character(d, k).fourier() != GroupAlgebraElement::delta(d, k).scale(&dc)
    {
        return Ok(Some("character"));
    }
    if a.fourier().fourier() != a.reversed().scale(&dc) {
        return Ok(Some("inversion"));
    }
    Ok(None)
}

fn esystem_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    for d in 1..=cfg.d {
        tasks.push(task(format!("esystem.solutions[d={d}]"), move || {
            let sols = all_solutions(d);
            if let Some(bad) = sols.iter().find(|s| !verify_esystem(&s.x)) {
                return Ok((false, format!("D={}", subset_text(&bad.subset))));
            }
            let mut xs: Vec<String> = sols.iter().map(|s| format!("{:?}", s.x)).collect();
            xs.sort();
            xs.dedup();
            let distinct = xs.len() == sols.len();
            Ok((
                distinct,
                format!("solutions={} distinct={distinct}", sols.len()),
            ))
        }));
        tasks.push(task(format!("esystem.search[d={d}]"), move || {
            let found = fourier_search(d);
            let sols: Vec<Vec<Cyclotomic>> = all_solutions(d).into_iter().map(|s| s.x).collect();
            let same = found.len() == sols.len() && found.iter().all(|x| sols.contains(x));
            Ok((
                same,
                format!("found={} expected={}", found.len(), sols.len()),
            ))
        }));
        let inputs: Vec<_> = (0..cfg.samples)
            .map(|_| {
                let k = rng.gen_range(0..d as i64);
                (random_element(rng, d), random_element(rng, d), k)
            })
            .collect();
        tasks.push(task(format!("esystem.fourier[d={d}]"), move || {
            for (i, (a, b, k)) in inputs.iter().enumerate() {
                if let Some(what) = fourier_properties(a, b, *k)? {
                    return Ok((false, format!("trial={i} property={what}")));
                }
            }
            Ok((true, format!("trials={}", inputs.len())))
        }));
    }
    tasks
}

fn tl_tasks() -> Vec<Task> {
    let mut tasks = vec![task("tl.jones_z".to_string(), || {
        let mut found = tl_jones_z_check()?;
        let mut expected = jones_values().to_vec();
        found.sort_by_key(|z| z.to_string());
        expected.sort_by_key(|z| z.to_string());
        let text: Vec<String> = found.iter().map(|z| z.to_string()).collect();
        Ok((found == expected, format!("z in {{{}}}", text.join(", "))))
    })];
    for i in 1..=2 {
        tasks.push(task(format!("tl.idempotent[i={i}]"), move || {
            Ok((tl_idempotent_check(i), "f^2 = f".to_string()))
        }));
    }
    for (i, j) in [(1, 2), (2, 1)] {
        tasks.push(task(format!("tl.delta[i={i},j={j}]"), move || {
            let r = tl_delta_certificate(i, j)?;
            Ok((r.holds(), r.to_string()))
        }));
    }
    tasks
}

fn ftl_tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for d in 1..=cfg.d {
        for sol in all_solutions(d) {
            let subset = sol.subset;
            tasks.push(task(
                format!("ftl.annihilation[d={d},D={}]", subset_text(&subset)),
                move || {
                    let r = ftl_annihilation_check(d, &subset, &ftl_z(subset.len()))?;
                    Ok((r.holds(), r.to_string()))
                },
            ));
        }
        tasks.push(task(format!("ftl.discarded[d={d}]"), move || {
            let all: Vec<u32> = (0..d).collect();
            let r = ftl_annihilation_check(d, &all, &discarded_z(d as usize))?;
            Ok((r.holds(), r.to_string()))
        }));
        tasks.push(task(format!("ftl.family[d={d}]"), move || {
            let traces = ideal_traces(&y3_basis(d), &ftl_generator(d));
            let pairs = ftl_support_pairs(d);
            for (s1, s2) in &pairs {
                let fam = ftl_family(d, s1, s2)?;
                let system = ftl_system_residuals(d, &fam.params)
                    .iter()
                    .all(Poly::is_zero);
                if !system || !traces.iter().all(|t| fam.params.annihilates(t)) {
                    let w = format!("Sup1={} Sup2={}", subset_text(s1), subset_text(s2));
                    return Ok((false, w));
                }
            }
            Ok((
                true,
                format!("pairs={} basis={}", pairs.len(), traces.len()),
            ))
        }));
    }
    tasks
}

fn switch_tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    for d in 1..=cfg.d {
        tasks.push(task(format!("switch.yokonuma[d={d}]"), move || {
            Ok((
                y_switch_check(d)?,
                "inverse and quadratic relation".to_string(),
            ))
        }));
        tasks.push(task(format!("switch.ties[d={d}]"), move || {
            Ok((
                e_switch_check(d)?,
                "inverse, quadratic relation, image".to_string(),
            ))
        }));
        tasks.push(task(format!("switch.powers[d={d}]"), move || {
            for sol in all_solutions(d) {
                for m in 1..=6 {
                    let tr = switched_power_trace(d, &sol.subset, m)?;
                    if tr != switched_power_formula(sol.subset.len(), m) {
                        return Ok((false, format!("D={} m={m}", subset_text(&sol.subset))));
                    }
                }
            }
            Ok((true, "m=1..6".to_string()))
        }));
    }
    tasks
}

fn random_n(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, min: usize) -> usize {
    rng.gen_range(min..=cfg.n.max(min))
}

fn engine_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let words: Vec<BraidWord> = (0..cfg.samples)
        .map(|_| {
            let n = random_n(rng, cfg, 2);
            let len = rng.gen_range(0..=cfg.max_len);
            random_word(rng, n, len)
        })
        .collect();
    let mut tasks = Vec::new();
    for d in 1..=cfg.d {
        let words = words.clone();
        tasks.push(task(
            format!("engines.ties_vs_yokonuma[d={d}]"),
            move || {
                let e = Poly::constant(Cyclotomic::rational(rat(1, d as i64)));
                let all: Vec<u32> = (0..d).collect();
                for b in &words {
                    let lhs = to_cyclotomic(&ties_trace(b)).substitute(Var::E, &e)?;
                    let rhs = y_trace(&FramedBraidWord::classical(b.clone()), d, &all)?;
                    if lhs != rhs {
                        return Ok((false, b.to_string()));
                    }
                }
                Ok((true, format!("words={}", words.len())))
            },
        ));
    }
    tasks
}

/// `1 + (q - q^{-1}) z`.
pub fn hopf_trace_expected() -> Poly<Cyclotomic> {
    Poly::one().add(&q_diff().mul(&Poly::var(Var::Z)))
}

fn hopf_tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    let hopf = BraidWord::new(2, vec![1, 1]).expect("valid word");
    for d in 1..=cfg.d {
        let b = hopf.clone();
        tasks.push(task(format!("hopf.trace[d={d}]"), move || {
            let all: Vec<u32> = (0..d).collect();
            let t = y_trace(&FramedBraidWord::classical(b), d, &all)?;
            Ok((t == hopf_trace_expected(), t.to_string()))
        }));
        if d >= 2 {
            let b = hopf.clone();
            tasks.push(task(format!("hopf.rescaling[d={d}]"), move || {
                let all: Vec<u32> = (0..d).collect();
                let t = y_trace(&FramedBraidWord::classical(b.clone()), d, &all)?;
                let tau = y_trace(&FramedBraidWord::classical(b), 1, &[0])?;
                let e = e_constant(d as usize);
                let e_inv = Cyclotomic::rational(rat(d as i64, 1));
                let rescaled = tau.substitute(Var::Z, &Poly::var(Var::Z).scale(&e_inv))?;
                // tr_d = 1 - E + E τ(z/E), which differs from E τ(z/E).
                let structured = Poly::one().sub(&e).add(&rescaled.mul(&e));
                let pass = t != rescaled.mul(&e) && t == structured;
                Ok((pass, "tr = 1 - E + E tau(z/E)".to_string()))
            }));
        }
    }
    tasks
}

fn knot_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut knots = vec![
        BraidWord::new(2, vec![1, 1, 1]).expect("valid word"),
        BraidWord::new(3, vec![1, -2, 1, -2]).expect("valid word"),
    ];
    for _ in 0..cfg.samples {
        let n = random_n(rng, cfg, 2);
        let len = rng.gen_range(n - 1..=cfg.max_len.max(n - 1));
        knots.push(random_knot_word(rng, n, len));
    }
    let splits: Vec<BraidWord> = (0..cfg.samples)
        .map(|_| {
            let k = rng.gen_range(1..=3usize);
            let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=2)).collect();
            {
                let len = rng.gen_range(0..=4);
                random_split_word(rng, &sizes, len)
            }
        })
        .collect();
    let mut tasks = Vec::new();
    for d in 2..=cfg.d.max(1) {
        let ks = knots.clone();
        tasks.push(task(format!("knots.coincidence[d={d}]"), move || {
            let all: Vec<u32> = (0..d).collect();
            for b in &ks {
                if !knot_coincidence_check(b, d, &all)? {
                    return Ok((false, b.to_string()));
                }
            }
            Ok((true, format!("knots={}", ks.len())))
        }));
        let ss = splits.clone();
        tasks.push(task(format!("knots.disjoint_union[d={d}]"), move || {
            let all: Vec<u32> = (0..d).collect();
            for b in &ss {
                if !disjoint_union_check(b, d, &all)? {
                    return Ok((false, b.to_string()));
                }
            }
            Ok((true, format!("links={}", ss.len())))
        }));
    }
    tasks
}

fn skein_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    let words: Vec<BraidWord> = (0..cfg.samples)
        .map(|_| {
            let n = random_n(rng, cfg, 2);
            let len = rng.gen_range(1..=cfg.max_len.max(1));
            random_word(rng, n, len)
        })
        .collect();
    tasks.push(task("skein.homflypt".to_string(), move || {
        let mut crossings = 0;
        for b in &words {
            let fb = FramedBraidWord::classical(b.clone());
            for p in 0..b.len() {
                crossings += 1;
                if !skein_check(&SkeinKind::Homflypt, &fb, p)? {
                    return Ok((false, format!("{b} at {p}")));
                }
            }
        }
        Ok((true, format!("crossings={crossings}")))
    }));
    let mixed: Vec<BraidWord> = (0..cfg.samples)
        .map(|_| {
            let n = random_n(rng, cfg, 2);
            let len = rng.gen_range(2..=cfg.max_len.max(2));
            random_mixed_word(rng, n, len)
        })
        .collect();
    for d in 2..=cfg.d.max(1) {
        let kinds = [
            ("theta", SkeinKind::ThetaMixed { d }),
            ("theta_small", SkeinKind::ThetaSmallMixed { d }),
        ];
        for (label, kind) in kinds {
            let ws = mixed.clone();
            tasks.push(task(format!("skein.{label}[d={d}]"), move || {
                let mut crossings = 0;
                for b in &ws {
                    let fb = FramedBraidWord::classical(b.clone());
                    for p in b.mixed_crossings() {
                        crossings += 1;
                        if !skein_check(&kind, &fb, p)? {
                            return Ok((false, format!("{b} at {p}")));
                        }
                    }
                }
                Ok((true, format!("crossings={crossings}")))
            }));
        }
        let framed: Vec<FramedBraidWord> = (0..cfg.samples)
            .map(|_| {
                let n = random_n(rng, cfg, 2).min(3);
                let len = rng.gen_range(1..=cfg.max_len.clamp(1, 5));
                let w = random_word(rng, n, len);
                let framing = (0..n).map(|_| rng.gen_range(0..d as i64)).collect();
                FramedBraidWord::new(w, framing, d).expect("valid framing")
            })
            .collect();
        tasks.push(task(format!("skein.phi[d={d}]"), move || {
            let all: Vec<u32> = (0..d).collect();
            let kind = SkeinKind::PhiFramed { d, subset: all };
            let mut crossings = 0;
            for b in &framed {
                for p in 0..b.word().len() {
                    crossings += 1;
                    if !skein_check(&kind, b, p)? {
                        return Ok((false, format!("{b} at {p}")));
                    }
                }
            }
            Ok((true, format!("crossings={crossings}")))
        }));
    }
    tasks
}

/// Whether `spec` takes the same value on `b`, a conjugate and both
/// stabilizations; returns the failing move otherwise.
pub fn markov_check(spec: &InvariantSpec, b: &BraidWord, g: &[i32]) -> Result<Option<String>> {
    let value = |w: &BraidWord| -> Result<InvariantPolynomial> {
        let fb = FramedBraidWord::classical(w.clone());
        let fb = if spec.kind == InvariantKind::PhiDD {
            fb.with_modulus(spec.d.max(1))?
        } else {
            fb
        };
        invariant(spec, &fb)
    };
    let base = value(b)?;
    let moves = [
        MarkovMove::Conjugate(g.to_vec()),
        MarkovMove::Stabilize(true),
        MarkovMove::Stabilize(false),
    ];
    for mv in moves {
        if value(&b.markov(&mv)?)? != base {
            return Ok(Some(format!("{b} {mv:?}")));
        }
    }
    Ok(None)
}

fn markov_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let cases: Vec<(BraidWord, Vec<i32>)> = (0..cfg.samples)
        .map(|_| {
            let n = random_n(rng, cfg, 2);
            let len = rng.gen_range(0..=cfg.max_len.min(6));
            let b = random_word(rng, n, len);
            let glen = rng.gen_range(0..=2);
            let g = random_word(rng, n, glen).letters().to_vec();
            (b, g)
        })
        .collect();
    let mut tasks = Vec::new();
    for kind in InvariantKind::ALL {
        let ds: Vec<u32> = match kind {
            InvariantKind::Homflypt
            | InvariantKind::Jones
            | InvariantKind::ThetaGeneral
            | InvariantKind::ThetaSmallGeneral => vec![1],
            _ => (1..=cfg.d).collect(),
        };
        for d in ds {
            let cases = cases.clone();
            tasks.push(task(format!("markov.{kind}[d={d}]"), move || {
                let spec = InvariantSpec::new(kind, d);
                for (b, g) in &cases {
                    if let Some(w) = markov_check(&spec, b, g)? {
                        return Ok((false, w));
                    }
                }
                Ok((true, format!("words={}", cases.len())))
            }));
        }
    }
    tasks
}

fn homflypt(b: &BraidWord) -> Result<InvariantPolynomial> {
    classical_invariant(&InvariantSpec::new(InvariantKind::Homflypt, 1), b)
}

fn catalog_tasks(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Vec<Task> {
    let mut tasks = Vec::new();
    let classical: Vec<LinkRecord> = cfg
        .catalog
        .iter()
        .filter(|r| r.framing.is_none())
        .cloned()
        .collect();
    for r in &classical {
        if let Some(text) = r.fixture("homflypt") {
            let (r, text) = (r.clone(), text.to_string());
            tasks.push(task(format!("catalog.fixture[{}]", r.name), move || {
                let expected = InvariantPolynomial::parse(&text)?;
                let p = homflypt(&r.word)?;
                Ok((p == expected, p.to_string()))
            }));
        }
        let rec = r.clone();
        tasks.push(task(format!("catalog.collapse[{}]", r.name), move || {
            let b = &rec.word;
            let p = homflypt(b)?;
            let v = classical_invariant(&InvariantSpec::new(InvariantKind::Jones, 1), b)?;
            let t1 = classical_invariant(&InvariantSpec::new(InvariantKind::ThetaD, 1), b)?;
            let s1 = classical_invariant(&InvariantSpec::new(InvariantKind::ThetaSmallD, 1), b)?;
            Ok((
                t1 == p && s1 == v,
                "theta_1 = P, theta_small_1 = V".to_string(),
            ))
        }));
        if r.components() <= 3 {
            for d in 1..=cfg.d {
                let (rec, budget) = (r.clone(), cfg.budget);
                tasks.push(task(
                    format!("catalog.oracle[{},d={d}]", r.name),
                    move || {
                        let e = e_constant(d as usize);
                        let oracle = skein_resolve_theta(&rec.word, &e, Lambda::Generic, budget)?;
                        let spec = InvariantSpec::new(InvariantKind::ThetaD, d);
                        let trace = classical_invariant(&spec, &rec.word)?;
                        Ok((oracle == trace, "resolution = trace".to_string()))
                    },
                ));
            }
        }
        let glen = rng.gen_range(1..=2);
        let g = random_word(rng, r.strands(), glen).letters().to_vec();
        let rec = r.clone();
        tasks.push(task(format!("catalog.markov[{}]", r.name), move || {
            let spec = InvariantSpec::new(InvariantKind::ThetaGeneral, 1);
            match markov_check(&spec, &rec.word, &g)? {
                Some(w) => Ok((false, w)),
                None => Ok((true, "conjugation and stabilizations".to_string())),
            }
        }));
    }
    // Entries sharing a Homflypt fixture: Θ must separate them, and only
    // through a factor E - 1.
    for (i, a) in classical.iter().enumerate() {
        let Some(pa) = a.fixture("homflypt") else {
            continue;
        };
        for b in &classical[i + 1..] {
            if b.fixture("homflypt") != Some(pa) {
                continue;
            }
            let (a, b) = (a.clone(), b.clone());
            tasks.push(task(
                format!("catalog.pair[{},{}]", a.name, b.name),
                move || {
                    let spec = InvariantSpec::new(InvariantKind::ThetaGeneral, 1);
                    let diff = classical_invariant(&spec, &a.word)?
                        .sub(&classical_invariant(&spec, &b.word)?);
                    let vanishes_at_one = diff.substitute(Var::E, &Poly::one())?.is_zero();
                    let pass = !diff.is_zero()
                        && vanishes_at_one
                        && homflypt(&a.word)? == homflypt(&b.word)?;
                    Ok((
                        pass,
                        format!("difference nonzero with factor (E - 1): {pass}"),
                    ))
                },
            ));
        }
    }
    tasks
}

/// Whether every check passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            d: 2,
            n: 3,
            samples: 3,
            max_len: 5,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn report_lines() {
        let r = CheckResult {
            name: "x[d=1]".into(),
            pass: true,
            witness: "ok".into(),
        };
        assert_eq!(r.to_string(), "CHECK x[d=1] PASS ok");
        assert_eq!("FTL".parse::<Suite>().unwrap(), Suite::Ftl);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass_and_repeat() {
        let cfg = small();
        for suite in [
            Suite::ESystem,
            Suite::Tl,
            Suite::Hopf,
            Suite::Engines,
            Suite::Skein,
        ] {
            let t0 = std::time::Instant::now();
            let a = run_suite(suite, &cfg);
            eprintln!("{suite} {:?}", t0.elapsed());
            assert!(!a.is_empty());
            for r in &a {
                assert!(r.pass, "{r}");
            }
            assert_eq!(a, run_suite(suite, &cfg));
        }
    }
}
