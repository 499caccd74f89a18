//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if a criterion fails unexpectedly.
//!
//! Criterion 11 compares against published difference polynomials; our
//! imported braid words give their exact negatives, so it reports FAIL
//! while this target asserts that precise relationship instead.

use framix::braid::{
    builtin_catalog, parse_braid, random_knot_word, random_split_word, BraidWord, FramedBraidWord,
    LinkRecord, MarkovMove,
};
use framix::esystem::{all_solutions, fourier_search};
use framix::invariants::{
    classical_invariant, disjoint_union_check, e_constant, invariant, knot_coincidence_check,
    skein_resolve_theta, ties_trace, to_cyclotomic, y_trace, InvariantKind, InvariantPolynomial,
    InvariantSpec, Lambda, DEFAULT_BUDGET,
};
use framix::quotients::{
    ftl_annihilation_check, ftl_family, ftl_support_pairs, ftl_system_residuals, tl_jones_z_check,
};
use framix::ring::{rat, Cyclotomic, Poly, QFn, RationalFunction, Var};
use framix::verify::{run_suite, Suite, VerifyConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: framix::Error) -> String {
    e.to_string()
}

fn var(v: Var) -> Poly<Cyclotomic> {
    Poly::var(v)
}

fn int(n: i64) -> Poly<Cyclotomic> {
    Poly::from_int(n)
}

fn mono(e: i32, s: i32, q: i32) -> Poly<Cyclotomic> {
    Poly::var_pow(Var::E, e)
        .mul(&Poly::var_pow(Var::S, s))
        .mul(&Poly::var_pow(Var::Q, q))
}

fn full(d: u32) -> Vec<u32> {
    (0..d).collect()
}

fn spec(kind: InvariantKind, d: u32) -> InvariantSpec {
    InvariantSpec::new(kind, d)
}

fn assert_suite(suite: Suite, cfg: &VerifyConfig) -> Outcome {
    let results = run_suite(suite, cfg);
    match results.iter().find(|r| !r.pass) {
        Some(r) => Err(r.to_string()),
        None if results.is_empty() => Err("no checks ran".into()),
        None => Ok(()),
    }
}

/// tr(σ₁²) = 1 + (q - q⁻¹) z, from g² = 1 + (q - q⁻¹) g and tr(g) = z.
fn criterion_1() -> Outcome {
    let hopf = FramedBraidWord::classical(BraidWord::new(2, vec![1, 1]).unwrap());
    let qdiff = var(Var::Q).sub(&Poly::var_pow(Var::Q, -1));
    let expected = int(1).add(&qdiff.mul(&var(Var::Z)));
    for d in 1..=3 {
        let t = y_trace(&hopf, d, &full(d)).map_err(err)?;
        ensure(t == expected, || format!("d={d}: {t}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut knots = vec![
        BraidWord::new(2, vec![1, 1, 1]).unwrap(),
        BraidWord::new(3, vec![1, -2, 1, -2]).unwrap(),
    ];
    while knots.len() < 22 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(n - 1..=8);
        let b = random_knot_word(&mut rng, n, len);
        assert_eq!(b.closure_components().0, 1);
        knots.push(b);
    }
    for d in 2..=3 {
        for sol in all_solutions(d) {
            for b in &knots {
                let ok = knot_coincidence_check(b, d, &sol.subset).map_err(err)?;
                ensure(ok, || format!("{b} d={d} D={:?}", sol.subset))?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 1..=3 {
        for _ in 0..8 {
            let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
            let len = rng.gen_range(0..=5);
            let b = random_split_word(&mut rng, &sizes, len);
            assert_eq!(b.closure_components().0, k);
            for d in 2..=3 {
                let ok = disjoint_union_check(&b, d, &full(d)).map_err(err)?;
                ensure(ok, || format!("{b} d={d}"))?;
            }
        }
    }
    Ok(())
}

/// For the Hopf link the trace is 1 - E + E τ(z/E), so the rescaled
/// Homflypt trace alone is off by 1 - E and Θ_d differs from P.
fn criterion_4() -> Outcome {
    let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
    let fb = FramedBraidWord::classical(hopf.clone());
    let tau = y_trace(&fb, 1, &[0]).map_err(err)?;
    let p = classical_invariant(&spec(InvariantKind::Homflypt, 1), &hopf).map_err(err)?;
    for d in 2..=3 {
        let e = Cyclotomic::rational(rat(1, d as i64));
        let e_inv = Cyclotomic::rational(rat(d as i64, 1));
        let ep = Poly::constant(e.clone());
        let t = y_trace(&fb, d, &full(d)).map_err(err)?;
        let rescaled = tau
            .substitute(Var::Z, &var(Var::Z).scale(&e_inv))
            .map_err(err)?;
        ensure(t != rescaled.mul(&ep), || {
            format!("d={d}: trace equals E τ(z/E)")
        })?;
        let structure = int(1).sub(&ep).add(&ep.mul(&rescaled));
        ensure(t == structure, || format!("d={d}: {t}"))?;
        let theta = classical_invariant(&spec(InvariantKind::ThetaD, d), &hopf).map_err(err)?;
        ensure(theta != p, || format!("d={d}: Θ_d = P"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for d in 1..=6u32 {
        let sols = all_solutions(d);
        ensure(sols.len() == (1 << d) - 1, || {
            format!("d={d}: {} solutions", sols.len())
        })?;
        let found = fourier_search(d);
        let xs: Vec<_> = sols.iter().map(|s| s.x.clone()).collect();
        ensure(
            found.len() == xs.len() && found.iter().all(|x| xs.contains(x)),
            || format!("d={d}: search found {}", found.len()),
        )?;
    }
    let cfg = VerifyConfig {
        d: 8,
        samples: 200,
        ..VerifyConfig::default()
    };
    assert_suite(Suite::ESystem, &cfg)
}

fn criterion_6() -> Outcome {
    let q = Poly::<framix::ring::Rational>::var(Var::Q);
    let q3q = q.pow(3).add(&q);
    let a = RationalFunction::new(Poly::from_int(-1), q3q).unwrap();
    let b = RationalFunction::new(Poly::from_int(-1), q).unwrap();
    let mut expected = vec![QFn::from_ratfun(&a).unwrap(), QFn::from_ratfun(&b).unwrap()];
    let mut found = tl_jones_z_check().map_err(err)?;
    expected.sort_by_key(|z| z.to_string());
    found.sort_by_key(|z| z.to_string());
    ensure(found == expected, || format!("{found:?}"))
}

fn criterion_7() -> Outcome {
    for d in 1..=3u32 {
        // z = -q⁻¹/((q² + 1) d)
        let q = var(Var::Q);
        let den = q
            .pow(3)
            .add(&q)
            .scale(&Cyclotomic::rational(rat(d as i64, 1)));
        let z = RationalFunction::new(int(-1), den).unwrap();
        let r = ftl_annihilation_check(d, &full(d), &z).map_err(err)?;
        ensure(r.holds() && r.checked == 6 * (d as usize).pow(3), || {
            format!("d={d}: {r}")
        })?;
        for (s1, s2) in ftl_support_pairs(d) {
            let fam = ftl_family(d, &s1, &s2).map_err(err)?;
            let ok = ftl_system_residuals(d, &fam.params)
                .iter()
                .all(Poly::is_zero);
            ensure(ok, || format!("d={d} Sup1={s1:?} Sup2={s2:?}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let cfg = VerifyConfig {
        d: 3,
        n: 4,
        samples: 50,
        ..VerifyConfig::default()
    };
    assert_suite(Suite::Skein, &cfg)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=8);
        let b = framix::braid::random_word(&mut rng, n, len);
        let ties = to_cyclotomic(&ties_trace(&b));
        for d in 1..=3u32 {
            let e = Poly::constant(Cyclotomic::rational(rat(1, d as i64)));
            let lhs = ties.substitute(Var::E, &e).map_err(err)?;
            let rhs = y_trace(&FramedBraidWord::classical(b.clone()), d, &full(d)).map_err(err)?;
            ensure(lhs == rhs, || format!("{b} d={d}"))?;
        }
    }
    Ok(())
}

fn criterion_10(catalog: &[LinkRecord]) -> Outcome {
    let mut count = 0;
    for r in catalog
        .iter()
        .filter(|r| r.framing.is_none() && r.components() <= 3)
    {
        for d in 1..=3u32 {
            let oracle = skein_resolve_theta(
                &r.word,
                &e_constant(d as usize),
                Lambda::Generic,
                DEFAULT_BUDGET,
            )
            .map_err(err)?;
            let trace =
                classical_invariant(&spec(InvariantKind::ThetaD, d), &r.word).map_err(err)?;
            ensure(oracle == trace, || format!("{} d={d}", r.name))?;
        }
        let oracle = skein_resolve_theta(&r.word, &var(Var::E), Lambda::QFourth, DEFAULT_BUDGET)
            .map_err(err)?;
        let trace = classical_invariant(&spec(InvariantKind::ThetaSmallGeneral, 1), &r.word)
            .map_err(err)?;
        ensure(oracle == trace, || format!("{} symbolic E", r.name))?;
        count += 1;
    }
    ensure(count >= 20, || format!("only {count} links"))
}

/// The six pairs, in the order the differences are taken.
const PAIRS: [(&str, &str); 6] = [
    ("L11n358{0,1}", "L11n418{0,0}"),
    ("L11a467{0,1}", "L11a527{0,0}"),
    ("L11n325{1,1}", "L11n424{0,0}"),
    ("L10n79{1,1}", "L10n95{1,0}"),
    ("L11a404{1,1}", "L11a428{0,1}"),
    ("L10n76{1,1}", "L11n425{1,0}"),
];

/// The published Θ differences, with λ = s².
fn published_big() -> Vec<Poly<Cyclotomic>> {
    let e1 = var(Var::E).sub(&int(1));
    let l = var(Var::S).pow(2);
    let q = var(Var::Q);
    let l1 = l.sub(&int(1));
    let qq = q.sub(&int(1)).pow(2).mul(&q.add(&int(1)).pow(2));
    let base = e1.mul(&l1).mul(&qq);
    let a = q.pow(2).sub(&l);
    let b = l.mul(&q.pow(2)).sub(&int(1));
    let lp1 = l.add(&int(1));
    vec![
        base.mul(&a).mul(&b).mul(&mono(-1, -8, -4)),
        base.mul(&a).mul(&b).mul(&mono(-1, -8, -4)),
        base.mul(&a).mul(&b).mul(&mono(-1, -6, -4)).neg(),
        base.mul(
            &l.add(&l.mul(&q.pow(4)))
                .add(&l.mul(&q.pow(2)))
                .sub(&q.pow(2)),
        )
        .mul(&mono(-1, -8, -4)),
        base.mul(&lp1)
            .mul(&q.pow(4).sub(&l.mul(&q.pow(2))).add(&int(1)))
            .mul(&mono(-1, 0, -4)),
        base.mul(&lp1).mul(&mono(-1, -6, -2)),
    ]
}

/// The published θ differences.
fn published_small() -> Vec<Poly<Cyclotomic>> {
    let e = var(Var::E);
    let (e1, one_e) = (e.sub(&int(1)), int(1).sub(&e));
    let q = var(Var::Q);
    let qm = q.sub(&int(1));
    let qp = q.add(&int(1));
    let q2 = q.pow(2).add(&int(1));
    let cyc = q
        .pow(2)
        .add(&q)
        .add(&int(1))
        .mul(&q.pow(2).sub(&q).add(&int(1)));
    let five = qm.pow(5).mul(&qp.pow(5)).mul(&q2).mul(&cyc);
    let three = qm
        .pow(3)
        .mul(&qp.pow(3))
        .mul(&q2)
        .mul(&q.pow(4).add(&int(1)));
    let p4 = q
        .pow(8)
        .add(&q.pow(6).scale(&Cyclotomic::rational(rat(2, 1))))
        .add(&q.pow(4).scale(&Cyclotomic::rational(rat(2, 1))))
        .sub(&int(1));
    vec![
        one_e.mul(&five).mul(&mono(-1, 0, -18)),
        one_e.mul(&five).mul(&mono(-1, 0, -18)),
        e1.mul(&five).mul(&mono(-1, 0, -14)),
        e1.mul(&q.pow(2).sub(&int(1)).pow(3))
            .mul(&p4)
            .mul(&mono(-1, 0, -18)),
        one_e
            .mul(&three)
            .mul(&q.pow(6).sub(&q.pow(4)).add(&int(1)))
            .mul(&mono(-1, 0, -4)),
        e1.mul(&three).mul(&mono(-1, 0, -10)),
    ]
}

fn difference(
    catalog: &[LinkRecord],
    kind: InvariantKind,
    a: &str,
    b: &str,
) -> Result<Poly<Cyclotomic>, String> {
    let find = |n: &str| {
        catalog
            .iter()
            .find(|r| r.name == n)
            .ok_or(format!("missing {n}"))
    };
    let s = spec(kind, 1);
    let x = classical_invariant(&s, &find(a)?.word).map_err(err)?;
    let y = classical_invariant(&s, &find(b)?.word).map_err(err)?;
    x.sub(&y).to_laurent().map_err(err)
}

/// Returns `Ok(true)` for an exact (or mirror) match, `Ok(false)` when the
/// documented relationship holds instead, and `Err` otherwise.
fn criterion_11(catalog: &[LinkRecord]) -> Result<bool, String> {
    let big = published_big();
    let small = published_small();
    let mut exact = true;
    for (k, (a, b)) in PAIRS.iter().enumerate() {
        let ours = difference(catalog, InvariantKind::ThetaGeneral, a, b)?;
        let ours_small = difference(catalog, InvariantKind::ThetaSmallGeneral, a, b)?;
        let mirror = InvariantPolynomial::from_poly(ours.clone())
            .mirror()
            .to_laurent()
            .map_err(err)?;
        let mirror_small = InvariantPolynomial::from_poly(ours_small.clone())
            .mirror()
            .to_laurent()
            .map_err(err)?;
        exact &= (ours == big[k] || mirror == big[k])
            && (ours_small == small[k] || mirror_small == small[k]);
        // Both differences vanish at E = 1 and θ is Θ at λ = q⁴.
        let at_one = ours.substitute(Var::E, &int(1)).map_err(err)?;
        ensure(at_one.is_zero(), || format!("{a}: no factor E - 1"))?;
        let q2 = var(Var::Q).pow(2);
        let ours_q4 = ours.substitute(Var::S, &q2).map_err(err)?;
        ensure(ours_q4 == ours_small, || {
            format!("{a}: θ differs from Θ at λ = q⁴")
        })?;
        // The documented relationship: the negatives of the published Θ
        // differences, and of the published θ differences where those agree
        // with the published Θ at λ = q⁴.
        ensure(ours == big[k].neg(), || {
            format!("{a}: Θ is not the negated display")
        })?;
        let published_q4 = big[k].substitute(Var::S, &q2).map_err(err)?;
        ensure(ours_small == published_q4.neg(), || {
            format!("{a}: θ is not the negated display")
        })?;
        if k < 4 {
            ensure(published_q4 == small[k], || {
                format!("{a}: display is self-inconsistent")
            })?;
        } else {
            ensure(published_q4 != small[k], || {
                format!("{a}: display is self-consistent")
            })?;
        }
        for d in 2..=3u32 {
            let e = Poly::constant(Cyclotomic::rational(rat(1, d as i64)));
            let ours_d = difference_d(catalog, d, a, b)?;
            ensure(ours_d == ours.substitute(Var::E, &e).map_err(err)?, || {
                format!("{a}: d={d}")
            })?;
        }
    }
    Ok(exact)
}

fn difference_d(
    catalog: &[LinkRecord],
    d: u32,
    a: &str,
    b: &str,
) -> Result<Poly<Cyclotomic>, String> {
    let find = |n: &str| {
        catalog
            .iter()
            .find(|r| r.name == n)
            .ok_or(format!("missing {n}"))
    };
    let s = spec(InvariantKind::ThetaD, d);
    let x = classical_invariant(&s, &find(a)?.word).map_err(err)?;
    let y = classical_invariant(&s, &find(b)?.word).map_err(err)?;
    x.sub(&y).to_laurent().map_err(err)
}

/// Framed braid text for `g β g⁻¹` and the stabilizations, letting the
/// parser carry framings to the top.
fn framed_moves(r: &LinkRecord, d: u32, g: &[i32]) -> Vec<FramedBraidWord> {
    let word = |ls: &[i32]| -> Vec<String> {
        ls.iter()
            .map(|&l| {
                if l > 0 {
                    format!("s{l}")
                } else {
                    format!("s{}^-1", -l)
                }
            })
            .collect()
    };
    let framing: Vec<String> = r
        .framing
        .as_ref()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, a)| format!("t{}^{}", i + 1, a.rem_euclid(d as i64)))
        .collect();
    let n = r.strands();
    let body = format!("{} {}", framing.join(" "), word(r.word.letters()).join(" "));
    let inv: Vec<i32> = g.iter().rev().map(|l| -l).collect();
    let texts = [
        format!(
            "B{n} d={d} {} {body} {}",
            word(g).join(" "),
            word(&inv).join(" ")
        ),
        format!("B{} d={d} {body} s{n}", n + 1),
        format!("B{} d={d} {body} s{n}^-1", n + 1),
    ];
    texts.iter().map(|t| parse_braid(t).unwrap()).collect()
}

fn criterion_12(catalog: &[LinkRecord]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for r in catalog {
        let glen = rng.gen_range(1..=3);
        let g = framix::braid::random_word(&mut rng, r.strands().max(2), glen);
        if r.strands() < 2 && !g.is_empty() {
            continue;
        }
        match &r.framing {
            None => {
                let moved = [
                    r.word
                        .markov(&MarkovMove::Conjugate(g.letters().to_vec()))
                        .map_err(err)?,
                    r.word.markov(&MarkovMove::Stabilize(true)).map_err(err)?,
                    r.word.markov(&MarkovMove::Stabilize(false)).map_err(err)?,
                ];
                for kind in [
                    InvariantKind::ThetaGeneral,
                    InvariantKind::ThetaSmallGeneral,
                ] {
                    let base = classical_invariant(&spec(kind, 1), &r.word).map_err(err)?;
                    for m in &moved {
                        let v = classical_invariant(&spec(kind, 1), m).map_err(err)?;
                        ensure(v == base, || format!("{} {kind} {m}", r.name))?;
                    }
                }
                let p =
                    classical_invariant(&spec(InvariantKind::Homflypt, 1), &r.word).map_err(err)?;
                let v =
                    classical_invariant(&spec(InvariantKind::Jones, 1), &r.word).map_err(err)?;
                let t1 =
                    classical_invariant(&spec(InvariantKind::ThetaD, 1), &r.word).map_err(err)?;
                let s1 = classical_invariant(&spec(InvariantKind::ThetaSmallD, 1), &r.word)
                    .map_err(err)?;
                ensure(t1 == p && s1 == v, || format!("{}: d = 1 collapse", r.name))?;
            }
            Some(_) => {
                for d in 2..=3 {
                    let base_word = r.framed(d).map_err(err)?;
                    for sol in all_solutions(d) {
                        let s = spec(InvariantKind::PhiDD, d).with_subset(sol.subset.clone());
                        let base = invariant(&s, &base_word).map_err(err)?;
                        for m in framed_moves(r, d, g.letters()) {
                            let v = invariant(&s, &m).map_err(err)?;
                            ensure(v == base, || format!("{} d={d} {m}", r.name))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let catalog = builtin_catalog();
    let names = [
        "Hopf trace 1 + (q - q^-1) z for d = 1, 2, 3",
        "knot coincidence on trefoil, figure-eight and 20 random knots, d = 2, 3",
        "disjoint unions of up to 3 knots, E^(1-k) identity, d = 2, 3",
        "Hopf link: trace is 1 - E + E tau(z/E), not E tau(z/E)",
        "E-system completeness for d <= 6, Fourier properties for d <= 8",
        "Jones z-set is {-q^-1/(q^2+1), -q^-1}",
        "FTL annihilation (6 d^3 checks) and parameter families, d <= 3",
        "Homflypt, mixed-crossing and framed skein relations",
        "braids-and-ties trace equals Yokonuma-Hecke trace on 100 words",
        "skein resolution equals the trace on catalog links with <= 3 components",
        "six-pair differences equal the published polynomials",
        "Markov invariance and d = 1 collapse on the whole catalog",
    ];
    let mut results: Vec<Outcome> = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(&catalog),
    ];
    // Criterion 11 is known not to hold exactly: report FAIL, but require
    // the documented relationship.
    let eleven = criterion_11(&catalog);
    let mut unexpected = false;
    results.push(match &eleven {
        Ok(true) => Ok(()),
        Ok(false) => Err("each difference is the negative of the published one; \
                          published theta lines 5 and 6 disagree with the published Theta at lambda = q^4"
            .into()),
        Err(e) => {
            unexpected = true;
            Err(e.clone())
        }
    });
    results.push(criterion_12(&catalog));
    for (i, (name, r)) in names.iter().zip(&results).enumerate() {
        let number = i + 1;
        match r {
            Ok(()) => println!("criterion {number:>2} PASS {name}"),
            Err(e) => {
                println!("criterion {number:>2} FAIL {name}: {e}");
                if number != 11 {
                    unexpected = true;
                }
            }
        }
    }
    if unexpected {
        std::process::exit(1);
    }
}
