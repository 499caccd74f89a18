use framix::ring::*;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cyclotomic(d: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-4i64..=4, d as usize).prop_map(move |cs| {
        cs.iter()
            .enumerate()
            .fold(Cyclotomic::zero(), |acc, (j, &c)| {
                acc.add(&Cyclotomic::zeta_pow(d, j as i64).scale(&rat(c, 1)))
            })
    })
}

fn poly() -> impl Strategy<Value = Poly<Rational>> {
    let term = (rational(), -3i32..=3, -3i32..=3, 0i32..=2);
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        ts.into_iter().fold(Poly::zero(), |acc, (c, a, b, e)| {
            let m = Monomial::from_pairs([(Var::Q, a), (Var::S, b), (Var::E, e)]);
            acc.add(&Poly::term(m, c))
        })
    })
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: Poly<Rational> = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn cyclotomic_field_axioms(
        (a, b) in (1u32..=8).prop_flat_map(|d| (cyclotomic(d), cyclotomic(d)))
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).mul(&a), a.mul(&a).add(&b.mul(&a)));
        if let Some(inv) = a.inv() {
            prop_assert!(a.mul(&inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        // Conjugation is a field automorphism.
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn roots_of_unity(d in 1u32..=12, k in -30i64..30) {
        let z = Cyclotomic::zeta_pow(d, k);
        let mut p = Cyclotomic::one();
        for _ in 0..d {
            p = p.mul(&z);
        }
        prop_assert!(p.is_one());
        prop_assert_eq!(z.mul(&Cyclotomic::zeta_pow(d, -k)), Cyclotomic::one());
    }

    #[test]
    fn rational_functions_cancel(a in poly(), b in poly(), c in poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RationalFunction::new(a.mul(&c), b.mul(&c)).unwrap();
        let y = RationalFunction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(x.clone(), y);
        let back = x.mul(&RationalFunction::from_poly(b)).to_laurent().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn laurent_in_q(xs in prop::collection::vec((-6i32..=6, -5i64..=5), 0..6)) {
        let p = LaurentQ::from_terms(xs.iter().map(|&(e, c)| (e, rat(c, 1))));
        prop_assert_eq!(p.mirror().mirror(), p.clone());
        prop_assert_eq!(LaurentQ::from_poly(&p.to_poly::<Rational>()), Some(p.clone()));
        prop_assert_eq!(p.mul(&LaurentQ::q_pow(3)), p.shift(3));
    }
}

#[test]
fn sum_of_primitive_roots_is_mobius() {
    // Σ ζ^k over k coprime to d is μ(d).
    let mobius = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
    for d in 1..=12u32 {
        let s = (0..d as i64)
            .filter(|&k| num_gcd(k, d as i64) == 1)
            .fold(Cyclotomic::zero(), |acc, k| {
                acc.add(&Cyclotomic::zeta_pow(d, k))
            });
        assert_eq!(
            s,
            Cyclotomic::rational(rat(mobius[d as usize - 1], 1)),
            "d={d}"
        );
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}
