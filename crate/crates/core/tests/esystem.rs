use framix::esystem::*;
use framix::ring::{rat, Coeff, Cyclotomic};
use proptest::prelude::*;

fn element(d: u32) -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, d as usize), d as usize).prop_map(
        move |rows| {
            GroupAlgebraElement::new(
                rows.iter()
                    .map(|cs| {
                        cs.iter()
                            .enumerate()
                            .fold(Cyclotomic::zero(), |acc, (j, &c)| {
                                acc.add(&Cyclotomic::zeta_pow(d, j as i64).scale(&rat(c, 1)))
                            })
                    })
                    .collect(),
            )
        },
    )
}

fn c(n: i64) -> Cyclotomic {
    Cyclotomic::rational(rat(n, 1))
}

/// Convolution straight from the definition, as an independent oracle.
fn naive_convolve(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Vec<Cyclotomic> {
    let d = a.order() as i64;
    (0..d)
        .map(|r| {
            (0..d).fold(Cyclotomic::zero(), |acc, s| {
                acc.add(&a.at(s).mul(b.at(r - s)))
            })
        })
        .collect()
}

fn fourier_properties(d: u32, a: &GroupAlgebraElement, b: &GroupAlgebraElement, k: i64) {
    let dc = c(d as i64);
    assert_eq!(a.convolve(b).unwrap().coeffs(), &naive_convolve(a, b)[..]);
    assert_eq!(
        a.convolve(b).unwrap().fourier(),
        a.fourier().pointwise(&b.fourier()).unwrap()
    );
    assert_eq!(
        a.pointwise(b).unwrap().fourier().scale(&dc),
        a.fourier().convolve(&b.fourier()).unwrap()
    );
    assert_eq!(
        GroupAlgebraElement::delta(d, k).fourier(),
        GroupAlgebraElement::character(d, -k)
    );
    assert_eq!(
        GroupAlgebraElement::character(d, k).fourier(),
        GroupAlgebraElement::delta(d, k).scale(&dc)
    );
    assert_eq!(a.fourier().fourier(), a.reversed().scale(&dc));
    assert_eq!(a.fourier().inverse_fourier(), a.clone());
}

macro_rules! fourier_props {
    ($($name:ident: $d:expr),*) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            $(
                #[test]
                fn $name(a in element($d), b in element($d), k in 0i64..$d as i64) {
                    fourier_properties($d, &a, &b, k);
                }
            )*
        }
    };
}

fourier_props!(fourier_d1: 1, fourier_d2: 2, fourier_d3: 3, fourier_d4: 4, fourier_d5: 5,
    fourier_d6: 6, fourier_d7: 7, fourier_d8: 8);

#[test]
fn character_orthogonality() {
    for d in 1..=6u32 {
        for a in 0..d as i64 {
            for b in 0..d as i64 {
                let ia = GroupAlgebraElement::character(d, a);
                let ib = GroupAlgebraElement::character(d, b);
                let conv = ia.convolve(&ib).unwrap();
                let expected = if a == b {
                    ia.scale(&c(d as i64))
                } else {
                    GroupAlgebraElement::zero(d)
                };
                assert_eq!(conv, expected, "d={d} a={a} b={b}");
            }
        }
    }
}

#[test]
fn solutions_are_complete_and_distinct() {
    for d in 1..=6u32 {
        let sols = all_solutions(d);
        assert_eq!(sols.len(), (1 << d) - 1);
        for (i, s) in sols.iter().enumerate() {
            assert!(verify_esystem(&s.x), "d={d} D={:?}", s.subset);
            assert!(s.x[0].is_one());
            assert_eq!(s.e, rat(1, s.subset.len() as i64));
            // E^{(m)} = x_m E with E = E^{(0)}.
            let e0 = e_shift(&s.x, 0);
            for m in 0..d as i64 {
                assert_eq!(e_shift(&s.x, m), s.x[m as usize].mul(&e0));
            }
            for t in &sols[i + 1..] {
                assert_ne!(s.x, t.x);
            }
        }
        let mut found = fourier_search(d);
        let mut expected: Vec<_> = sols.into_iter().map(|s| s.x).collect();
        found.sort_by_key(|x| format!("{x:?}"));
        expected.sort_by_key(|x| format!("{x:?}"));
        assert_eq!(found, expected);
    }
}

#[test]
fn e_equals_one_over_support() {
    // E^{(0)} = (1/d) Σ x_s x_{-s} = 1/|D|.
    for d in 1..=5u32 {
        for s in all_solutions(d) {
            assert_eq!(e_shift(&s.x, 0), Cyclotomic::rational(s.e.clone()));
        }
    }
}

proptest! {
    #[test]
    fn small_integer_vectors_outside_the_list_fail(xs in prop::collection::vec(-2i64..=2, 1..4)) {
        let d = xs.len() as u32 + 1;
        let mut x = vec![c(1)];
        x.extend(xs.iter().map(|&v| c(v)));
        let listed = all_solutions(d).into_iter().any(|s| s.x == x);
        prop_assert_eq!(verify_esystem(&x), listed);
    }
}

#[test]
fn subsets_are_validated() {
    assert_eq!(canonical_subset(4, &[2, 0, 2]).unwrap(), vec![0, 2]);
    assert!(canonical_subset(3, &[3]).is_err());
    assert!(esystem_solution(3, &[]).is_err());
    assert!(GroupAlgebraElement::zero(2)
        .convolve(&GroupAlgebraElement::zero(3))
        .is_err());
}
