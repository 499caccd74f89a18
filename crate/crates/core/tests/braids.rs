use framix::braid::*;
use proptest::prelude::*;

fn word() -> impl Strategy<Value = BraidWord> {
    (1usize..=6).prop_flat_map(|n| {
        let letter = (1..n.max(2) as i32, any::<bool>()).prop_map(|(i, p)| if p { i } else { -i });
        let len = if n == 1 { 0..1 } else { 0..12 };
        prop::collection::vec(letter, len).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    })
}

fn framed() -> impl Strategy<Value = FramedBraidWord> {
    (word(), 1u32..=5).prop_flat_map(|(w, d)| {
        let n = w.strands();
        prop::collection::vec(-10i64..10, n)
            .prop_map(move |f| FramedBraidWord::new(w.clone(), f, d).unwrap())
    })
}

/// Strand followed through the closure, one crossing at a time, as an
/// oracle for the component count.
fn count_components(b: &BraidWord) -> usize {
    let n = b.strands();
    let mut next = vec![0; n];
    for (start, slot) in next.iter_mut().enumerate() {
        let mut pos = start + 1;
        for &l in b.letters() {
            let i = l.unsigned_abs() as usize;
            if pos == i {
                pos = i + 1;
            } else if pos == i + 1 {
                pos = i;
            }
        }
        *slot = pos - 1;
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = next[p];
            }
        }
    }
    count
}

proptest! {
    #[test]
    fn text_round_trip(b in framed()) {
        prop_assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn components_match_the_strand_walk(b in word()) {
        prop_assert_eq!(b.closure_components().0, count_components(&b));
    }

    #[test]
    fn markov_moves_keep_the_link_type(b in word(), g in word()) {
        let k = b.closure_components().0;
        let n = b.strands();
        let g: Vec<i32> = g.letters().iter().filter(|l| (l.unsigned_abs() as usize) < n).copied().collect();
        let c = b.markov(&MarkovMove::Conjugate(g)).unwrap();
        prop_assert_eq!(c.closure_components().0, k);
        prop_assert_eq!(c.exponent_sum(), b.exponent_sum());
        for sign in [true, false] {
            let s = b.markov(&MarkovMove::Stabilize(sign)).unwrap();
            prop_assert_eq!(s.strands(), n + 1);
            prop_assert_eq!(s.closure_components().0, k);
            prop_assert_eq!(s.markov(&MarkovMove::Destabilize).unwrap(), b.clone());
        }
    }

    #[test]
    fn inverse_and_mirror(b in word()) {
        let id = b.concat(&b.inverse()).unwrap().permutation();
        prop_assert_eq!(id, Permutation::identity(b.strands()));
        prop_assert_eq!(b.mirror().exponent_sum(), -b.exponent_sum());
        prop_assert_eq!(b.mirror().mirror(), b.clone());
        let mixed = b.mixed_crossings();
        prop_assert_eq!(b.mirror().mixed_crossings(), mixed);
    }

    #[test]
    fn garbage_never_panics(s in "[ Bsdt0-9^=x-]{0,24}") {
        let _ = parse_braid(&s);
    }

    #[test]
    fn catalog_round_trip(b in word(), name in "[a-z][a-z0-9_]{0,8}") {
        let letters: Vec<String> = b.letters().iter().map(|l| l.to_string()).collect();
        let line = format!("{name}|{}|{}|\n", b.strands(), letters.join(" "));
        let recs = parse_catalog(&line).unwrap();
        prop_assert_eq!(recs.len(), 1);
        prop_assert_eq!(&recs[0].word, &b);
    }
}

#[test]
fn bundled_catalog() {
    let c = builtin_catalog();
    assert!(c.len() >= 30);
    for r in &c {
        assert!(r.strands() <= 5, "{}", r.name);
    }
    let pairs = c.iter().filter(|r| r.name.starts_with("L1")).count();
    assert_eq!(pairs, 12);
    assert!(parse_catalog("a|2|1|\na|2|1|\n").is_err());
    assert!(parse_catalog("a|2|3|\n").is_err());
}
