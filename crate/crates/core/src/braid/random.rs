use rand::Rng;

use super::BraidWord;

/// A uniformly random word of the given length on `n` strands.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n.max(1));
    }
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters are in range")
}

/// A random word whose closure is a knot, by rejection sampling. Falls
/// back to `σ_1 ⋯ σ_{n-1}` when `len` is too short for a knot.
pub fn random_knot_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if len + 1 >= n {
        for _ in 0..1000 {
            let w = random_word(rng, n, len);
            if w.closure_components().0 == 1 {
                return w;
            }
        }
    }
    BraidWord::new(n, (1..n as i32).collect()).expect("letters are in range")
}

/// A random word whose closure has at least two components and at least
/// one crossing between different components. Some lengths admit no such
/// word (odd lengths on two strands), so the length grows by one after
/// every 100 rejections.
pub fn random_mixed_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    for attempt in 0.. {
        let w = random_word(rng, n.max(2), len.max(2) + attempt / 100);
        if w.closure_components().0 >= 2 && !w.mixed_crossings().is_empty() {
            return w;
        }
    }
    unreachable!()
}

/// Stacks random knot braids side by side; the closure is a split union of
/// `sizes.len()` knots.
pub fn random_split_word<R: Rng>(rng: &mut R, sizes: &[usize], len: usize) -> BraidWord {
    let mut letters = Vec::new();
    let mut offset = 0;
    for &m in sizes {
        let k = random_knot_word(rng, m, len);
        letters.extend(k.letters().iter().map(|l| l.signum() * (l.abs() + offset)));
        offset += m as i32;
    }
    BraidWord::new(offset as usize, letters).expect("letters are in range")
}
