//! Fixed workloads shared by the benchmarks.

use framix::braid::{builtin_catalog, BraidWord};

/// `(σ_1 σ_2^{-1} ⋯)^reps` on `n` strands, a simple family that grows the
/// trace recursion evenly.
pub fn alternating_word(n: usize, reps: usize) -> BraidWord {
    let round: Vec<i32> = (1..n as i32)
        .map(|i| if i % 2 == 1 { i } else { -i })
        .collect();
    BraidWord::new(n, round.repeat(reps)).expect("letters are in range")
}

/// Braid word of a bundled catalog entry.
pub fn catalog_word(name: &str) -> BraidWord {
    builtin_catalog()
        .into_iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("no catalog entry {name}"))
        .word
}
