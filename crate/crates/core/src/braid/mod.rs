//! Braid words, framed braid words, permutations and the link catalog.

mod catalog;
mod perm;
mod random;
mod word;

pub use catalog::{builtin_catalog, load_catalog, parse_catalog, LinkRecord, BUILTIN_CATALOG};
pub use perm::Permutation;
pub use random::{random_knot_word, random_mixed_word, random_split_word, random_word};
pub use word::{parse_braid, BraidWord, FramedBraidWord, MarkovMove};
