use std::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::MAX_STRANDS;

/// A word in the braid group `B_n`: letter `k` is `σ_k`, `-k` is `σ_k^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::TooManyStrands(n));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::IndexOutOfRange {
                    what: "braid letter",
                    index: l as i64,
                });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, Vec::new()).unwrap()
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum `ε`.
    pub fn exponent_sum(&self) -> i32 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Underlying permutation `s_{|l1|} ∘ ... ∘ s_{|lk|}`.
    pub fn permutation(&self) -> Permutation {
        Permutation::from_word(
            self.n,
            self.letters.iter().map(|l| l.unsigned_abs() as usize),
        )
    }

    /// Prefix permutation after the first `k` letters.
    pub fn prefix_permutation(&self, k: usize) -> Permutation {
        Permutation::from_word(
            self.n,
            self.letters[..k].iter().map(|l| l.unsigned_abs() as usize),
        )
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Mismatch(format!(
                "{} vs {} strands",
                self.n, other.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(self.n, letters)
    }

    /// The inverse braid: reversed word with inverted letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Mirror image: every crossing inverted.
    pub fn mirror(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn with_letters(&self, letters: Vec<i32>) -> Self {
        BraidWord { n: self.n, letters }
    }

    /// Component labels of the closure: `labels[p - 1]` is the component of
    /// the strand starting at top position `p`. Components are numbered
    /// from 0 in order of their smallest top position.
    pub fn closure_components(&self) -> (usize, Vec<usize>) {
        let cycles = self.permutation().cycles();
        let mut labels = vec![0; self.n];
        for (c, cyc) in cycles.iter().enumerate() {
            for &p in cyc {
                labels[p - 1] = c;
            }
        }
        (cycles.len(), labels)
    }

    /// Component labels of the two strands meeting at each crossing, in
    /// word order: `(label at position i, label at position i+1)`.
    pub fn crossing_labels(&self) -> Vec<(usize, usize)> {
        let (_, mut at) = self.closure_components();
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            out.push((at[i - 1], at[i]));
            at.swap(i - 1, i);
        }
        out
    }

    /// Positions (0-based) of crossings between different components.
    pub fn mixed_crossings(&self) -> Vec<usize> {
        self.crossing_labels()
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn markov(&self, mv: &MarkovMove) -> Result<Self> {
        match mv {
            MarkovMove::Conjugate(g) => {
                let g = Self::new(self.n, g.clone())?;
                g.concat(self)?.concat(&g.inverse())
            }
            MarkovMove::Stabilize(positive) => {
                if self.n >= MAX_STRANDS {
                    return Err(Error::TooManyStrands(self.n + 1));
                }
                let mut letters = self.letters.clone();
                let l = self.n as i32;
                letters.push(if *positive { l } else { -l });
                Self::new(self.n + 1, letters)
            }
            MarkovMove::Destabilize => {
                let top = self.n as i32 - 1;
                let count = self.letters.iter().filter(|l| l.abs() == top).count();
                match self.letters.last() {
                    Some(l) if l.abs() == top && count == 1 && self.n >= 2 => {
                        Self::new(self.n - 1, self.letters[..self.letters.len() - 1].to_vec())
                    }
                    _ => Err(Error::InvalidDestabilization(format!(
                        "last letter must be the only occurrence of ±{top}"
                    ))),
                }
            }
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", FramedBraidWord::classical(self.clone()))
    }
}

/// Markov moves on braid words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkovMove {
    /// `β ↦ g β g^{-1}` for the given word `g`.
    Conjugate(Vec<i32>),
    /// `β ↦ β σ_n^{±1}` in `B_{n+1}`; `true` for the positive sign.
    Stabilize(bool),
    /// Inverse of stabilization.
    Destabilize,
}

/// A braid word with a framing vector modulo `d`, read as
/// `t_1^{a_1} ... t_n^{a_n} β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedBraidWord {
    word: BraidWord,
    framing: Vec<u32>,
    d: u32,
}

impl FramedBraidWord {
    pub fn new(word: BraidWord, framing: Vec<i64>, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::IndexOutOfRange {
                what: "modulus",
                index: 0,
            });
        }
        if framing.len() != word.n {
            return Err(Error::Mismatch(format!(
                "framing has {} entries for {} strands",
                framing.len(),
                word.n
            )));
        }
        let framing = framing
            .iter()
            .map(|a| a.rem_euclid(d as i64) as u32)
            .collect();
        Ok(FramedBraidWord { word, framing, d })
    }

    pub fn classical(word: BraidWord) -> Self {
        let n = word.n;
        FramedBraidWord {
            word,
            framing: vec![0; n],
            d: 1,
        }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn framing(&self) -> &[u32] {
        &self.framing
    }

    pub fn modulus(&self) -> u32 {
        self.d
    }

    pub fn strands(&self) -> usize {
        self.word.n
    }

    pub fn is_unframed(&self) -> bool {
        self.framing.iter().all(|&a| a == 0)
    }

    /// The same word and framing read modulo another `d`.
    pub fn with_modulus(&self, d: u32) -> Result<Self> {
        Self::new(
            self.word.clone(),
            self.framing.iter().map(|&a| a as i64).collect(),
            d,
        )
    }
}

impl fmt::Display for FramedBraidWord {
    /// Canonical braid text, e.g. `B3 d=2 t1^1 s1 s2^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.word.n)?;
        if self.d != 1 {
            write!(f, " d={}", self.d)?;
        }
        for (i, a) in self.framing.iter().enumerate() {
            if *a != 0 {
                write!(f, " t{}^{}", i + 1, a)?;
            }
        }
        for l in &self.word.letters {
            if *l > 0 {
                write!(f, " s{l}")?;
            } else {
                write!(f, " s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

enum Token {
    Sigma(usize, i64),
    T(usize, i64),
}

fn parse_int(s: &str, pos: usize) -> Result<i64> {
    s.parse().map_err(|_| Error::Parse {
        position: pos,
        message: format!("bad integer {s:?}"),
    })
}

/// Parses braid text such as `B3 d=2 t1^2 s1 s2^-1`.
///
/// Tokens are whitespace separated: an optional header `B<n>`, an optional
/// modulus `d=<d>`, crossings `s<k>` / `s<k>^<e>` and framings `t<i>` /
/// `t<i>^<a>`. A framing token placed after some crossings is moved to the
/// top of the braid using `β t_i = t_{β(i)} β`. Without a header the strand
/// count is one more than the largest crossing index (or the largest
/// framing index, if that is bigger).
pub fn parse_braid(text: &str) -> Result<FramedBraidWord> {
    let mut n: Option<usize> = None;
    let mut d: u32 = 1;
    let mut tokens: Vec<(usize, Token)> = Vec::new();
    let mut offset = 0;
    for raw in text.split_whitespace() {
        let pos = text[offset..].find(raw).unwrap() + offset;
        offset = pos + raw.len();
        let perr = |message: String| Error::Parse {
            position: pos,
            message,
        };
        if let Some(rest) = raw.strip_prefix("d=") {
            let v = parse_int(rest, pos)?;
            if v < 1 {
                return Err(perr("modulus must be positive".into()));
            }
            d = v as u32;
        } else if let Some(rest) = raw.strip_prefix('B') {
            let v = parse_int(rest, pos)?;
            if v < 1 || v as usize > MAX_STRANDS {
                return Err(perr(format!("strand count {v} outside 1..={MAX_STRANDS}")));
            }
            n = Some(v as usize);
        } else if let Some(rest) = raw.strip_prefix('s').or_else(|| raw.strip_prefix('t')) {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (parse_int(i, pos)?, parse_int(e, pos)?),
                None => (parse_int(rest, pos)?, 1),
            };
            if idx < 1 {
                return Err(perr(format!("index {idx} out of range")));
            }
            let idx = idx as usize;
            if raw.starts_with('s') {
                if exp == 0 {
                    return Err(perr("zero exponent".into()));
                }
                tokens.push((pos, Token::Sigma(idx, exp)));
            } else {
                tokens.push((pos, Token::T(idx, exp)));
            }
        } else {
            return Err(perr(format!("unknown token {raw:?}")));
        }
    }
    let inferred = tokens
        .iter()
        .map(|(_, t)| match t {
            Token::Sigma(i, _) => i + 1,
            Token::T(i, _) => *i,
        })
        .max()
        .unwrap_or(1);
    let n = n.unwrap_or(inferred);
    let mut letters = Vec::new();
    let mut framing = vec![0i64; n];
    let mut prefix = Permutation::identity(n);
    for (pos, t) in tokens {
        match t {
            Token::Sigma(i, e) => {
                if i >= n {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("s{i} out of range for B{n}"),
                    });
                }
                for _ in 0..e.unsigned_abs() {
                    letters.push(if e > 0 { i as i32 } else { -(i as i32) });
                    prefix.swap_positions(i);
                }
            }
            Token::T(i, a) => {
                if i > n {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("t{i} out of range for B{n}"),
                    });
                }
                if d == 1 {
                    return Err(Error::Parse {
                        position: pos,
                        message: "framing token requires d > 1".into(),
                    });
                }
                framing[prefix.apply(i) - 1] += a;
            }
        }
    }
    FramedBraidWord::new(BraidWord::new(n, letters)?, framing, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = parse_braid("B2 s1 s1").unwrap();
        assert_eq!(b.word().letters(), &[1, 1]);
        assert_eq!(b.framing(), &[0, 0]);
        let b = parse_braid("B2 d=3 t1^2 s1").unwrap();
        assert_eq!(b.word().letters(), &[1]);
        assert_eq!(b.framing(), &[2, 0]);
        let b = parse_braid("B3 s1 s2^-1").unwrap();
        assert_eq!(b.word().letters(), &[1, -2]);
        assert_eq!(b.strands(), 3);
        assert_eq!(parse_braid("s1 s3").unwrap().strands(), 4);
    }

    #[test]
    fn framing_moves_to_top() {
        // s1 t1 = t2 s1
        let b = parse_braid("B2 d=3 s1 t1").unwrap();
        assert_eq!(b.framing(), &[0, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_braid("B2 s2"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_braid("B2 x1"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_braid("B2 t1^1 s1"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn emit_parse_round_trip() {
        for s in [
            "B2 s1 s1",
            "B3 d=2 t1^1 s1 s2^-1",
            "B1",
            "B4 d=5 t2^3 t4^1 s3^-1 s1",
        ] {
            assert_eq!(parse_braid(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn components() {
        assert_eq!(w(2, &[1, 1]).closure_components().0, 2);
        assert_eq!(w(2, &[1, 1, 1]).closure_components().0, 1);
        assert_eq!(w(3, &[]).closure_components().0, 3);
    }

    #[test]
    fn mixed_crossing_examples() {
        assert_eq!(w(2, &[1, 1]).mixed_crossings(), vec![0, 1]);
        assert!(w(2, &[1, 1, 1]).mixed_crossings().is_empty());
        assert_eq!(w(3, &[1, 1, 2, 2]).mixed_crossings(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn markov_examples() {
        let h = w(2, &[1, 1]);
        let st = h.markov(&MarkovMove::Stabilize(true)).unwrap();
        assert_eq!(st, w(3, &[1, 1, 2]));
        assert_eq!(st.markov(&MarkovMove::Destabilize).unwrap(), h);
        let c = w(2, &[1, 1, 1])
            .markov(&MarkovMove::Conjugate(vec![1]))
            .unwrap();
        assert_eq!(c, w(2, &[1, 1, 1, 1, -1]));
        assert!(w(3, &[2, 1, 2]).markov(&MarkovMove::Destabilize).is_err());
    }
}
