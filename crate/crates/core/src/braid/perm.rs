use std::fmt;

use crate::MAX_STRANDS;

/// A permutation of `{1..n}`, stored as its image array.
///
/// Convention: the word `s_{i1} s_{i2} ... s_{ik}` denotes the composite
/// function `s_{i1} ∘ s_{i2} ∘ ... ∘ s_{ik}`, so right multiplication by
/// `s_j` swaps the images at positions `j` and `j + 1`. With this convention
/// `g_w t_j = t_{w(j)} g_w` in the Yokonuma-Hecke algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_STRANDS, "too many strands");
        let mut img = [0u8; MAX_STRANDS];
        for (i, x) in img.iter_mut().enumerate().take(n) {
            *x = (i + 1) as u8;
        }
        Permutation { n: n as u8, img }
    }

    /// Builds from 1-based images; `None` unless it is a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (i, &x) in images.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
            img[i] = x as u8;
        }
        Some(Permutation { n: n as u8, img })
    }

    /// The product `s_{i1} ∘ ... ∘ s_{ik}` of the given generator indices.
    pub fn from_word(n: usize, letters: impl IntoIterator<Item = usize>) -> Self {
        let mut w = Self::identity(n);
        for i in letters {
            w.swap_positions(i);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `w(i)`, 1-based.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.img[..self.n()].iter().map(|&x| x as usize).collect()
    }

    /// Replaces `w` by `w ∘ s_j`.
    #[inline]
    pub fn swap_positions(&mut self, j: usize) {
        self.img.swap(j - 1, j);
    }

    pub fn times_s(&self, j: usize) -> Self {
        let mut w = *self;
        w.swap_positions(j);
        w
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut img = [0u8; MAX_STRANDS];
        for (i, slot) in img.iter_mut().enumerate().take(self.n()) {
            *slot = self.img[other.img[i] as usize - 1];
        }
        Permutation { n: self.n, img }
    }

    pub fn inverse(&self) -> Self {
        let mut img = [0u8; MAX_STRANDS];
        for i in 0..self.n() {
            img[self.img[i] as usize - 1] = (i + 1) as u8;
        }
        Permutation { n: self.n, img }
    }

    /// `w^{-1}(x)`.
    pub fn preimage(&self, x: usize) -> usize {
        self.img[..self.n()]
            .iter()
            .position(|&y| y as usize == x)
            .unwrap()
            + 1
    }

    /// Number of inversions (Coxeter length).
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word `[i1, ..., ik]` with `self = s_{i1} ∘ ... ∘ s_{ik}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = *self;
        let mut rev = Vec::new();
        'outer: loop {
            for j in 1..v.n() {
                if v.apply(j) > v.apply(j + 1) {
                    v.swap_positions(j);
                    rev.push(j);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// The permutation of `{1..n+1}` fixing `n + 1`.
    pub fn embed(&self) -> Self {
        assert!(self.n() < MAX_STRANDS, "too many strands");
        let mut w = *self;
        w.img[self.n()] = self.n + 1;
        w.n += 1;
        w
    }

    /// Drops the last point, which must be fixed.
    pub fn restrict(&self) -> Self {
        debug_assert_eq!(self.apply(self.n()), self.n());
        let mut w = *self;
        w.img[self.n() - 1] = 0;
        w.n -= 1;
        w
    }

    /// Cycles, each listed from its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n()).all(|i| self.apply(i) == i)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_rebuild() {
        let w = Permutation::from_images(&[3, 1, 4, 2]).unwrap();
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        assert_eq!(Permutation::from_word(4, word), w);
    }

    #[test]
    fn composition_convention() {
        // s1 ∘ s2 sends 1 -> 2 -> ... : (s1∘s2)(3) = s1(2) = 1
        let w = Permutation::from_word(3, [1, 2]);
        assert_eq!(w.apply(3), 1);
        let s1 = Permutation::from_word(3, [1]);
        let s2 = Permutation::from_word(3, [2]);
        assert_eq!(s1.compose(&s2), w);
        assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn cycles_and_embedding() {
        let w = Permutation::from_word(3, [1]);
        assert_eq!(w.cycles(), vec![vec![1, 2], vec![3]]);
        let e = w.embed();
        assert_eq!(e.n(), 4);
        assert_eq!(e.restrict(), w);
    }
}
