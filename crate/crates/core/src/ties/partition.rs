use std::fmt;

use crate::braid::Permutation;
use crate::MAX_STRANDS;

/// A set partition of `{1..n}`, stored as a restricted growth string: the
/// block label of each element, with blocks numbered in order of their
/// minima.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u8,
    label: [u8; MAX_STRANDS],
}

impl SetPartition {
    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= MAX_STRANDS);
        let mut label = [0; MAX_STRANDS];
        for (i, l) in label.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        SetPartition { n: n as u8, label }
    }

    fn from_labels(n: usize, raw: &[u8]) -> Self {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let mut label = [0; MAX_STRANDS];
        for i in 0..n {
            let r = raw[i] as usize;
            if map[r] == u8::MAX {
                map[r] = next;
                next += 1;
            }
            label[i] = map[r];
        }
        SetPartition { n: n as u8, label }
    }

    /// Builds from blocks of 1-based elements; unlisted elements become
    /// singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut p = Self::discrete(n);
        for b in blocks {
            for w in b.windows(2) {
                p = p.join(w[0], w[1]);
            }
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Block label of element `i` (1-based).
    #[inline]
    pub fn block_of(&self, i: usize) -> u8 {
        self.label[i - 1]
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of(i) == self.block_of(j)
    }

    pub fn block_size(&self, i: usize) -> usize {
        let b = self.block_of(i);
        self.label[..self.n()].iter().filter(|&&l| l == b).count()
    }

    pub fn num_blocks(&self) -> usize {
        self.label[..self.n()]
            .iter()
            .max()
            .map_or(0, |&m| m as usize + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for i in 1..=self.n() {
            out[self.block_of(i) as usize].push(i);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.n()
    }

    /// Joins the blocks of `i` and `j`.
    pub fn join(&self, i: usize, j: usize) -> Self {
        let (a, b) = (self.block_of(i), self.block_of(j));
        if a == b {
            return *self;
        }
        let mut raw = self.label;
        for l in raw.iter_mut().take(self.n()) {
            if *l == b {
                *l = a;
            }
        }
        Self::from_labels(self.n(), &raw)
    }

    /// Finest common coarsening.
    pub fn join_with(&self, other: &Self) -> Self {
        let mut p = *self;
        for b in other.blocks() {
            for w in b.windows(2) {
                p = p.join(w[0], w[1]);
            }
        }
        p
    }

    /// The image partition `{v(B)}`.
    pub fn permute(&self, v: &Permutation) -> Self {
        let mut raw = [0u8; MAX_STRANDS];
        for i in 1..=self.n() {
            raw[v.apply(i) - 1] = self.block_of(i);
        }
        Self::from_labels(self.n(), &raw)
    }

    /// Removes element `n`.
    pub fn remove_last(&self) -> Self {
        Self::from_labels(self.n() - 1, &self.label)
    }

    /// Adds `n + 1` as a singleton.
    pub fn embed(&self) -> Self {
        let mut p = *self;
        p.label[self.n()] = self.num_blocks() as u8;
        p.n += 1;
        p
    }

    /// All set partitions of `{1..n}`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut raw = vec![0u8; n];
        fn rec(i: usize, maxl: u8, raw: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
            let n = raw.len();
            if i == n {
                out.push(SetPartition::from_labels(n, raw));
                return;
            }
            for l in 0..=maxl {
                raw[i] = l;
                rec(i + 1, maxl.max(l + 1), raw, out);
            }
        }
        if n == 0 {
            return vec![Self::discrete(0)];
        }
        rec(1, 1, &mut raw, &mut out);
        out
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}
