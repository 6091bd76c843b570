//! Permutations of `{1..n}` composed left to right.
//!
//! `(π·ρ)(i) = ρ(π(i))`, so the permutation of a braid word `σ_{i1}⋯σ_{il}`
//! is `s_{i1}·…·s_{il}` and sends the strand starting at position `i` to the
//! position where it ends.

use std::fmt;

use num_integer::Integer;

use crate::error::{NilError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based: image[i] = π(i+1) - 1
    image: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based images, `images[i-1] = π(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(NilError::InvalidPermutation(n));
            }
            seen[v - 1] = true;
            image.push(v - 1);
        }
        Ok(Permutation { image })
    }

    /// The transposition `(k, k+1)`, 1-based `k`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k + 1 > n {
            return Err(NilError::IndexOutOfRange {
                what: "generator",
                index: k,
                n,
            });
        }
        let mut p = Self::identity(n);
        p.image.swap(k - 1, k);
        Ok(p)
    }

    /// Cycle `(start, start+1, …, start+len-1)` on 1-based points.
    pub fn cycle(n: usize, start: usize, len: usize) -> Result<Self> {
        if start == 0 || start + len > n + 1 {
            return Err(NilError::constraint(format!(
                "cycle of length {len} at {start} does not fit in n = {n}"
            )));
        }
        let mut p = Self::identity(n);
        for t in 0..len {
            let i = start - 1 + t;
            p.image[i] = start - 1 + (t + 1) % len;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right product: `(self·other)(i) = other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(NilError::StrandMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_k` (swap the values `k` and `k+1`).
    pub(crate) fn swap_values(&mut self, k: usize) {
        for v in self.image.iter_mut() {
            if *v == k - 1 {
                *v = k;
            } else if *v == k {
                *v = k - 1;
            }
        }
    }

    /// True when `ℓ(π·s_k) = ℓ(π) + 1`, i.e. value `k` sits left of `k+1`.
    pub(crate) fn right_ascent(&self, k: usize) -> bool {
        let pos_k = self.image.iter().position(|&v| v == k - 1).unwrap();
        let pos_k1 = self.image.iter().position(|&v| v == k).unwrap();
        pos_k < pos_k1
    }

    /// Disjoint cycles as 1-based point lists, each starting at its minimum,
    /// ordered by minimum. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.image[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths sorted in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Order of the permutation: lcm of the cycle lengths.
    pub fn order(&self) -> Result<u64> {
        self.cycles().iter().try_fold(1u64, |acc, c| {
            let len = c.len() as u64;
            let g = acc.gcd(&len);
            (acc / g).checked_mul(len).ok_or(NilError::Overflow)
        })
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
        if even {
            1
        } else {
            -1
        }
    }

    /// Lexicographically smallest reduced word `[i1, …, il]` with
    /// `s_{i1}·…·s_{il} = self`.
    ///
    /// Greedy on left descents: the first letter can be any `k` with
    /// `π(k) > π(k+1)`, and taking the smallest one at every step leaves a
    /// permutation that still has a reduced word, so the greedy word is the
    /// lexicographic minimum.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut img = self.image.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (0..img.len().saturating_sub(1)).find(|&i| img[i] > img[i + 1]) {
            word.push(i + 1);
            img.swap(i, i + 1);
        }
        word
    }

    /// Embeds into `S_n` acting on `offset+1..=offset+self.n()`.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<Permutation> {
        if offset + self.n() > n {
            return Err(NilError::constraint(format!(
                "block of size {} at offset {offset} exceeds n = {n}",
                self.n()
            )));
        }
        let mut p = Self::identity(n);
        for (i, &v) in self.image.iter().enumerate() {
            p.image[offset + i] = offset + v;
        }
        Ok(p)
    }
}

/// Pads a cycle type with fixed points up to `n` and sorts decreasingly.
pub fn padded_cycle_type(parts: &[usize], n: usize) -> Vec<usize> {
    let mut t: Vec<usize> = parts.iter().copied().filter(|&p| p > 1).collect();
    let used: usize = t.iter().sum();
    t.extend(std::iter::repeat_n(1, n.saturating_sub(used)));
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}
