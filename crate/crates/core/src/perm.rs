//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition follows function composition: `a.compose(&b)` is `a ∘ b`, so
//! `b` acts first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    /// `images[v - 1]` is the image of `v`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidIndices(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(
            a >= 1 && a <= n && b >= 1 && b <= n,
            "transposition out of range"
        );
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Reverses the interval `[i..=j]`: sends `i + t` to `j - t`.
    pub fn interval_reversal(n: usize, i: usize, j: usize) -> Self {
        assert!(
            1 <= i && i <= j && j <= n,
            "interval [{i}, {j}] outside 1..={n}"
        );
        let mut p = Self::identity(n);
        p.images[i - 1..j].reverse();
        p
    }

    /// The cycle `v ↦ v - 1` on `{1..k}` with `1 ↦ k`, fixing everything above `k`.
    pub fn descending_cycle(n: usize, k: usize) -> Self {
        assert!(k <= n);
        let mut p = Self::identity(n);
        for v in 1..=k {
            p.images[v - 1] = if v == 1 { k } else { v - 1 };
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in composition");
        Permutation {
            images: rhs.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Self::identity(self.rank());
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Moves the entry at position `x` to position `self(x)`.
    pub fn act_on_sequence<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        assert_eq!(seq.len(), self.rank());
        let mut out = seq.to_vec();
        for (x, item) in seq.iter().enumerate() {
            out[self.images[x] - 1] = item.clone();
        }
        out
    }

    /// Points that are not fixed.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&v| self.apply(v) != v).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
