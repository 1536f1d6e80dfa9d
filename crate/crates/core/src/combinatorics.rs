//! Binomial coefficients and the colexicographic ranking of r-subsets.
//!
//! An r-subset `s[0] < s[1] < ... < s[r-1]` has colex rank
//! `C(s[0],1) + C(s[1],2) + ... + C(s[r-1],r)`. For fixed `r` this is a
//! bijection from the r-subsets of `[0,n)` onto `[0, C(n,r))`, and it does
//! not depend on `n`, so a rank stays valid when the ground set grows.

use crate::error::{Error, Result};

/// `C(n, k)`, or `u64::MAX` if the value does not fit.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colex rank of a strictly increasing slice. No validation.
#[inline]
pub fn rank_unchecked(s: &[u32]) -> u64 {
    let mut rank = 0;
    for (i, &x) in s.iter().enumerate() {
        rank += binomial(x as u64, i as u64 + 1);
    }
    rank
}

/// Colex rank of an r-subset of `[0,n)`.
pub fn colex_rank(s: &[u32], n: usize) -> Result<u64> {
    validate_subset(s, n)?;
    Ok(rank_unchecked(s))
}

pub fn validate_subset(s: &[u32], n: usize) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidSubset("empty subset".into()));
    }
    if let Some(w) = s.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSubset(format!(
            "{:?} is not strictly increasing ({} >= {})",
            s, w[0], w[1]
        )));
    }
    if let Some(&last) = s.last() {
        if last as usize >= n {
            return Err(Error::InvalidSubset(format!(
                "{:?} has vertex {} outside [0,{})",
                s, last, n
            )));
        }
    }
    Ok(())
}

/// Inverse of [`colex_rank`]. Every rank decodes.
pub fn colex_unrank(rank: u64, r: usize) -> Vec<u32> {
    let mut out = vec![0u32; r];
    colex_unrank_into(rank, &mut out);
    out
}

pub fn colex_unrank_into(mut rank: u64, out: &mut [u32]) {
    for i in (1..=out.len()).rev() {
        let x = largest_with_binomial_at_most(rank, i as u64);
        out[i - 1] = x as u32;
        rank -= binomial(x, i as u64);
    }
}

// Largest x with C(x, i) <= rank. C(i-1, i) = 0 so x >= i-1.
fn largest_with_binomial_at_most(rank: u64, i: u64) -> u64 {
    let mut lo = i - 1;
    let mut step = 1u64;
    let mut hi = lo + 1;
    while binomial(hi, i) <= rank {
        lo = hi;
        step = step.saturating_mul(2);
        hi = hi.saturating_add(step);
    }
    // C(lo,i) <= rank < C(hi,i)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, i) <= rank {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Advance `s` to the next r-subset of `[0,n)` in colex order. Returns
/// `false` (leaving `s` unspecified) when `s` was the last one.
pub fn next_colex(s: &mut [u32], n: usize) -> bool {
    let r = s.len();
    for i in 0..r {
        let cap = if i + 1 < r { s[i + 1] } else { n as u32 };
        if s[i] + 1 < cap {
            s[i] += 1;
            for (j, x) in s.iter_mut().enumerate().take(i) {
                *x = j as u32;
            }
            return true;
        }
    }
    false
}

/// Iterator over all r-subsets of `[0,n)` in colex (= rank) order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    current: Vec<u32>,
    n: usize,
    done: bool,
}

pub fn colex_subsets(n: usize, r: usize) -> ColexSubsets {
    ColexSubsets {
        current: (0..r as u32).collect(),
        n,
        done: r > n,
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if !next_colex(&mut self.current, self.n) {
            self.done = true;
        }
        Some(out)
    }
}

/// An r-subset of `[0,n)`, stored as its strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RSubset(Vec<u32>);

impl RSubset {
    pub fn new(vertices: Vec<u32>, n: usize) -> Result<Self> {
        validate_subset(&vertices, n)?;
        Ok(RSubset(vertices))
    }

    /// Sorts and deduplicates first, then validates.
    pub fn from_unsorted(mut vertices: Vec<u32>, n: usize) -> Result<Self> {
        let len = vertices.len();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != len {
            return Err(Error::InvalidSubset("repeated vertex".into()));
        }
        Self::new(vertices, n)
    }

    pub fn unrank(rank: u64, r: usize) -> Self {
        RSubset(colex_unrank(rank, r))
    }

    pub fn rank(&self) -> u64 {
        rank_unchecked(&self.0)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl AsRef<[u32]> for RSubset {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}
