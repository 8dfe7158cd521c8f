//! Permutations of `{1..n}` in one-line notation, with Lehmer-code ranking.
//!
//! The composition convention throughout the crate is `(ab)(x) = a(b(x))`:
//! in a product the rightmost factor acts first.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{1..n}`. Stored 0-indexed; all I/O is 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds from 1-indexed one-line notation, e.g. `[2, 3, 1]` for (1 2 3).
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut v = Vec::with_capacity(n);
        for &im in images {
            if im < 1 || im > n || seen[im - 1] {
                return Err(Error::parse(format!(
                    "not a bijection of 1..{n}: {images:?}"
                )));
            }
            seen[im - 1] = true;
            v.push((im - 1) as u32);
        }
        Ok(Permutation { images: v })
    }

    /// Builds from disjoint-cycle notation over `{1..n}`, e.g. `(1 2 3)(4 5)`.
    /// The identity is written `()`. Cycles need not be disjoint; they are
    /// applied rightmost first, matching the composition convention.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::parse("empty cycle expression".to_string()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::parse(format!(
                    "expected '(' in cycle notation: {text}"
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::parse(format!("unbalanced parentheses: {text}")))?;
            let inner = &rest[1..close];
            let mut cyc = Vec::new();
            for tok in inner
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
            {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(format!("bad point '{tok}' in {text}")))?;
                if p < 1 || p > n {
                    return Err(Error::parse(format!("point {p} outside 1..{n}")));
                }
                if cyc.contains(&p) {
                    return Err(Error::parse(format!("repeated point {p} in cycle")));
                }
                cyc.push(p);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = rest[close + 1..].trim_start();
        }
        // rightmost cycle acts first
        let mut result = Permutation::identity(n);
        for cyc in cycles.iter().rev() {
            let mut step = Permutation::identity(n);
            for i in 0..cyc.len() {
                step.images[cyc[i] - 1] = (cyc[(i + 1) % cyc.len()] - 1) as u32;
            }
            result = step.compose(&result);
        }
        Ok(result)
    }

    /// Parses either cycle notation (leading `(`) or whitespace/comma
    /// separated one-line notation.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('(') {
            Self::from_cycles(n, t)
        } else {
            let images: Vec<usize> = t
                .split(|c: char| c == ' ' || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad image '{s}'")))
                })
                .collect::<Result<_>>()?;
            if images.len() != n {
                return Err(Error::parse(format!(
                    "one-line notation has {} images, expected {n}",
                    images.len()
                )));
            }
            Self::from_one_line(&images)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-indexed point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-indexed one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self` after `other`: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &im)| i as u32 == im)
    }

    /// True when the permutation is even.
    pub fn is_even(&self) -> bool {
        self.lehmer_digit_sum() % 2 == 0
    }

    /// Disjoint cycle decomposition, 1-indexed, fixed points omitted,
    /// each cycle led by its smallest point, cycles sorted by leader.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    fn lehmer_digit_sum(&self) -> u64 {
        let mut sum = 0u64;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[j] < self.images[i] {
                    sum += 1;
                }
            }
        }
        sum
    }

    /// Lexicographic rank in `S_n`; the identity has rank 0.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut rank = 0u64;
        let mut fact = factorial(n.saturating_sub(1));
        for i in 0..n {
            let d = (i + 1..n)
                .filter(|&j| self.images[j] < self.images[i])
                .count() as u64;
            rank += d * fact;
            if n - i > 1 {
                fact /= (n - i - 1) as u64;
            }
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: u64) -> Permutation {
        let mut digits = vec![0u64; n];
        let mut fact = factorial(n.saturating_sub(1));
        for (i, slot) in digits.iter_mut().enumerate().take(n.saturating_sub(1)) {
            *slot = rank / fact;
            rank %= fact;
            if n - i > 1 {
                fact /= (n - i - 1) as u64;
            }
        }
        from_lehmer(n, &digits)
    }

    /// Rank among the even permutations of `S_n`, lexicographic order.
    pub fn rank_even(&self) -> u64 {
        debug_assert!(self.is_even());
        let n = self.degree();
        if n < 2 {
            return 0;
        }
        // The first n-2 Lehmer digits determine an even permutation: the
        // final two images are forced by parity.
        let mut rank = 0u64;
        let mut weight = factorial(n - 1) / 2;
        for i in 0..n - 2 {
            let d = (i + 1..n)
                .filter(|&j| self.images[j] < self.images[i])
                .count() as u64;
            rank += d * weight;
            weight /= (n - i - 1) as u64;
        }
        rank
    }

    pub fn unrank_even(n: usize, mut rank: u64) -> Permutation {
        if n < 2 {
            return Permutation::identity(n);
        }
        let mut digits = vec![0u64; n];
        let mut weight = factorial(n - 1) / 2;
        let mut parity = 0u64;
        for (i, slot) in digits.iter_mut().enumerate().take(n - 2) {
            *slot = rank / weight;
            rank %= weight;
            parity += *slot;
            weight /= (n - i - 1) as u64;
        }
        digits[n - 2] = parity % 2;
        from_lehmer(n, &digits)
    }
}

fn from_lehmer(n: usize, digits: &[u64]) -> Permutation {
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut images = Vec::with_capacity(n);
    for &d in digits.iter().take(n) {
        images.push(pool.remove(d as usize));
    }
    Permutation { images }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
