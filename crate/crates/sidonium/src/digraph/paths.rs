//! Hamilton-path families and two-part cycles: cycles formed by gluing a
//! contiguous subpath of one path to a contiguous subpath of another.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// A cycle of length `l` assembled from one subpath of `P` and one of `Q`.
///
/// `p_span`/`q_span` are inclusive index ranges into the two paths. The
/// type is taken with each path's edges oriented along its traversal: when
/// the `Q`-subpath runs from the `P`-subpath's tail back to its head the
/// two orientations agree around the cycle (type `l`), otherwise they
/// oppose (type `|a - b|`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPartCycle {
    pub vertices: Vec<usize>,
    pub cycle_type: u64,
    pub p_span: (usize, usize),
    pub q_span: (usize, usize),
}

fn check_paths(p: &[usize], q: &[usize]) -> Result<()> {
    if p.len() != q.len() || p.is_empty() {
        return Err(Error::invalid("paths must have equal positive length"));
    }
    let mut sp = p.to_vec();
    let mut sq = q.to_vec();
    sp.sort_unstable();
    sq.sort_unstable();
    sp.dedup();
    sq.dedup();
    if sp.len() != p.len() || sq.len() != q.len() || sp != sq {
        return Err(Error::invalid(
            "paths must be sequences of distinct vertices over the same set",
        ));
    }
    Ok(())
}

/// All length-`l` cycles formed as the union of one contiguous subpath of
/// `p` and one of `q`, each reported with its type.
pub fn two_part_cycles(p: &[usize], q: &[usize], l: usize) -> Result<Vec<TwoPartCycle>> {
    check_paths(p, q)?;
    let n = p.len();
    let mut out = Vec::new();
    if l < 3 {
        return Ok(out); // two subpaths between the same endpoints never
                        // make a shorter cycle in a simple graph
    }
    for a in 1..l.min(n) {
        let b = l - a;
        if b < 1 || b > n - 1 {
            continue;
        }
        for i in 0..n - a {
            let (pu, pv) = (p[i], p[i + a]);
            for j in 0..n - b {
                let (qu, qv) = (q[j], q[j + b]);
                let aligned = if qu == pv && qv == pu {
                    true // q-subpath runs tail -> head: orientations agree
                } else if qu == pu && qv == pv {
                    false
                } else {
                    continue;
                };
                let p_internal = &p[i + 1..i + a];
                let q_internal = &q[j + 1..j + b];
                if p_internal.iter().any(|x| q_internal.contains(x)) {
                    continue;
                }
                let mut vertices: Vec<usize> = p[i..=i + a].to_vec();
                if aligned {
                    vertices.extend(q_internal.iter().copied());
                } else {
                    vertices.extend(q_internal.iter().rev().copied());
                }
                let cycle_type = if aligned {
                    l as u64
                } else {
                    (a as i64 - b as i64).unsigned_abs()
                };
                out.push(TwoPartCycle {
                    vertices,
                    cycle_type,
                    p_span: (i, i + a),
                    q_span: (j, j + b),
                });
            }
        }
    }
    Ok(out)
}

/// The family of Hamilton paths over a fixed balanced partition
/// `N_0, …, N_{2r}` of `{0..n-1}` into consecutive blocks, containing every
/// path whose `i`-th vertex lies in `N_{i mod (2r+1)}`.
#[derive(Debug, Clone)]
pub struct SigmaFamily {
    pub n: usize,
    pub r: usize,
    pub part_size: usize,
    pub family_size: BigUint,
    /// `n!`, the number of Hamilton paths on the vertex set.
    pub hamilton_paths_total: BigUint,
    /// `n! / |Σ|`: with pairwise-compatible families forming an independent
    /// set in a vertex-transitive graph, no clique exceeds this figure.
    /// Reported only; never asserted against an actual clique.
    pub derived_clique_bound: BigUint,
}

impl SigmaFamily {
    pub fn parts(&self) -> Vec<Vec<usize>> {
        (0..2 * self.r + 1)
            .map(|s| (s * self.part_size..(s + 1) * self.part_size).collect())
            .collect()
    }

    /// Streams every member of the family.
    pub fn members(&self) -> SigmaIter<'_> {
        SigmaIter {
            family: self,
            perms: vec![(0..self.part_size).collect(); 2 * self.r + 1],
            done: self.part_size == 0,
        }
    }
}

pub struct SigmaIter<'f> {
    family: &'f SigmaFamily,
    perms: Vec<Vec<usize>>,
    done: bool,
}

impl Iterator for SigmaIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let parts = 2 * self.family.r + 1;
        let q = self.family.part_size;
        let mut path = Vec::with_capacity(self.family.n);
        for pos in 0..self.family.n {
            let s = pos % parts;
            let slot = pos / parts;
            path.push(s * q + self.perms[s][slot]);
        }
        // advance the odometer of per-part permutations, last part fastest
        for s in (0..parts).rev() {
            if next_permutation(&mut self.perms[s]) {
                return Some(path);
            }
            // wrapped around: reset and carry
            self.perms[s].sort_unstable();
            if s == 0 {
                self.done = true;
            }
        }
        Some(path)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn factorial_big(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Builds the family descriptor; requires `(2r + 1) | n`.
pub fn sigma_paths(n: usize, r: usize) -> Result<SigmaFamily> {
    let parts = 2 * r + 1;
    if r < 1 {
        return Err(Error::invalid("r must be at least 1"));
    }
    if n == 0 || n % parts != 0 {
        return Err(Error::invalid(format!(
            "{parts} must divide n (got n = {n})"
        )));
    }
    let q = n / parts;
    let family_size = factorial_big(q as u64).pow(parts as u32);
    let total = factorial_big(n as u64);
    let derived = &total / &family_size;
    Ok(SigmaFamily {
        n,
        r,
        part_size: q,
        family_size,
        hamilton_paths_total: total,
        derived_clique_bound: derived,
    })
}
