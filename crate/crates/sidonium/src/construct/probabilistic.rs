//! The deletion method: build the exact hypergraph of forbidden word
//! patterns, pick the sample size `k*` maximizing `k - f(k)` by rational
//! arithmetic, sample, delete one vertex per surviving violation, and retry
//! until the guaranteed size is met.

use crate::digraph::random::attempt_rng;
use crate::error::{Error, Result};
use crate::group::{build_group, ElementSet, FiniteGroup, GroupSpec};
use crate::sidon::{check_sk, check_sk_prime, VerifyCaps};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Which forbidden-word family the construction avoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SidonKind {
    /// Distinct products `αβ = γδ`; needs a base set with pairwise distinct
    /// squares and pairwise non-commuting elements.
    First,
    /// Alternating products `αβ⁻¹γδ⁻¹ = 1` over the whole group.
    Second,
}

/// The exact census of the violation hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphProfile {
    pub vertex_count: usize,
    /// `e_r`: number of edges of each size `r`.
    pub edge_counts_by_size: Vec<(usize, u64)>,
    /// `f(k) = Σ_r e_r C(k,r)/C(n,r)` tabulated for `k = 0..=n`.
    pub f_of_k: Vec<BigRational>,
}

impl HypergraphProfile {
    pub fn f(&self, k: usize) -> &BigRational {
        &self.f_of_k[k]
    }
}

#[derive(Debug, Clone)]
pub struct DeletionOutcome {
    pub set: ElementSet,
    pub profile: HypergraphProfile,
    /// The sample size maximizing `k - f(k)`.
    pub k_star: usize,
    /// `⌈k* - f(k*)⌉`: the size the retry loop insists on.
    pub target: u64,
    pub attempts: u64,
    /// False only when the attempt budget ran out; the set is still valid.
    pub met: bool,
}

fn binomial_big(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn tabulate_f(n: usize, edges: &[Vec<u32>]) -> Vec<BigRational> {
    let mut counts = [0u64; 5];
    for e in edges {
        counts[e.len()] += 1;
    }
    (0..=n)
        .map(|k| {
            let mut f = BigRational::zero();
            for (r, &e_r) in counts.iter().enumerate().skip(2) {
                if e_r == 0 {
                    continue;
                }
                let num = BigInt::from(e_r) * binomial_big(k as u64, r as u64);
                let den = binomial_big(n as u64, r as u64);
                f += BigRational::new(num, den);
            }
            f
        })
        .collect()
}

/// Is `b` a valid base for the first kind: pairwise distinct squares and
/// pairwise non-commuting?
pub fn is_valid_base(group: &FiniteGroup, base: &ElementSet) -> bool {
    let m = base.members();
    for (i, &a) in m.iter().enumerate() {
        for &b in &m[i + 1..] {
            if group.mul(a, a) == group.mul(b, b) || group.mul(a, b) == group.mul(b, a) {
                return false;
            }
        }
    }
    true
}

/// Violation edges for the first kind over the base `B`: support sets of
/// the equation `αβ = γδ` with distinct word positions, classified as
/// squares-equal pairs, commuting pairs, conjugation triples `αβ = γα`,
/// square-split triples `α² = βγ`, and generic quadruples.
fn edges_first(group: &FiniteGroup, verts: &[usize]) -> Vec<Vec<u32>> {
    let s = verts.len();
    let pos = |x: usize| verts.binary_search(&x).ok().map(|p| p as u32);
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let (a, b) = (verts[i], verts[j]);
            if i < j {
                // form: equal squares
                if group.mul(a, a) == group.mul(b, b) {
                    edges.insert(vec![i as u32, j as u32]);
                }
                // form: commuting pair
                if group.mul(a, b) == group.mul(b, a) {
                    edges.insert(vec![i as u32, j as u32]);
                }
            }
            // form: αβ = γα with γ = αβα⁻¹
            let gamma = group.conjugate(a, b);
            if let Some(p) = pos(gamma) {
                if gamma != a && gamma != b {
                    let mut e = vec![i as u32, j as u32, p];
                    e.sort_unstable();
                    edges.insert(e);
                }
            }
            // form: α² = βγ with γ = β⁻¹α²
            let gamma = group.mul(group.inv(b), group.mul(a, a));
            if let Some(p) = pos(gamma) {
                if gamma != a && gamma != b {
                    let mut e = vec![i as u32, j as u32, p];
                    e.sort_unstable();
                    edges.insert(e);
                }
            }
            // form: αβ = γδ, all four distinct
            for l in 0..s {
                let c = verts[l];
                if c == a || c == b {
                    continue;
                }
                let d = group.mul(group.inv(c), group.mul(a, b));
                if d == a || d == b || d == c {
                    continue;
                }
                if let Some(p) = pos(d) {
                    let mut e = vec![i as u32, j as u32, l as u32, p];
                    e.sort_unstable();
                    edges.insert(e);
                }
            }
        }
    }
    edges.into_iter().collect()
}

/// Violation edges for the second kind over the whole group: support sets
/// of `αβ⁻¹γδ⁻¹ = 1` with the cyclic adjacency conditions, classified as
/// involution-difference pairs, triples `αβ⁻¹αδ⁻¹ = 1`, and generic
/// quadruples.
fn edges_second(group: &FiniteGroup) -> Vec<Vec<u32>> {
    let n = group.order();
    let inv: Vec<usize> = (0..n).map(|x| group.inv(x)).collect();
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let diff = group.mul(a, inv[b]);
            if a < b && group.mul(diff, diff) == 0 {
                edges.insert(vec![a as u32, b as u32]);
            }
            // δ = αβ⁻¹α
            let d = group.mul(diff, a);
            if d != a && d != b {
                let mut e = vec![a as u32, b as u32, d as u32];
                e.sort_unstable();
                edges.insert(e);
            }
            // δ = αβ⁻¹γ over all γ
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let d = group.mul(diff, c);
                if d == a || d == b || d == c {
                    continue;
                }
                let mut e = vec![a as u32, b as u32, c as u32, d as u32];
                e.sort_unstable();
                edges.insert(e);
            }
        }
    }
    edges.into_iter().collect()
}

pub const DEFAULT_DELETION_ATTEMPTS: u64 = 256;

/// Runs the deletion construction. For [`SidonKind::First`] the vertex set
/// is the provided base; for [`SidonKind::Second`] it is the whole group.
/// The returned set always passes the corresponding verifier; `met` records
/// whether the size guarantee `⌈k* - f(k*)⌉` was reached within the budget.
pub fn probabilistic_sidon(
    group: &FiniteGroup,
    kind: SidonKind,
    base: Option<&ElementSet>,
    seed: u64,
    max_attempts: u64,
    caps: &VerifyCaps,
) -> Result<DeletionOutcome> {
    let verts: Vec<usize> = match kind {
        SidonKind::First => {
            let base = base.ok_or_else(|| Error::invalid("the first kind requires a base set"))?;
            if !is_valid_base(group, base) {
                return Err(Error::invalid(
                    "base must have pairwise distinct squares and pairwise non-commuting elements",
                ));
            }
            base.members().to_vec()
        }
        SidonKind::Second => group.elements().collect(),
    };
    let n = verts.len();
    let work = (n as u128).pow(3);
    if work > caps.max_words as u128 {
        return Err(Error::WorkCap {
            needed: work,
            cap: caps.max_words,
        });
    }
    if n == 0 {
        return Err(Error::invalid("empty vertex set"));
    }

    // edges hold positions into `verts`; for the second kind the vertex
    // list is 0..n so positions and element indices coincide
    let edges = match kind {
        SidonKind::First => edges_first(group, &verts),
        SidonKind::Second => edges_second(group),
    };

    let f = tabulate_f(n, &edges);
    let mut k_star = 1usize;
    let mut best_gain = BigRational::from(BigInt::from(1)) - f[1].clone();
    for k in 2..=n {
        let gain = BigRational::from(BigInt::from(k as u64)) - f[k].clone();
        if gain > best_gain {
            best_gain = gain;
            k_star = k;
        }
    }
    let target = if best_gain.is_positive() {
        best_gain.ceil().to_integer().to_u64().unwrap_or(0)
    } else {
        0
    };

    let mut counts_pairs: Vec<(usize, u64)> = Vec::new();
    for r in 2..=4usize {
        let c = edges.iter().filter(|e| e.len() == r).count() as u64;
        counts_pairs.push((r, c));
    }
    let profile = HypergraphProfile {
        vertex_count: n,
        edge_counts_by_size: counts_pairs,
        f_of_k: f,
    };

    let mut best: Option<ElementSet> = None;
    let mut attempts = 0u64;
    for attempt in 0..max_attempts.max(1) {
        attempts = attempt + 1;
        let mut rng = attempt_rng(seed, attempt);
        // uniform k*-subset by partial Fisher-Yates over positions
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for i in 0..k_star {
            let j = rng.gen_range(i..n);
            perm.swap(i, j);
        }
        let mut inside = vec![false; n];
        for &p in &perm[..k_star] {
            inside[p as usize] = true;
        }
        // delete the largest position of every edge still fully inside
        for e in &edges {
            if e.iter().all(|&p| inside[p as usize]) {
                inside[*e.last().unwrap() as usize] = false;
            }
        }
        debug_assert!(edges.iter().all(|e| !e.iter().all(|&p| inside[p as usize])));
        let chosen = ElementSet::from_indices((0..n).filter(|&p| inside[p]).map(|p| verts[p]));
        let holds = match kind {
            SidonKind::First => check_sk(group, &chosen, 2, caps)?.holds,
            SidonKind::Second => check_sk_prime(group, &chosen, 2, caps)?.holds,
        };
        if !holds {
            return Err(Error::invalid(
                "internal error: deletion output failed verification",
            ));
        }
        if chosen.len() as u64 >= target {
            return Ok(DeletionOutcome {
                set: chosen,
                profile,
                k_star,
                target,
                attempts,
                met: true,
            });
        }
        if best.as_ref().map_or(true, |b| chosen.len() > b.len()) {
            best = Some(chosen);
        }
    }
    Ok(DeletionOutcome {
        set: best.expect("at least one attempt"),
        profile,
        k_star,
        target,
        attempts,
        met: false,
    })
}

/// Inside the alternating group on `n` letters: all full cycles (odd `n`)
/// or all `(n-1)`-cycles fixing the point `n` (even `n`), thinned so that
/// no kept cycle is a power of another, which makes the output pairwise
/// non-commuting with pairwise distinct squares.
pub fn anticommuting_base(n: usize) -> Result<(FiniteGroup, ElementSet)> {
    if n < 4 {
        return Err(Error::invalid("n must be at least 4"));
    }
    let group = build_group(&GroupSpec::Alternating(n))?;
    let want_len = if n % 2 == 1 { n } else { n - 1 };
    let is_candidate = |e: usize| -> bool {
        let p = group.permutation_of(e).expect("alternating backend");
        let cycles = p.cycles();
        cycles.len() == 1 && cycles[0].len() == want_len && (n % 2 == 1 || p.apply(n) == n)
    };
    let mut excluded = vec![false; group.order()];
    let mut members = Vec::new();
    for e in group.elements() {
        if excluded[e] || !is_candidate(e) {
            continue;
        }
        members.push(e);
        // exclude every power of e
        let mut x = e;
        loop {
            x = group.mul(x, e);
            if x == 0 {
                break;
            }
            excluded[x] = true;
        }
    }
    let set = ElementSet::from_indices(members);
    if !is_valid_base(&group, &set) {
        return Err(Error::invalid(
            "internal error: thinned cycle family fails the base conditions",
        ));
    }
    Ok((group, set))
}
