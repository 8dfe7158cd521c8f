//! Exact verifiers for the two Sidon-type word properties.
//!
//! A set `A` satisfies the length-`k` distinct-products property (`Sk`) when
//! equal products of two length-`k` words over `A` force the words to be
//! equal as ordered tuples. It satisfies the alternating property
//! (`SkPrime`) when every identity-valued product
//! `α₁β₁⁻¹α₂β₂⁻¹⋯αₖβₖ⁻¹` has some adjacent equality `αᵢ=βᵢ` or `βᵢ=αᵢ₊₁`;
//! index arithmetic is cyclic by default (`α_{k+1} = α₁`), with the
//! non-cyclic reading available behind [`SkPrimeIndexing::Linear`].

pub mod bounds;
pub mod search;

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, Permutation};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::hash::Hash;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SidonProperty {
    Sk,
    SkPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkPrimeIndexing {
    /// `β_k = α_1` counts as an adjacency (the default).
    Cyclic,
    /// Adjacency only inspected for `i <= k-1`.
    Linear,
}

/// Work caps for the verifiers, measured in word-enumeration steps.
#[derive(Debug, Clone, Copy)]
pub struct VerifyCaps {
    pub max_words: u64,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps {
            max_words: 100_000_000,
        }
    }
}

/// A failure witness: either two distinct equal-product words, or a
/// cyclically valid identity-product word given as `(αᵢ, βᵢ)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness<E = usize> {
    EqualWords { words: [Vec<E>; 2] },
    CyclicWord { pairs: Vec<(E, E)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport<E = usize> {
    pub property: SidonProperty,
    pub k: u32,
    pub holds: bool,
    /// For `Sk`: the maximum number of length-`k` words sharing a product.
    /// For `SkPrime`: the exact number of violating words (0 when it holds).
    pub multiplicity: u64,
    pub witness: Option<Witness<E>>,
}

// ---------------------------------------------------------------------------
// generic word machinery

trait WordOps {
    type Elem: Clone + Eq + Hash + Ord;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Size of the ambient group, when finite and known.
    fn ambient(&self) -> Option<u64>;
}

struct GroupOps<'g>(&'g FiniteGroup);

impl WordOps for GroupOps<'_> {
    type Elem = usize;
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.0.mul(*a, *b)
    }
    fn inv(&self, a: &usize) -> usize {
        self.0.inv(*a)
    }
    fn ambient(&self) -> Option<u64> {
        Some(self.0.order() as u64)
    }
}

struct PermOps;

impl WordOps for PermOps {
    type Elem = Permutation;
    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }
    fn inv(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }
    fn ambient(&self) -> Option<u64> {
        None
    }
}

fn estimate_sk_work(set_size: u64, ambient: Option<u64>, k: u32) -> u128 {
    let mut total: u128 = 0;
    let mut support: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(support.saturating_mul(set_size as u128));
        support = support.saturating_mul(set_size as u128);
        if let Some(n) = ambient {
            support = support.min(n as u128);
        }
    }
    total
}

/// Product-count tables `c_1..c_k`: `c_j[x]` is the number of length-`j`
/// words over `elems` with product `x`.
fn word_count_levels<O: WordOps>(ops: &O, elems: &[O::Elem], k: u32) -> Vec<HashMap<O::Elem, u64>> {
    let mut levels: Vec<HashMap<O::Elem, u64>> = Vec::with_capacity(k as usize);
    let mut current: HashMap<O::Elem, u64> = HashMap::new();
    for e in elems {
        *current.entry(e.clone()).or_insert(0) += 1;
    }
    levels.push(current);
    for _ in 1..k {
        let prev = levels.last().unwrap();
        let mut next: HashMap<O::Elem, u64> = HashMap::with_capacity(prev.len());
        for (p, &c) in prev.iter() {
            for e in elems {
                *next.entry(ops.mul(p, e)).or_insert(0) += c;
            }
        }
        levels.push(next);
    }
    levels
}

/// Reconstructs the lexicographically first two distinct words of length `k`
/// whose product is `target`.
fn reconstruct_equal_words<O: WordOps>(
    ops: &O,
    elems: &[O::Elem],
    levels: &[HashMap<O::Elem, u64>],
    k: u32,
    target: &O::Elem,
    identity: &O::Elem,
) -> [Vec<O::Elem>; 2] {
    fn remaining<O: WordOps>(
        levels: &[HashMap<O::Elem, u64>],
        r: usize,
        x: &O::Elem,
        identity: &O::Elem,
    ) -> u64 {
        if r == 0 {
            (x == identity) as u64
        } else {
            levels[r - 1].get(x).copied().unwrap_or(0)
        }
    }

    let mut found: Vec<Vec<O::Elem>> = Vec::new();
    let mut word: Vec<O::Elem> = Vec::with_capacity(k as usize);

    fn dfs<O: WordOps>(
        ops: &O,
        elems: &[O::Elem],
        levels: &[HashMap<O::Elem, u64>],
        k: u32,
        prefix: &O::Elem,
        target: &O::Elem,
        identity: &O::Elem,
        word: &mut Vec<O::Elem>,
        found: &mut Vec<Vec<O::Elem>>,
    ) {
        if found.len() == 2 {
            return;
        }
        if word.len() == k as usize {
            if prefix == target {
                found.push(word.clone());
            }
            return;
        }
        let r = k as usize - word.len() - 1;
        for e in elems {
            let p = ops.mul(prefix, e);
            // completions of p to target in r further letters
            let need = ops.mul(&ops.inv(&p), target);
            if remaining::<O>(levels, r, &need, identity) == 0 {
                continue;
            }
            word.push(e.clone());
            dfs(ops, elems, levels, k, &p, target, identity, word, found);
            word.pop();
            if found.len() == 2 {
                return;
            }
        }
    }

    dfs(
        ops, elems, levels, k, identity, target, identity, &mut word, &mut found,
    );
    debug_assert_eq!(found.len(), 2, "witness reconstruction must find two words");
    let second = found.pop().unwrap();
    let first = found.pop().unwrap();
    [first, second]
}

fn check_sk_generic<O: WordOps>(
    ops: &O,
    elems: &[O::Elem],
    identity: &O::Elem,
    k: u32,
    caps: &VerifyCaps,
) -> Result<VerifyReport<O::Elem>> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if elems.len() <= 1 {
        return Ok(VerifyReport {
            property: SidonProperty::Sk,
            k,
            holds: true,
            multiplicity: elems.len() as u64,
            witness: None,
        });
    }
    let work = estimate_sk_work(elems.len() as u64, ops.ambient(), k);
    if work > caps.max_words as u128 {
        return Err(Error::WorkCap {
            needed: work,
            cap: caps.max_words,
        });
    }
    let levels = word_count_levels(ops, elems, k);
    let last = levels.last().unwrap();
    let multiplicity = last.values().copied().max().unwrap_or(0);
    let holds = multiplicity <= 1;
    let witness = if holds {
        None
    } else {
        let target = last
            .iter()
            .filter(|(_, &c)| c >= 2)
            .map(|(x, _)| x)
            .min()
            .cloned()
            .expect("some product repeats");
        Some(Witness::EqualWords {
            words: reconstruct_equal_words(ops, elems, &levels, k, &target, identity),
        })
    };
    Ok(VerifyReport {
        property: SidonProperty::Sk,
        k,
        holds,
        multiplicity,
        witness,
    })
}

// ---------------------------------------------------------------------------
// public verifiers

/// Checks the distinct-products property of `A` in `G` for word length `k`.
pub fn check_sk(
    group: &FiniteGroup,
    set: &ElementSet,
    k: u32,
    caps: &VerifyCaps,
) -> Result<VerifyReport> {
    let ops = GroupOps(group);
    for &a in set.members() {
        if a >= group.order() {
            return Err(Error::IndexRange {
                index: a,
                order: group.order(),
            });
        }
    }
    check_sk_generic(&ops, set.members(), &0, k, caps)
}

/// The exact maximum over `μ` of the number of length-`k` words over `A`
/// with product `μ`.
pub fn sk_multiplicity(
    group: &FiniteGroup,
    set: &ElementSet,
    k: u32,
    caps: &VerifyCaps,
) -> Result<u64> {
    Ok(check_sk(group, set, k, caps)?.multiplicity)
}

/// Checks the distinct-products property of a list of permutations (all of
/// the same degree) inside the symmetric group on that many letters.
pub fn check_sk_perms(
    perms: &[Permutation],
    k: u32,
    caps: &VerifyCaps,
) -> Result<VerifyReport<Permutation>> {
    let mut elems: Vec<Permutation> = perms.to_vec();
    elems.sort();
    elems.dedup();
    if elems.len() != perms.len() {
        return Err(Error::invalid("duplicate permutations in the set"));
    }
    if let Some(first) = elems.first() {
        let n = first.degree();
        if elems.iter().any(|p| p.degree() != n) {
            return Err(Error::invalid("permutations have mixed degrees"));
        }
        let identity = Permutation::identity(n);
        check_sk_generic(&PermOps, &elems, &identity, k, caps)
    } else {
        Ok(VerifyReport {
            property: SidonProperty::Sk,
            k,
            holds: true,
            multiplicity: 0,
            witness: None,
        })
    }
}

/// Checks the cyclic alternating-word property.
pub fn check_sk_prime(
    group: &FiniteGroup,
    set: &ElementSet,
    k: u32,
    caps: &VerifyCaps,
) -> Result<VerifyReport> {
    check_sk_prime_with(group, set, k, caps, SkPrimeIndexing::Cyclic)
}

/// Checks the alternating-word property under the chosen index convention.
pub fn check_sk_prime_with(
    group: &FiniteGroup,
    set: &ElementSet,
    k: u32,
    caps: &VerifyCaps,
    indexing: SkPrimeIndexing,
) -> Result<VerifyReport> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    for &a in set.members() {
        if a >= group.order() {
            return Err(Error::IndexRange {
                index: a,
                order: group.order(),
            });
        }
    }
    let a = set.members();
    if a.len() <= 1 {
        return Ok(VerifyReport {
            property: SidonProperty::SkPrime,
            k,
            holds: true,
            multiplicity: 0,
            witness: None,
        });
    }
    let n = group.order();
    let s = a.len();
    let work = (s as u128)
        .saturating_mul(k as u128)
        .saturating_mul(
            (n as u128)
                .saturating_mul(s as u128)
                .min((s as u128).saturating_pow(2 * k)),
        )
        .saturating_mul((s as u128).saturating_pow(2));
    if work > caps.max_words as u128 {
        return Err(Error::WorkCap {
            needed: work,
            cap: caps.max_words,
        });
    }
    let inv: Vec<usize> = a.iter().map(|&x| group.inv(x)).collect();

    // Count all violating words by a layered walk over states
    // (prefix product, index of the last β); record parents for the witness.
    let mut total_violations: u64 = 0;
    let mut witness: Option<Witness> = None;

    for (a1_pos, &a1) in a.iter().enumerate() {
        // counts[state] and parent[layer][state]
        let state = |p: usize, bpos: usize| p * s + bpos;
        let mut counts: Vec<u64> = vec![0; n * s];
        let mut parents: Vec<Vec<Option<(usize, usize)>>> = Vec::with_capacity(k as usize);
        let mut first_layer: Vec<Option<(usize, usize)>> = vec![None; n * s];
        for (bpos, &b) in a.iter().enumerate() {
            if b == a1 {
                continue;
            }
            let p = group.mul(a1, inv[bpos]);
            counts[state(p, bpos)] += 1;
            // the layer-1 parent records (α, β) directly
            if first_layer[state(p, bpos)].is_none() {
                first_layer[state(p, bpos)] = Some((a1_pos, bpos));
            }
        }
        parents.push(first_layer);

        for _layer in 1..k {
            let mut next_counts: Vec<u64> = vec![0; n * s];
            let mut next_parent: Vec<Option<(usize, usize)>> = vec![None; n * s];
            for st in 0..n * s {
                if counts[st] == 0 {
                    continue;
                }
                let c = counts[st];
                let p = st / s;
                let bprev = a[st % s];
                for (apos, &ai) in a.iter().enumerate() {
                    if ai == bprev {
                        continue;
                    }
                    let mid = group.mul(p, ai);
                    for (bpos, &bi) in a.iter().enumerate() {
                        if bi == ai {
                            continue;
                        }
                        let p2 = group.mul(mid, inv[bpos]);
                        let st2 = state(p2, bpos);
                        next_counts[st2] += c;
                        if next_parent[st2].is_none() {
                            next_parent[st2] = Some((st, apos * s + bpos));
                        }
                    }
                }
            }
            counts = next_counts;
            parents.push(next_parent);
        }

        for (bpos, &b) in a.iter().enumerate() {
            if indexing == SkPrimeIndexing::Cyclic && b == a1 {
                continue;
            }
            let st = state(0, bpos); // identity product
            if counts[st] > 0 {
                total_violations += counts[st];
                if witness.is_none() {
                    // walk parents back to layer 0
                    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k as usize);
                    let mut cur = st;
                    for layer in (1..k as usize).rev() {
                        let (prev, step) = parents[layer][cur].expect("parent recorded");
                        pairs.push((a[step / s], a[step % s]));
                        cur = prev;
                    }
                    let (a1p, b1p) = parents[0][cur].expect("layer-1 parent");
                    pairs.push((a[a1p], a[b1p]));
                    pairs.reverse();
                    witness = Some(Witness::CyclicWord { pairs });
                }
            }
        }
    }

    Ok(VerifyReport {
        property: SidonProperty::SkPrime,
        k,
        holds: total_violations == 0,
        multiplicity: total_violations,
        witness,
    })
}

/// Existence-only violation test used by the exhaustive searches: no
/// counting, no witness, early exit. `members` must be sorted and distinct.
pub(crate) fn sk_prime_violation_exists(
    group: &FiniteGroup,
    members: &[usize],
    k: u32,
    indexing: SkPrimeIndexing,
    scratch: &mut Vec<u64>,
) -> bool {
    let s = members.len();
    if s <= 1 {
        return false;
    }
    let n = group.order();
    let inv: Vec<usize> = members.iter().map(|&x| group.inv(x)).collect();
    scratch.clear();
    scratch.resize(2 * n * s, 0);
    let (cur, next) = scratch.split_at_mut(n * s);
    for (a1_pos, &a1) in members.iter().enumerate() {
        cur.iter_mut().for_each(|c| *c = 0);
        for (bpos, &b) in members.iter().enumerate() {
            if b != a1 {
                cur[group.mul(a1, inv[bpos]) * s + bpos] = 1;
            }
        }
        for _ in 1..k {
            next.iter_mut().for_each(|c| *c = 0);
            for st in 0..n * s {
                if cur[st] == 0 {
                    continue;
                }
                let p = st / s;
                let bprev = members[st % s];
                for (apos, &ai) in members.iter().enumerate() {
                    if ai == bprev {
                        continue;
                    }
                    let mid = group.mul(p, ai);
                    for bpos in 0..s {
                        if bpos == apos {
                            continue;
                        }
                        next[group.mul(mid, inv[bpos]) * s + bpos] = 1;
                    }
                }
            }
            cur.copy_from_slice(next);
        }
        for bpos in 0..s {
            if indexing == SkPrimeIndexing::Cyclic && bpos == a1_pos {
                continue;
            }
            if cur[bpos] != 0 {
                // product index 0 = identity
                return true;
            }
        }
    }
    false
}

/// Independently re-checks a witness against the set it came from.
pub fn witness_is_valid(
    group: &FiniteGroup,
    set: &ElementSet,
    report: &VerifyReport,
    indexing: SkPrimeIndexing,
) -> bool {
    match &report.witness {
        None => true,
        Some(Witness::EqualWords { words: [w1, w2] }) => {
            if w1 == w2 || w1.len() != report.k as usize || w2.len() != report.k as usize {
                return false;
            }
            if !w1.iter().chain(w2.iter()).all(|&e| set.contains(e)) {
                return false;
            }
            let prod = |w: &[usize]| w.iter().fold(0usize, |acc, &e| group.mul(acc, e));
            prod(w1) == prod(w2)
        }
        Some(Witness::CyclicWord { pairs }) => {
            if pairs.len() != report.k as usize {
                return false;
            }
            if !pairs
                .iter()
                .all(|&(a, b)| set.contains(a) && set.contains(b))
            {
                return false;
            }
            let mut p = 0usize;
            for &(a, b) in pairs {
                p = group.mul(p, a);
                p = group.mul(p, group.inv(b));
            }
            if p != 0 {
                return false;
            }
            let k = pairs.len();
            for i in 0..k {
                if pairs[i].0 == pairs[i].1 {
                    return false;
                }
                let next = i + 1;
                if next < k && pairs[i].1 == pairs[next].0 {
                    return false;
                }
                if next == k && indexing == SkPrimeIndexing::Cyclic && pairs[i].1 == pairs[0].0 {
                    return false;
                }
            }
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn g(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    fn set(group: &FiniteGroup, elems: &[usize]) -> ElementSet {
        ElementSet::new(group, elems.iter().copied()).unwrap()
    }

    #[test]
    fn abelian_pairs_violate_sk() {
        let z5 = g("Z:5");
        let a = set(&z5, &[0, 1]);
        let r = check_sk(&z5, &a, 2, &VerifyCaps::default()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.multiplicity, 2);
        match r.witness.as_ref().unwrap() {
            Witness::EqualWords { words } => {
                assert_eq!(words[0], vec![0, 1]);
                assert_eq!(words[1], vec![1, 0]);
            }
            _ => panic!("expected word witness"),
        }
        assert!(witness_is_valid(&z5, &a, &r, SkPrimeIndexing::Cyclic));
    }

    #[test]
    fn s3_pair_is_s2() {
        let s3 = g("S:3");
        let a = set(
            &s3,
            &[
                s3.parse_element("(1 2 3)").unwrap(),
                s3.parse_element("(1 2)").unwrap(),
            ],
        );
        let r = check_sk(&s3, &a, 2, &VerifyCaps::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn degenerate_sets() {
        let z4 = g("Z:4");
        let empty = ElementSet::empty();
        let r = check_sk(&z4, &empty, 3, &VerifyCaps::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.multiplicity, 0);
        let single = set(&z4, &[2]);
        let r = check_sk(&z4, &single, 5, &VerifyCaps::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.multiplicity, 1);
        let r = check_sk_prime(&z4, &single, 2, &VerifyCaps::default()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn whole_z4_has_multiplicity_4() {
        let z4 = g("Z:4");
        let a = set(&z4, &[0, 1, 2, 3]);
        assert_eq!(
            sk_multiplicity(&z4, &a, 2, &VerifyCaps::default()).unwrap(),
            4
        );
    }

    #[test]
    fn sk_prime_order_four_difference_is_fine() {
        let z4 = g("Z:4");
        let a = set(&z4, &[0, 1]);
        let r = check_sk_prime(&z4, &a, 2, &VerifyCaps::default()).unwrap();
        assert!(r.holds, "difference of order 4 does not violate");
    }

    #[test]
    fn sk_prime_involution_difference_violates() {
        let v4 = g("prod(Z:2,Z:2)");
        // elements (0,0) and (1,0) have indices 0 and 2
        let a = set(&v4, &[0, 2]);
        let r = check_sk_prime(&v4, &a, 2, &VerifyCaps::default()).unwrap();
        assert!(!r.holds);
        assert!(witness_is_valid(&v4, &a, &r, SkPrimeIndexing::Cyclic));
        // the only violating pattern is ab ab with both pairs (α, β) = (x, y)
        match r.witness.unwrap() {
            Witness::CyclicWord { pairs } => assert_eq!(pairs.len(), 2),
            _ => panic!("expected cyclic witness"),
        }
    }

    #[test]
    fn sidon_set_in_z7_is_s2_prime() {
        let z7 = g("Z:7");
        let a = set(&z7, &[0, 1, 3]);
        assert!(
            check_sk_prime(&z7, &a, 2, &VerifyCaps::default())
                .unwrap()
                .holds
        );
        let b = set(&z7, &[0, 1, 2]);
        assert!(
            !check_sk_prime(&z7, &b, 2, &VerifyCaps::default())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn violation_count_matches_naive_enumeration() {
        // count valid identity-product words by raw odometer enumeration
        fn naive_count(g: &FiniteGroup, members: &[usize], k: usize) -> u64 {
            let s = members.len();
            let mut odo = vec![0usize; 2 * k];
            let mut count = 0u64;
            loop {
                let mut valid = true;
                for i in 0..k {
                    if odo[2 * i] == odo[2 * i + 1] || odo[2 * i + 1] == odo[(2 * i + 2) % (2 * k)]
                    {
                        valid = false;
                        break;
                    }
                }
                if valid {
                    let mut p = 0usize;
                    for i in 0..k {
                        p = g.mul(p, members[odo[2 * i]]);
                        p = g.mul(p, g.inv(members[odo[2 * i + 1]]));
                    }
                    if p == 0 {
                        count += 1;
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == 2 * k {
                        return count;
                    }
                    odo[pos] += 1;
                    if odo[pos] < s {
                        break;
                    }
                    odo[pos] = 0;
                    pos += 1;
                }
            }
        }
        for (spec, members, k) in [
            ("Z:4", vec![0usize, 1, 2, 3], 2u32),
            ("Z:4", vec![0, 1, 2], 3),
            ("prod(Z:2,Z:2)", vec![0, 2], 2),
            ("S:3", vec![0, 1, 2, 3], 2),
            ("Z:9", vec![0, 1, 2, 4], 3),
        ] {
            let group = g(spec);
            let a = set(&group, &members);
            let rep = check_sk_prime(&group, &a, k, &VerifyCaps::default()).unwrap();
            assert_eq!(
                rep.multiplicity,
                naive_count(&group, a.members(), k as usize),
                "{spec} {members:?} k={k}"
            );
        }
    }

    #[test]
    fn cyclic_vs_linear_indexing() {
        // the linear reading skips the wrap adjacency, so it admits every
        // cyclic violation and possibly more
        let z9 = g("Z:9");
        let a = set(&z9, &[0, 1, 2]);
        let cyc = check_sk_prime_with(&z9, &a, 2, &VerifyCaps::default(), SkPrimeIndexing::Cyclic)
            .unwrap();
        let lin = check_sk_prime_with(&z9, &a, 2, &VerifyCaps::default(), SkPrimeIndexing::Linear)
            .unwrap();
        assert!(lin.multiplicity >= cyc.multiplicity);
    }

    #[test]
    fn perm_set_check() {
        let perms = vec![
            Permutation::from_cycles(3, "(1 2 3)").unwrap(),
            Permutation::from_cycles(3, "(1 2)").unwrap(),
        ];
        let r = check_sk_perms(&perms, 2, &VerifyCaps::default()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn work_cap_is_enforced() {
        let z5 = g("Z:5");
        let a = set(&z5, &[0, 1, 2, 3, 4]);
        let caps = VerifyCaps { max_words: 4 };
        assert!(matches!(
            check_sk(&z5, &a, 3, &caps),
            Err(Error::WorkCap { .. })
        ));
    }
}
