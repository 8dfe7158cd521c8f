//! Constructive procedures: conjugation recipes for `S_2[g]`-sets in
//! product groups, permanent-counted permutation lifts, Hamilton-cycle
//! lifts, deletion-method probabilistic constructions, and cyclic-shift
//! hash families.

pub mod hamilton;
pub mod hash_family;
pub mod permanent;
pub mod probabilistic;

use crate::error::{Error, Result};
use crate::group::{build_group, ElementSet, FiniteGroup, GroupSpec, Permutation};
use crate::sidon::{sk_multiplicity, VerifyCaps};
use std::collections::HashMap;

/// A set `{(α, απ) : α ∈ A}` in the product group `Γ×Γ`, carrying the
/// multiplicity bound `claimed_g` certified by its construction.
#[derive(Debug, Clone)]
pub struct PairSet {
    /// The product group `Γ×Γ` the pairs live in.
    pub group: FiniteGroup,
    /// Component element indices of each pair.
    pub members: Vec<(usize, usize)>,
    pub claimed_g: u64,
}

impl PairSet {
    /// The members as dense indices of the product group.
    pub fn flattened(&self) -> ElementSet {
        ElementSet::from_indices(
            self.members
                .iter()
                .map(|&(l, r)| self.group.join_pair(l, r).expect("product group")),
        )
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Exact word-multiplicity at `k = 2`, for checking `claimed_g`.
    pub fn verified_multiplicity(&self, caps: &VerifyCaps) -> Result<u64> {
        sk_multiplicity(&self.group, &self.flattened(), 2, caps)
    }
}

/// Pairs `(α, απ)` over `α ∈ A`. The multiplicity bound is the exact
/// conjugation census `max_μ #{α ∈ A : απα⁻¹ = μ}`: fixing a target pair
/// `(μ₁, μ₂)`, the first coordinate gives `β = α⁻¹μ₁` and the second
/// forces `απα⁻¹ = μ₂π⁻¹μ₁⁻¹`, so at most that many words exist.
pub fn conjugacy_recipe(group: &FiniteGroup, pi: usize, set: &ElementSet) -> Result<PairSet> {
    if set.is_empty() {
        return Err(Error::invalid("the base set must be nonempty"));
    }
    if pi >= group.order() {
        return Err(Error::IndexRange {
            index: pi,
            order: group.order(),
        });
    }
    let mut census: HashMap<usize, u64> = HashMap::new();
    for &alpha in set.members() {
        *census.entry(group.conjugate(alpha, pi)).or_insert(0) += 1;
    }
    let claimed_g = census.values().copied().max().unwrap_or(0);
    let members = set
        .members()
        .iter()
        .map(|&alpha| (alpha, group.mul(alpha, pi)))
        .collect();
    Ok(PairSet {
        group: FiniteGroup::direct_product(group.clone(), group.clone()),
        members,
        claimed_g,
    })
}

/// The canonical `S_n × S_n` (or `A_n × A_n`) construction.
///
/// For odd `n` the conjugating element is the full cycle `(1 2 … n)`; for
/// even `n` it is the `(n-1)`-cycle `(1 2 … n-1)`, which moves the point 1.
/// The base set is the stabilizer of 1, or the whole group when `full` is
/// set. Sizes are `(n-1)!`, `n!`, `(n-1)!/2`, `n!/2`, and the certified
/// multiplicities are 1 for the stabilizer variants and `n` (odd) or `n-1`
/// (even) for the full variants; for even `n` the count is `n-1` because
/// the conjugating cycle's fixed point pins one value of `α`.
pub fn sn_cross(n: usize, full: bool, alternating: bool) -> Result<PairSet> {
    if n < 3 {
        return Err(Error::invalid("n must be at least 3"));
    }
    let spec = if alternating {
        GroupSpec::Alternating(n)
    } else {
        GroupSpec::Symmetric(n)
    };
    let group = build_group(&spec)?;
    let cycle_len = if n % 2 == 1 { n } else { n - 1 };
    let mut images: Vec<usize> = (1..=n).collect();
    for (i, img) in images.iter_mut().enumerate().take(cycle_len) {
        *img = (i + 1) % cycle_len + 1;
    }
    let pi_perm = Permutation::from_one_line(&images)?;
    let pi = group.index_of_permutation(&pi_perm)?;
    let set = if full {
        ElementSet::from_indices(group.elements())
    } else {
        crate::group::point_stabilizer_subset(n, alternating, 1)?
    };
    conjugacy_recipe(&group, pi, &set)
}

/// Pairs built from a whole conjugacy class: `A` is the class of `a`, the
/// conjugating element is `a` itself, and orbit-stabilizer certifies the
/// multiplicity bound `|Γ| / |A|`.
pub fn class_recipe(group: &FiniteGroup, a: usize) -> Result<PairSet> {
    let class = group.conjugacy_class(a)?;
    let m = class.len();
    let claimed_g = (group.order() / m) as u64;
    let members = class
        .members()
        .iter()
        .map(|&alpha| (alpha, group.mul(alpha, a)))
        .collect();
    Ok(PairSet {
        group: FiniteGroup::direct_product(group.clone(), group.clone()),
        members,
        claimed_g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sidon::check_sk;

    fn g(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn stabilizer_recipe_in_s3() {
        let s3 = g("S:3");
        let pi = s3.parse_element("(1 2 3)").unwrap();
        let stab = crate::group::point_stabilizer_subset(3, false, 1).unwrap();
        let ps = conjugacy_recipe(&s3, pi, &stab).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps.claimed_g, 1);
        let rep = check_sk(&ps.group, &ps.flattened(), 2, &VerifyCaps::default()).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn full_recipe_in_s3() {
        let s3 = g("S:3");
        let pi = s3.parse_element("(1 2 3)").unwrap();
        let all = ElementSet::from_indices(s3.elements());
        let ps = conjugacy_recipe(&s3, pi, &all).unwrap();
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.claimed_g, 3);
        assert!(ps.verified_multiplicity(&VerifyCaps::default()).unwrap() <= 3);
    }

    #[test]
    fn singleton_recipe() {
        let s3 = g("S:3");
        let pi = s3.parse_element("(1 2 3)").unwrap();
        let single = ElementSet::new(&s3, [s3.parse_element("(1 2)").unwrap()]).unwrap();
        let ps = conjugacy_recipe(&s3, pi, &single).unwrap();
        assert_eq!(ps.claimed_g, 1);
    }

    #[test]
    fn sn_cross_sizes_and_bounds() {
        let cases = [
            (3, false, false, 2, 1),
            (3, true, false, 6, 3),
            (4, false, false, 6, 1),
            (4, true, false, 24, 3),
            (4, false, true, 3, 1),
            (4, true, true, 12, 3),
        ];
        for (n, full, alternating, size, gbound) in cases {
            let ps = sn_cross(n, full, alternating).unwrap();
            assert_eq!(
                ps.len(),
                size,
                "size for n={n} full={full} alt={alternating}"
            );
            assert_eq!(
                ps.claimed_g, gbound,
                "g for n={n} full={full} alt={alternating}"
            );
            let mult = ps.verified_multiplicity(&VerifyCaps::default()).unwrap();
            assert!(mult <= ps.claimed_g);
        }
    }

    #[test]
    fn sn_cross_rejects_small_n() {
        assert!(sn_cross(2, false, false).is_err());
    }

    #[test]
    fn class_recipe_transposition() {
        let s3 = g("S:3");
        let a = s3.parse_element("(1 2)").unwrap();
        let ps = class_recipe(&s3, a).unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps.claimed_g, 2);
        assert!(ps.verified_multiplicity(&VerifyCaps::default()).unwrap() <= 2);
    }

    #[test]
    fn class_recipe_identity() {
        let s3 = g("S:3");
        let ps = class_recipe(&s3, 0).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps.claimed_g, 6);
    }

    #[test]
    fn class_recipe_four_cycle() {
        let s4 = g("S:4");
        let a = s4.parse_element("(1 2 3 4)").unwrap();
        let ps = class_recipe(&s4, a).unwrap();
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.claimed_g, 4);
        assert!(ps.verified_multiplicity(&VerifyCaps::default()).unwrap() <= 4);
    }
}
