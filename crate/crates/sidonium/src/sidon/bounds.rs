//! Integer upper bounds on the maximum sizes of Sidon-type sets, derived
//! from the group's order, its element-order census, and its abelian
//! subgroup structure.

use super::search::integer_kth_root;
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    /// `⌊|Γ|^{1/k}⌋` from injectivity of length-`k` products.
    Trivial,
    /// `⌊(g|Γ|)^{1/k}⌋`, the multiplicity-`g` variant.
    TrivialG,
    /// `⌊|Γ|^{1/k}⌋ - 1`: the trivial bound is never attained for `|Γ| > 1`.
    DimovskiStrict,
    /// `1 + ⌊(|Γ|/2)^{1/k}⌋` when an abelian index-2 subgroup exists.
    Index2Abelian,
    /// `k = 2` with normal abelian `H`, `Γ/H ≅ Z_2^d`: from `Σᵢ xᵢ² ≤ |H|`.
    Z2dQuotient,
    /// `h(k-1)` for an abelian subgroup of index `h` (bounds `M_k'`, `k ≥ 3`).
    SkPrimeSubgroup,
    /// `m_k + n_k`: distinct small orders plus elements of order above `k`.
    OrderCensus,
}

/// Which maximum the entry bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTarget {
    Sk,
    SkG,
    SkPrime,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: BoundName,
    pub target: BoundTarget,
    pub applicable: bool,
    pub value: u64,
    pub inputs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: u32,
    pub g: u64,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, name: BoundName) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// All subgroups of a group of order at most 64, as sorted element lists.
/// Breadth-first closure over single-generator extensions.
pub fn all_subgroups(group: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let n = group.order();
    if n > 64 {
        return Err(Error::invalid(format!(
            "exhaustive subgroup search is limited to order 64, got {n}"
        )));
    }
    let closure = |mask: u64| -> u64 {
        let mut elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut m = mask;
        let mut frontier = elems.clone();
        while let Some(x) = frontier.pop() {
            let mut new = Vec::new();
            for &y in &elems {
                for p in [group.mul(x, y), group.mul(y, x)] {
                    if m >> p & 1 == 0 {
                        m |= 1 << p;
                        new.push(p);
                    }
                }
            }
            for p in new {
                elems.push(p);
                frontier.push(p);
            }
        }
        m
    };

    let identity_mask = 1u64;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut tried: HashSet<u64> = HashSet::new();
    let mut queue = vec![identity_mask];
    seen.insert(identity_mask);
    while let Some(mask) = queue.pop() {
        for x in 1..n {
            if mask >> x & 1 == 1 {
                continue;
            }
            let key = mask | (1 << x);
            if !tried.insert(key) {
                continue;
            }
            let cl = closure(key);
            if seen.insert(cl) {
                queue.push(cl);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen
        .into_iter()
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    Ok(out)
}

fn is_subgroup(group: &FiniteGroup, members: &[usize]) -> bool {
    if !members.contains(&0) {
        return false;
    }
    let inside: HashSet<usize> = members.iter().copied().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| inside.contains(&group.mul(a, b))))
}

fn is_abelian_subset(group: &FiniteGroup, members: &[usize]) -> bool {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if group.mul(a, b) != group.mul(b, a) {
                return false;
            }
        }
    }
    true
}

fn is_normal(group: &FiniteGroup, members: &[usize]) -> bool {
    let inside: HashSet<usize> = members.iter().copied().collect();
    group.elements().all(|g| {
        members
            .iter()
            .all(|&h| inside.contains(&group.conjugate(g, h)))
    })
}

/// Evaluates every applicable upper bound for word length `k` and
/// multiplicity `g` (use `g = 1` for plain distinct-product sets).
///
/// When `known_subgroups` is `None`, subgroups are enumerated exhaustively
/// for groups of order at most 64; larger groups simply mark the
/// subgroup-based bounds inapplicable.
pub fn upper_bound_report(
    group: &FiniteGroup,
    k: u32,
    g: u64,
    known_subgroups: Option<&[ElementSet]>,
) -> Result<BoundReport> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if g < 1 {
        return Err(Error::invalid("g must be at least 1"));
    }
    let n = group.order() as u64;
    let mut entries = Vec::new();

    let trivial = integer_kth_root(n as u128, k);
    entries.push(BoundEntry {
        name: BoundName::Trivial,
        target: BoundTarget::Sk,
        applicable: true,
        value: trivial,
        inputs: format!("|G|={n}"),
    });
    entries.push(BoundEntry {
        name: BoundName::TrivialG,
        target: BoundTarget::SkG,
        applicable: true,
        value: integer_kth_root(g as u128 * n as u128, k),
        inputs: format!("|G|={n}, g={g}"),
    });

    let perfect_power = trivial.checked_pow(k).map(|p| p == n).unwrap_or(false);
    entries.push(BoundEntry {
        name: BoundName::DimovskiStrict,
        target: BoundTarget::Sk,
        applicable: n > 1 && perfect_power,
        value: if n > 1 && perfect_power {
            trivial - 1
        } else {
            trivial
        },
        inputs: format!(
            "|G|={n} is {}a perfect {k}-th power",
            if perfect_power { "" } else { "not " }
        ),
    });

    // order census
    if n > 1 {
        let orders: Vec<usize> = group
            .elements()
            .map(|a| group.element_order(a).expect("valid index"))
            .collect();
        let m_k = (2..=k as usize)
            .filter(|&l| orders.iter().any(|&o| o == l))
            .count() as u64;
        let n_k = orders.iter().filter(|&&o| o > k as usize).count() as u64;
        entries.push(BoundEntry {
            name: BoundName::OrderCensus,
            target: BoundTarget::Sk,
            applicable: true,
            value: m_k + n_k,
            inputs: format!("m_k={m_k}, n_k={n_k}"),
        });
    } else {
        entries.push(BoundEntry {
            name: BoundName::OrderCensus,
            target: BoundTarget::Sk,
            applicable: false,
            value: 0,
            inputs: "|G|=1".to_string(),
        });
    }

    // subgroup-based bounds
    let subgroups: Option<Vec<Vec<usize>>> = match known_subgroups {
        Some(list) => {
            let mut v = Vec::with_capacity(list.len());
            for s in list {
                if !is_subgroup(group, s.members()) {
                    return Err(Error::invalid("a provided set is not a subgroup"));
                }
                v.push(s.members().to_vec());
            }
            Some(v)
        }
        None if group.order() <= 64 => Some(all_subgroups(group)?),
        None => None,
    };

    let mut index2 = BoundEntry {
        name: BoundName::Index2Abelian,
        target: BoundTarget::Sk,
        applicable: false,
        value: 0,
        inputs: "no abelian subgroup of index 2 found".to_string(),
    };
    let mut z2d = BoundEntry {
        name: BoundName::Z2dQuotient,
        target: BoundTarget::Sk,
        applicable: false,
        value: 0,
        inputs: if k == 2 {
            "no qualifying normal abelian subgroup found".to_string()
        } else {
            "k must be 2".to_string()
        },
    };
    let mut skprime = BoundEntry {
        name: BoundName::SkPrimeSubgroup,
        target: BoundTarget::SkPrime,
        applicable: false,
        value: 0,
        inputs: if k >= 3 {
            "no abelian subgroup list available".to_string()
        } else {
            "k must be at least 3".to_string()
        },
    };

    if let Some(subs) = &subgroups {
        for members in subs {
            if !is_abelian_subset(group, members) {
                continue;
            }
            let h = n / members.len() as u64;

            if h == 2 {
                let value = 1 + integer_kth_root((n / 2) as u128, k);
                if !index2.applicable || value < index2.value {
                    index2 = BoundEntry {
                        name: BoundName::Index2Abelian,
                        target: BoundTarget::Sk,
                        applicable: true,
                        value,
                        inputs: format!("abelian subgroup of order {}", members.len()),
                    };
                }
            }

            if k >= 3 {
                let value = h * (k as u64 - 1);
                if !skprime.applicable || value < skprime.value {
                    skprime = BoundEntry {
                        name: BoundName::SkPrimeSubgroup,
                        target: BoundTarget::SkPrime,
                        applicable: true,
                        value,
                        inputs: format!("abelian subgroup of index {h}"),
                    };
                }
            }

            if k == 2 && is_normal(group, members) {
                let index = h;
                // quotient is elementary abelian of exponent 2 iff every
                // square lands in the subgroup and the index is a power of 2
                if index > 1 && index.is_power_of_two() {
                    let inside: HashSet<usize> = members.iter().copied().collect();
                    if group.elements().all(|x| inside.contains(&group.mul(x, x))) {
                        let parts = index; // 2^d cosets
                        let hsize = members.len() as u64;
                        let b0 = isqrt((parts - 1) * hsize);
                        let b1 = 1 + isqrt((parts - 1) * (hsize - 1));
                        let value = b0.max(b1);
                        if !z2d.applicable || value < z2d.value {
                            z2d = BoundEntry {
                                name: BoundName::Z2dQuotient,
                                target: BoundTarget::Sk,
                                applicable: true,
                                value,
                                inputs: format!(
                                    "normal abelian subgroup of order {hsize}, quotient 2^{}",
                                    index.trailing_zeros()
                                ),
                            };
                        }
                    }
                }
            }
        }
    }

    entries.push(index2);
    entries.push(z2d);
    entries.push(skprime);
    Ok(BoundReport { k, g, entries })
}

fn isqrt(x: u64) -> u64 {
    integer_kth_root(x as u128, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn g(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn z6_census_bound() {
        let z6 = g("Z:6");
        let r = upper_bound_report(&z6, 2, 1, None).unwrap();
        let census = r.get(BoundName::OrderCensus).unwrap();
        assert!(census.applicable);
        assert_eq!(census.value, 5); // m_2 = 1, n_2 = 4
        assert_eq!(r.get(BoundName::Trivial).unwrap().value, 2);
    }

    #[test]
    fn klein_four_dimovski() {
        let v4 = g("prod(Z:2,Z:2)");
        let r = upper_bound_report(&v4, 2, 1, None).unwrap();
        assert_eq!(r.get(BoundName::Trivial).unwrap().value, 2);
        let d = r.get(BoundName::DimovskiStrict).unwrap();
        assert!(d.applicable);
        assert_eq!(d.value, 1);
    }

    #[test]
    fn s4_skprime_subgroup_bound() {
        let s4 = g("S:4");
        let r = upper_bound_report(&s4, 3, 1, None).unwrap();
        let e = r.get(BoundName::SkPrimeSubgroup).unwrap();
        assert!(e.applicable);
        // the largest abelian subgroups of S4 have order 4, index 6
        assert_eq!(e.value, 12);
    }

    #[test]
    fn s3_subgroup_count() {
        // S3 has 6 subgroups: 1, three <transposition>, <3-cycle>, S3
        let subs = all_subgroups(&g("S:3")).unwrap();
        assert_eq!(subs.len(), 6);
    }

    #[test]
    fn known_subgroups_are_validated_and_used() {
        let s4 = g("S:4");
        // the Klein four-group inside S:4
        let v4: Vec<usize> = {
            let e = 0;
            let a = s4.parse_element("(1 2)(3 4)").unwrap();
            let b = s4.parse_element("(1 3)(2 4)").unwrap();
            let c = s4.parse_element("(1 4)(2 3)").unwrap();
            vec![e, a, b, c]
        };
        let set = ElementSet::new(&s4, v4).unwrap();
        let r = upper_bound_report(&s4, 3, 1, Some(std::slice::from_ref(&set))).unwrap();
        let e = r.get(BoundName::SkPrimeSubgroup).unwrap();
        assert!(e.applicable);
        assert_eq!(e.value, 12); // index 6, k - 1 = 2

        // a non-subgroup is rejected
        let not_subgroup = ElementSet::new(&s4, [0, 1, 2]).unwrap();
        assert!(upper_bound_report(&s4, 3, 1, Some(std::slice::from_ref(&not_subgroup))).is_err());
    }

    #[test]
    fn index2_bound_for_s3() {
        let s3 = g("S:3");
        let r = upper_bound_report(&s3, 2, 1, None).unwrap();
        let e = r.get(BoundName::Index2Abelian).unwrap();
        assert!(e.applicable); // A3 is abelian of index 2
        assert_eq!(e.value, 1 + 1); // 1 + floor(sqrt(3))
    }
}
