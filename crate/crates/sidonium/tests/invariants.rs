//! Structural invariants: group axioms across every constructed backend,
//! agreement between the word-based and graph-based views of the Sidon
//! properties, and closure properties of the constructions.

use sidonium::construct::class_recipe;
use sidonium::construct::permanent::{cayley_matrix, permanent_lift, ryser_permanent};
use sidonium::digraph::cayley_digraph;
use sidonium::digraph::glm::glm;
use sidonium::digraph::patterns::{find_cll, is_fk_free};
use sidonium::digraph::undirected::bipartite_cayley;
use sidonium::group::catalog::small_group_catalog;
use sidonium::group::perm::factorial;
use sidonium::group::{build_group, ElementSet, FiniteGroup, GroupSpec, Permutation};
use sidonium::sidon::search::{max_sk, max_sk_prime, SearchBudget};
use sidonium::sidon::{check_sk, check_sk_prime, VerifyCaps};

fn group(spec: &str) -> FiniteGroup {
    build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
}

fn caps() -> VerifyCaps {
    VerifyCaps::default()
}

/// A deterministic xorshift stream for sampled checks.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn axiom_corpus() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = small_group_catalog(16)
        .unwrap()
        .into_iter()
        .map(|(_, g)| g)
        .collect();
    for spec in [
        "S:4",
        "A:4",
        "A:5",
        "os:3,2",
        "os:5,2",
        "prod(S:3,Z:2)",
        "prod(Z:6,Z:8)",
    ] {
        groups.push(group(spec));
    }
    groups
}

#[test]
fn group_axioms_exhaustive_to_order_64() {
    for g in axiom_corpus() {
        let n = g.order();
        if n > 64 {
            continue;
        }
        for a in 0..n {
            assert_eq!(g.mul(0, a), a, "{}", g.label());
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(g.inv(a), a), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(
                        g.mul(g.mul(a, b), c),
                        g.mul(a, g.mul(b, c)),
                        "associativity in {}",
                        g.label()
                    );
                }
            }
        }
    }
}

#[test]
fn symmetric_group_census() {
    // involutions in S_n: sum over pairings of k disjoint transpositions
    fn involution_count(n: usize) -> usize {
        let mut total = 0;
        let mut k = 1;
        while 2 * k <= n {
            total += factorial(n) as usize
                / (factorial(k) as usize * 2usize.pow(k as u32) * factorial(n - 2 * k) as usize);
            k += 1;
        }
        total
    }
    for n in 1..=6 {
        let g = group(&format!("S:{n}"));
        assert_eq!(g.order(), factorial(n) as usize);
        assert_eq!(g.count_involutions(), involution_count(n), "S:{n}");
    }
}

#[test]
fn permutation_backend_matches_direct_composition() {
    for n in 2..=5 {
        let g = group(&format!("S:{n}"));
        for a in 0..g.order() {
            let pa = g.permutation_of(a).unwrap();
            for b in 0..g.order() {
                let pb = g.permutation_of(b).unwrap();
                let composed = pa.compose(&pb);
                assert_eq!(
                    g.permutation_of(g.mul(a, b)).unwrap(),
                    composed,
                    "S:{n} at ({a},{b})"
                );
            }
        }
    }
}

#[test]
fn class_equation_to_order_48() {
    for spec in ["S:4", "os:5,2", "prod(S:3,Z:2)", "prod(Z:6,Z:8)", "Z:47"] {
        let g = group(spec);
        assert!(g.order() <= 48);
        let total: usize = g
            .conjugacy_class_representatives()
            .iter()
            .map(|&r| g.conjugacy_class(r).unwrap().len())
            .sum();
        assert_eq!(total, g.order(), "{spec}");
    }
}

#[test]
fn product_group_componentwise_to_144() {
    let g = group("prod(Z:12,Z:12)");
    assert_eq!(g.order(), 144);
    for a in 0..144 {
        for b in 0..144 {
            let want = ((a / 12 + b / 12) % 12) * 12 + (a % 12 + b % 12) % 12;
            assert_eq!(g.mul(a, b), want);
        }
    }
    let h = group("prod(S:3,S:4)");
    assert_eq!(h.order(), 144);
    let (l, r) = h.product_components().unwrap();
    let mut rng = Rng(0xabcdef1234567890);
    for _ in 0..5000 {
        let a = rng.below(144);
        let b = rng.below(144);
        let (a1, a2) = h.split_pair(a).unwrap();
        let (b1, b2) = h.split_pair(b).unwrap();
        assert_eq!(
            h.mul(a, b),
            h.join_pair(l.mul(a1, b1), r.mul(a2, b2)).unwrap()
        );
    }
}

#[test]
fn translation_invariance_of_alternating_property() {
    // 100 random (γ, A) trials per corpus group: if A passes, γA passes
    for (name, g) in small_group_catalog(16).unwrap() {
        if g.order() < 2 {
            continue;
        }
        let mut rng = Rng(0x5eed ^ g.order() as u64);
        let mut trials = 0;
        while trials < 100 {
            let size = 2 + rng.below(3);
            let set = ElementSet::from_indices((0..size).map(|_| rng.below(g.order())));
            let rep = check_sk_prime(&g, &set, 2, &caps()).unwrap();
            if !rep.holds {
                continue;
            }
            trials += 1;
            let gamma = rng.below(g.order());
            let translated = set.translate(&g, gamma);
            assert!(
                check_sk_prime(&g, &translated, 2, &caps()).unwrap().holds,
                "{name}: translate by {gamma}"
            );
        }
    }
}

#[test]
fn search_witnesses_are_monotone() {
    // a length-3 distinct-products witness also verifies at length 2
    let budget = SearchBudget::default();
    for (name, g) in small_group_catalog(16).unwrap() {
        let found = max_sk(&g, 3, 1, &budget).unwrap();
        for l in 2..=3 {
            assert!(
                check_sk(&g, &found.witness, l, &caps()).unwrap().holds,
                "{name} witness at length {l}"
            );
        }
    }
}

#[test]
fn product_closure() {
    let s3 = group("S:3");
    let a1 = ElementSet::new(
        &s3,
        [
            s3.parse_element("(1 2 3)").unwrap(),
            s3.parse_element("(1 2)").unwrap(),
        ],
    )
    .unwrap();
    assert!(check_sk(&s3, &a1, 2, &caps()).unwrap().holds);
    let q8 = small_group_catalog(8)
        .unwrap()
        .into_iter()
        .find(|(n, _)| n == "Q8")
        .unwrap()
        .1;
    let found = max_sk(&q8, 2, 1, &SearchBudget::default()).unwrap();
    assert!(found.value >= 1);

    let prod = FiniteGroup::direct_product(s3.clone(), q8.clone());
    let mut pairs = Vec::new();
    for &x in a1.members() {
        for &y in found.witness.members() {
            pairs.push(prod.join_pair(x, y).unwrap());
        }
    }
    let combined = ElementSet::from_indices(pairs);
    assert_eq!(combined.len(), a1.len() * found.value);
    assert!(
        check_sk(&prod, &combined, 2, &caps()).unwrap().holds,
        "product of passing sets must pass"
    );
}

#[test]
fn cayley_walk_uniqueness_matches_word_property() {
    let mut rng = Rng(0xc0ffee);
    for (name, g) in small_group_catalog(16).unwrap() {
        if g.order() < 3 {
            continue;
        }
        // sample identity-free subsets of size <= 4
        for _ in 0..40 {
            let size = 1 + rng.below(4);
            let set = ElementSet::from_indices((0..size).map(|_| 1 + rng.below(g.order() - 1)));
            for k in [2u32, 3] {
                let d = cayley_digraph(&g, &set).unwrap();
                let (free, witness) = is_fk_free(&d, k).unwrap();
                let holds = check_sk(&g, &set, k, &caps()).unwrap().holds;
                assert_eq!(free, holds, "{name} set {:?} k={k}", set.members());
                if let Some(w) = witness {
                    assert_eq!(w.walks[0][0], w.walks[1][0]);
                    assert_eq!(w.walks[0][k as usize], w.walks[1][k as usize]);
                    assert_ne!(w.walks[0], w.walks[1]);
                }
            }
        }
    }
}

#[test]
fn bipartite_girth_matches_alternating_property() {
    // girth > 2k iff the alternating property holds at every length 2..=k
    let mut corpus: Vec<(String, FiniteGroup)> = small_group_catalog(16).unwrap();
    corpus.push(("Z24".to_string(), group("Z:24")));
    corpus.push(("S4".to_string(), group("S:4")));
    let mut rng = Rng(0xbead);
    for (name, g) in corpus {
        if g.order() < 3 || g.order() > 24 {
            continue;
        }
        for _ in 0..30 {
            let size = 1 + rng.below(3);
            let set = ElementSet::from_indices((0..size).map(|_| rng.below(g.order())));
            let graph = bipartite_cayley(&g, &set).unwrap();
            let girth = graph.girth();
            for k in [2usize, 3] {
                let all_hold =
                    (2..=k).all(|j| check_sk_prime(&g, &set, j as u32, &caps()).unwrap().holds);
                let girth_ok = girth.map_or(true, |c| c > 2 * k);
                assert_eq!(
                    girth_ok,
                    all_hold,
                    "{name} set {:?} k={k} girth {girth:?}",
                    set.members()
                );
            }
        }
    }
}

#[test]
fn class_recipes_respect_claimed_bound_across_catalog() {
    for (name, g) in small_group_catalog(12).unwrap() {
        for rep in g.conjugacy_class_representatives() {
            let ps = class_recipe(&g, rep).unwrap();
            let mult = ps.verified_multiplicity(&caps()).unwrap();
            assert!(mult <= ps.claimed_g, "{name} rep {rep}");
        }
    }
}

#[test]
fn permanent_lift_inherits_property_order_8() {
    // every passing set of size <= 2 in every group of order <= 8
    for (name, g) in small_group_catalog(8).unwrap() {
        let n = g.order();
        let mut sets: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
        for a in 0..n {
            for b in a + 1..n {
                sets.push(vec![a, b]);
            }
        }
        for members in sets {
            let set = ElementSet::from_indices(members.iter().copied());
            for k in [2u32, 3] {
                if !check_sk(&g, &set, k, &caps()).unwrap().holds {
                    continue;
                }
                let lifted = permanent_lift(&g, &set).unwrap();
                let per = ryser_permanent(&cayley_matrix(&g, &set).unwrap()).unwrap();
                assert_eq!(
                    num_bigint::BigUint::from(lifted.len() as u64),
                    per,
                    "{name} {:?}",
                    set.members()
                );
                let rep = sidonium::sidon::check_sk_perms(&lifted, k, &caps()).unwrap();
                assert!(rep.holds, "{name} {:?} k={k}", set.members());
            }
        }
    }
}

#[test]
fn glm_shorter_path_pairs_are_reported_not_asserted() {
    // G(3,2) is free of equal-endpoint 3-path pairs but does contain
    // 2-path pairs: both wrap layers fan out over the same coordinate.
    let d = glm(3, 2).unwrap();
    assert!(find_cll(&d, 3, 1 << 22).unwrap().is_none());
    let shorter = find_cll(&d, 2, 1 << 22).unwrap();
    assert!(
        shorter.is_some(),
        "shorter pairs exist and are only reported"
    );
}

#[test]
fn searched_maxima_are_translation_stable() {
    // translating a maximum alternating-property witness keeps it valid
    let z7 = group("Z:7");
    let best = max_sk_prime(&z7, 2, &SearchBudget::default()).unwrap();
    for gamma in 0..7 {
        let t = best.witness.translate(&z7, gamma);
        assert!(check_sk_prime(&z7, &t, 2, &caps()).unwrap().holds);
    }
}

#[test]
fn one_line_permutation_identities() {
    let p = Permutation::from_cycles(5, "(1 2 3 4 5)").unwrap();
    assert_eq!(p.one_line(), vec![2, 3, 4, 5, 1]);
    assert!(p.is_even());
    let q = Permutation::from_one_line(&[2, 1, 3, 4, 5]).unwrap();
    assert!(!q.is_even());
}
