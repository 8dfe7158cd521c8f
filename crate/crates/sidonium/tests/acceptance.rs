//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Every expected value asserted here is either trivially forced, computed
//! by an independent brute-force oracle defined in this file, or checked
//! against a closed form evaluated in exact arithmetic.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use sidonium::construct::hamilton::hamilton_lift;
use sidonium::construct::hash_family::{hash_code_bound, hash_shift_family};
use sidonium::construct::permanent::{cayley_matrix, ef_bound, permanent_lift, ryser_permanent};
use sidonium::construct::probabilistic::{anticommuting_base, probabilistic_sidon, SidonKind};
use sidonium::construct::{class_recipe, sn_cross};
use sidonium::digraph::counting::{
    best_eulerian_count, bidirected_complete_bipartite, count_hamilton_cycles,
};
use sidonium::digraph::glm::{
    glm, glm_hamilton_formula, glm_vertex, transition_vector_count, transition_vectors, GlmSide,
};
use sidonium::digraph::paths::{sigma_paths, two_part_cycles};
use sidonium::digraph::patterns::{find_cll, is_fk_free};
use sidonium::digraph::random::{layered_subgraph, random_induced_subgraph, Eps};
use sidonium::digraph::undirected::{dodecahedron, petersen};
use sidonium::digraph::{cayley_digraph, degree_profile, find_unbalanced_closed_walk, Digraph};
use sidonium::group::catalog::small_group_catalog;
use sidonium::group::{build_group, ElementSet, FiniteGroup, GroupSpec};
use sidonium::matrix::SquareMatrix01;
use sidonium::sidon::bounds::{upper_bound_report, BoundTarget};
use sidonium::sidon::search::{max_sk, max_sk_in, max_sk_prime, SearchBudget};
use sidonium::sidon::{check_sk, check_sk_perms, check_sk_prime, VerifyCaps};

fn pass(n: u32, name: &str) {
    println!("ACCEPTANCE {n:02} ({name}): PASS");
}

fn group(spec: &str) -> FiniteGroup {
    build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
}

fn caps() -> VerifyCaps {
    VerifyCaps::default()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

// ---------------------------------------------------------------------------
// independent oracles (no shared code with the library implementations)

/// Brute-force distinct-products check: enumerate every length-`k` word by
/// odometer and count products per group element.
fn naive_sk_ok(g: &FiniteGroup, members: &[usize], k: usize, bound: u64) -> bool {
    if members.len() <= 1 {
        return true;
    }
    let mut counts = vec![0u64; g.order()];
    let mut odo = vec![0usize; k];
    loop {
        let mut p = 0usize;
        for &i in &odo {
            p = g.mul(p, members[i]);
        }
        counts[p] += 1;
        if counts[p] > bound {
            return false;
        }
        // advance odometer
        let mut pos = 0;
        loop {
            if pos == k {
                return true;
            }
            odo[pos] += 1;
            if odo[pos] < members.len() {
                break;
            }
            odo[pos] = 0;
            pos += 1;
        }
    }
}

/// Brute-force alternating-word check with cyclic adjacency: enumerate all
/// `2k`-position assignments, discard those with an adjacent equality, and
/// look for an identity product.
fn naive_sk_prime_ok(g: &FiniteGroup, members: &[usize], k: usize) -> bool {
    let s = members.len();
    if s <= 1 {
        return true;
    }
    let mut odo = vec![0usize; 2 * k];
    loop {
        // word alpha_1 beta_1 ... alpha_k beta_k at positions 0..2k
        let mut valid = true;
        for i in 0..k {
            let alpha = odo[2 * i];
            let beta = odo[2 * i + 1];
            let alpha_next = odo[(2 * i + 2) % (2 * k)];
            if alpha == beta || beta == alpha_next {
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
                return false;
            }
        }
        let mut pos = 0;
        loop {
            if pos == 2 * k {
                return true;
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

/// Does any `s`-subset of `0..n` (lexicographic enumeration) pass?
fn any_subset_passes(n: usize, s: usize, ok: &dyn Fn(&[usize]) -> bool) -> bool {
    if s > n {
        return false;
    }
    let mut c: Vec<usize> = (0..s).collect();
    loop {
        if ok(&c) {
            return true;
        }
        // advance to the next combination
        let mut i = s as isize - 1;
        while i >= 0 && c[i as usize] == n - s + i as usize {
            i -= 1;
        }
        if i < 0 {
            return false;
        }
        let i = i as usize;
        c[i] += 1;
        for j in i + 1..s {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Maximum over all subsets, enumerated by size; both properties are
/// hereditary, so the first empty size level ends the search.
fn naive_max(g: &FiniteGroup, ok: impl Fn(&FiniteGroup, &[usize]) -> bool) -> usize {
    let n = g.order();
    let mut best = 0usize;
    for s in 1..=n {
        if any_subset_passes(n, s, &|subset| ok(g, subset)) {
            best = s;
        } else {
            break;
        }
    }
    best
}

fn naive_permanent(m: &SquareMatrix01) -> u64 {
    fn expand(m: &SquareMatrix01, row: usize, used: &mut [bool]) -> u64 {
        if row == m.n() {
            return 1;
        }
        let mut total = 0;
        for col in 0..m.n() {
            if !used[col] && m.get(row, col) {
                used[col] = true;
                total += expand(m, row + 1, used);
                used[col] = false;
            }
        }
        total
    }
    let mut used = vec![false; m.n()];
    expand(m, 0, &mut used)
}

/// Eulerian trails starting with a fixed first arc (the least arc leaving
/// vertex 0), counted by direct backtracking.
fn naive_eulerian_fixed_start(d: &Digraph) -> u64 {
    let arcs: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .collect();
    let first = arcs
        .iter()
        .position(|&(u, _)| u == 0)
        .expect("vertex 0 has an out-arc");
    fn dfs(arcs: &[(usize, usize)], used: &mut [bool], at: usize, left: usize) -> u64 {
        if left == 0 {
            return (at == 0) as u64;
        }
        let mut total = 0;
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if !used[i] && u == at {
                used[i] = true;
                total += dfs(arcs, used, v, left - 1);
                used[i] = false;
            }
        }
        total
    }
    let mut used = vec![false; arcs.len()];
    used[first] = true;
    dfs(&arcs, &mut used, arcs[first].1, arcs.len() - 1)
}

// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_exact_constructions() {
    for n in [3usize, 4, 5] {
        for (full, alternating) in [(false, false), (true, false), (false, true), (true, true)] {
            let ps = sn_cross(n, full, alternating).unwrap();
            let expected = match (full, alternating) {
                (false, false) => factorial(n - 1),
                (true, false) => factorial(n),
                (false, true) => factorial(n - 1) / 2,
                (true, true) => factorial(n) / 2,
            };
            assert_eq!(
                ps.len(),
                expected,
                "size n={n} full={full} alt={alternating}"
            );
            let mult = ps.verified_multiplicity(&caps()).unwrap();
            if full {
                let bound = if n % 2 == 1 { n } else { n - 1 } as u64;
                assert!(mult <= bound, "n={n}: multiplicity {mult} > {bound}");
            } else {
                assert_eq!(mult, 1, "stabilized variant must be multiplicity 1");
            }
        }
    }
    pass(1, "pair constructions in S:n x S:n and A:n x A:n");
}

#[test]
fn acceptance_02_class_recipes() {
    for spec in ["S:3", "S:4"] {
        let g = group(spec);
        for rep in g.conjugacy_class_representatives() {
            let class = g.conjugacy_class(rep).unwrap();
            let ps = class_recipe(&g, rep).unwrap();
            assert_eq!(
                ps.claimed_g,
                (g.order() / class.len()) as u64,
                "{spec} rep {rep}"
            );
            let mult = ps.verified_multiplicity(&caps()).unwrap();
            assert!(
                mult <= ps.claimed_g,
                "{spec} rep {rep}: multiplicity {mult} above claimed {}",
                ps.claimed_g
            );
        }
    }
    pass(2, "conjugacy-class recipes over S:3 and S:4");
}

#[test]
fn acceptance_03_oracle_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    // the corpus is written out and read back as multiplication tables
    let mut corpus: Vec<(String, FiniteGroup)> = Vec::new();
    for (name, g) in small_group_catalog(16).unwrap() {
        let path = dir.path().join(format!("{name}.table"));
        g.to_table().unwrap().write(&path).unwrap();
        let reloaded = build_group(&GroupSpec::Table(path)).unwrap();
        assert_eq!(reloaded.order(), g.order());
        corpus.push((name, reloaded));
    }
    assert_eq!(corpus.len(), 42, "every group of order at most 16");

    let budget = SearchBudget::default();
    for (name, g) in &corpus {
        for k in [2u32, 3] {
            let searched = max_sk(g, k, 1, &budget).unwrap();
            assert!(searched.exact, "{name} k={k}");
            let naive = naive_max(g, |g, s| naive_sk_ok(g, s, k as usize, 1));
            assert_eq!(searched.value, naive, "max_sk mismatch on {name}, k={k}");
            assert!(check_sk(g, &searched.witness, k, &caps()).unwrap().holds);

            let searched_p = max_sk_prime(g, k, &budget).unwrap();
            assert!(searched_p.exact, "{name} k={k}");
            let naive_p = naive_max(g, |g, s| naive_sk_prime_ok(g, s, k as usize));
            assert_eq!(
                searched_p.value, naive_p,
                "max_sk_prime mismatch on {name}, k={k}"
            );
            assert!(
                check_sk_prime(g, &searched_p.witness, k, &caps())
                    .unwrap()
                    .holds
            );
        }
        if g.is_abelian() && g.order() >= 2 {
            assert_eq!(max_sk(g, 2, 1, &budget).unwrap().value, 1, "{name}");
        }
        if name == "S3" {
            assert_eq!(max_sk(g, 2, 1, &budget).unwrap().value, 2);
        }
    }
    pass(
        3,
        "searches agree with naive subset enumeration through order 16",
    );
}

#[test]
fn acceptance_04_bound_consistency() {
    let budget = SearchBudget::default();
    for (name, g) in small_group_catalog(16).unwrap() {
        for k in [2u32, 3] {
            let m_k = max_sk(&g, k, 1, &budget).unwrap().value as u64;
            let m_k_prime = max_sk_prime(&g, k, &budget).unwrap().value as u64;
            let report = upper_bound_report(&g, k, 1, None).unwrap();
            for entry in &report.entries {
                if !entry.applicable {
                    continue;
                }
                match entry.target {
                    BoundTarget::Sk | BoundTarget::SkG => assert!(
                        m_k <= entry.value,
                        "{name} k={k}: M_k={m_k} above {:?}={}",
                        entry.name,
                        entry.value
                    ),
                    BoundTarget::SkPrime => assert!(
                        m_k_prime <= entry.value,
                        "{name} k={k}: M_k'={m_k_prime} above {:?}={}",
                        entry.name,
                        entry.value
                    ),
                }
            }
            if g.order() > 1 {
                // strictly below |G|^{1/k}
                assert!(
                    m_k.pow(k) < g.order() as u64,
                    "{name} k={k}: trivial bound attained"
                );
            }
        }
    }
    pass(4, "maxima respect every applicable upper bound");
}

#[test]
fn acceptance_05_field_automorphism_groups() {
    for (p, k) in [(3u64, 2u32), (5, 2)] {
        let g = group(&format!("os:{p},{k}"));
        assert_eq!(g.order() as u64, (p.pow(k) - 1) * k as u64);
        let target = ((p - 1) / k as u64) as usize;
        let candidates: Vec<usize> = g.elements().filter(|&e| e != 0).collect();
        let budget = SearchBudget {
            target: Some(target),
            ..Default::default()
        };
        let found = max_sk_in(&g, k, 1, &candidates, &budget).unwrap();
        assert!(
            found.value >= target,
            "os:{p},{k}: found {} < {target}",
            found.value
        );
        let witness =
            ElementSet::from_indices(found.witness.members().iter().copied().take(target));
        assert!(check_sk(&g, &witness, k, &caps()).unwrap().holds);
        let d = cayley_digraph(&g, &witness).unwrap();
        let (free, _) = is_fk_free(&d, k).unwrap();
        assert!(free, "Cayley digraph of a verified set must be walk-unique");
        let prof = degree_profile(&d);
        assert_eq!(prof.min_out, target);
        assert_eq!(prof.max_out, target);
        assert_eq!(prof.min_in, target);
        assert_eq!(prof.max_in, target);
    }
    pass(
        5,
        "searched generating sets in the field-automorphism groups",
    );
}

#[test]
fn acceptance_06_permanent_suite() {
    // 200 random 0/1 matrices with n <= 7 against naive expansion
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut rand = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for trial in 0..200 {
        let n = (rand() % 7 + 1) as usize;
        let mut m = SquareMatrix01::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rand() & 1 == 1);
            }
        }
        assert_eq!(
            ryser_permanent(&m).unwrap(),
            BigUint::from(naive_permanent(&m)),
            "trial {trial}"
        );
    }

    let s3 = group("S:3");
    let a = ElementSet::new(
        &s3,
        [
            s3.parse_element("(1 2 3)").unwrap(),
            s3.parse_element("(1 2)").unwrap(),
        ],
    )
    .unwrap();
    assert!(check_sk(&s3, &a, 2, &caps()).unwrap().holds);
    let m = cayley_matrix(&s3, &a).unwrap();
    let per = ryser_permanent(&m).unwrap();
    let lifted = permanent_lift(&s3, &a).unwrap();
    assert_eq!(BigUint::from(lifted.len() as u64), per);
    let bound = ef_bound(6, 2).unwrap();
    assert!(BigRational::from_integer(per.to_u64().unwrap().into()) >= bound);
    assert!(check_sk_perms(&lifted, 2, &caps()).unwrap().holds);
    pass(6, "Ryser permanents and the permutation lift");
}

#[test]
fn acceptance_07_hamilton_lift_suite() {
    let dodeca = dodecahedron();
    let mut nonempty = 0usize;
    for seed in 0..100u64 {
        let lift = hamilton_lift(&dodeca, 2, seed).unwrap();
        assert_eq!(lift.cycles_in_graph, 30);
        let rep = check_sk_perms(&lift.permutations, 2, &caps()).unwrap();
        assert!(rep.holds, "seed {seed}");
        if !lift.permutations.is_empty() {
            nonempty += 1;
        }
    }
    let _ = nonempty; // most seeds respect no cycle; all outputs must verify
    let petersen_lift = hamilton_lift(&petersen(), 2, 7).unwrap();
    assert_eq!(petersen_lift.cycles_in_graph, 0);
    assert!(petersen_lift.permutations.is_empty());
    pass(7, "hundred-seed Hamilton lifts on the dodecahedron");
}

#[test]
fn acceptance_08_probabilistic_suite() {
    let z101 = group("Z:101");
    for seed in 0..20u64 {
        let out = probabilistic_sidon(&z101, SidonKind::Second, None, seed, 256, &caps()).unwrap();
        assert!(out.met, "seed {seed}: target {} missed", out.target);
        assert!(check_sk_prime(&z101, &out.set, 2, &caps()).unwrap().holds);
        assert!(out.set.len() as u64 >= out.target);
    }
    let (a5, base) = anticommuting_base(5).unwrap();
    assert_eq!(base.len(), 6);
    for seed in 0..20u64 {
        let out =
            probabilistic_sidon(&a5, SidonKind::First, Some(&base), seed, 256, &caps()).unwrap();
        assert!(out.met, "seed {seed}: target {} missed", out.target);
        assert!(check_sk(&a5, &out.set, 2, &caps()).unwrap().holds);
    }
    pass(
        8,
        "deletion-method constructions meet their exact guarantee",
    );
}

#[test]
fn acceptance_09_glm_suite() {
    for (l, m) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let d = glm(l, m).unwrap();
        assert_eq!(d.n(), (2 * l - 2) * m * m, "G({l},{m}) vertices");
        let p = degree_profile(&d);
        assert_eq!(
            (p.min_out, p.max_out, p.min_in, p.max_in),
            (m, m, m, m),
            "G({l},{m}) degrees"
        );
        assert!(
            find_cll(&d, l, 1 << 24).unwrap().is_none(),
            "G({l},{m}) must be free of equal-endpoint path pairs"
        );
    }
    // adversarial arcs create witnesses
    let d = glm(2, 2).unwrap();
    let w021 = glm_vertex(2, 2, GlmSide::W, 0, 2, 1);
    let v012 = glm_vertex(2, 2, GlmSide::V, 0, 1, 2);
    let d2 = d.with_arc(w021, v012).unwrap();
    let witness = find_cll(&d2, 2, 1 << 24)
        .unwrap()
        .expect("witness expected");
    witness.validate(&d2, 2).unwrap();

    let d = glm(3, 2).unwrap();
    let w011 = glm_vertex(3, 2, GlmSide::W, 0, 1, 1);
    let w121 = glm_vertex(3, 2, GlmSide::W, 1, 2, 1);
    let d2 = d.with_arc(w011, w121).unwrap();
    let witness = find_cll(&d2, 3, 1 << 24)
        .unwrap()
        .expect("witness expected");
    witness.validate(&d2, 3).unwrap();
    pass(9, "layered digraphs: sizes, degrees, path-pair freeness");
}

#[test]
fn acceptance_10_counting_suite() {
    let c22 = count_hamilton_cycles(&glm(2, 2).unwrap(), 20).unwrap();
    assert_eq!(c22, BigUint::from(4u32));
    assert_eq!(c22, glm_hamilton_formula(2, 2).unwrap());
    let c32 = count_hamilton_cycles(&glm(3, 2).unwrap(), 20).unwrap();
    assert_eq!(c32, BigUint::from(64u32));
    assert_eq!(c32, glm_hamilton_formula(3, 2).unwrap());

    for m in [2usize, 3] {
        let d = bidirected_complete_bipartite(m, m);
        let best = best_eulerian_count(&d).unwrap();
        assert_eq!(best, transition_vector_count(m as u64));
    }
    assert_eq!(
        best_eulerian_count(&bidirected_complete_bipartite(2, 2)).unwrap(),
        BigUint::from(4u32)
    );
    assert_eq!(
        best_eulerian_count(&bidirected_complete_bipartite(3, 3)).unwrap(),
        BigUint::from(5184u32)
    );
    // direct enumeration cross-check at m = 2 (8 arcs)
    assert_eq!(
        naive_eulerian_fixed_start(&bidirected_complete_bipartite(2, 2)),
        4
    );
    let vectors = transition_vectors(2).unwrap();
    assert_eq!(vectors.len(), 4);
    for t in &vectors {
        t.validate().unwrap();
    }
    pass(10, "Hamilton, Eulerian, and transition-vector counts");
}

/// The larger optional check: the 18-vertex layered digraph has exactly
/// 5184 Hamilton cycles.
#[test]
fn acceptance_10_glm_2_3() {
    let d = glm(2, 3).unwrap();
    let counted = count_hamilton_cycles(&d, 20).unwrap();
    assert_eq!(counted, BigUint::from(5184u32));
    assert_eq!(counted, glm_hamilton_formula(2, 3).unwrap());
    pass(10, "G(2,3) Hamilton count");
}

#[test]
fn acceptance_11_layering_and_density() {
    // layered outputs: no unbalanced closed walk of length <= 2h-1
    let mut arcs = Vec::new();
    for u in 0..8 {
        for v in 0..8 {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    let k8 = Digraph::new(8, arcs).unwrap();
    for seed in 0..20u64 {
        let r = layered_subgraph(&k8, 2, Eps::new(1, 2).unwrap(), seed, 500).unwrap();
        assert!(
            find_unbalanced_closed_walk(&r.digraph, 3).is_none(),
            "seed {seed}"
        );
    }

    let d = glm(2, 4).unwrap();
    assert_eq!(d.n(), 32);
    for seed in 0..100u64 {
        let r = random_induced_subgraph(&d, 24, Eps::new(1, 2).unwrap(), seed, 20_000).unwrap();
        assert!(r.met, "seed {seed} failed within budget");
        assert_eq!(r.digraph.n(), 24);
        let p = degree_profile(&r.digraph);
        // (1 - 1/2)(24/32) * 4 = 1.5
        assert!(p.min_out * 2 * 32 >= 24 * 4);
        assert!(p.min_in * 2 * 32 >= 24 * 4);
    }
    pass(
        11,
        "layered subgraphs balanced; induced subgraphs keep degrees",
    );
}

#[test]
fn acceptance_12_sigma_suite() {
    let family = sigma_paths(10, 2).unwrap();
    assert_eq!(family.family_size, BigUint::from(32u32));
    let members: Vec<Vec<usize>> = family.members().collect();
    assert_eq!(members.len(), 32);
    // the derived clique figure multiplies back below n!
    assert!(&family.family_size * &family.derived_clique_bound <= family.hamilton_paths_total);
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let cycles = two_part_cycles(&members[i], &members[j], 4).unwrap();
            for c in cycles {
                assert_eq!(
                    c.cycle_type, 0,
                    "pair ({i},{j}) makes an unbalanced 4-cycle"
                );
            }
        }
    }
    pass(12, "path family admits no unbalanced two-part 4-cycle");
}

#[test]
fn acceptance_13_hash_suite() {
    for t in 3..=12usize {
        for v in 3..=t {
            let fam = hash_shift_family(t, v).unwrap();
            assert_eq!(fam.len(), t - 1);
            for x in 1..t {
                assert_eq!(
                    fam.iter().filter(|s| s.contains(&x)).count(),
                    v - 2,
                    "t={t} v={v} element {x}"
                );
            }
        }
    }
    assert_eq!(hash_code_bound(4, 3, 2, 6).unwrap().to_u64(), Some(96));
    assert_eq!(hash_code_bound(3, 3, 3, 4).unwrap().to_u64(), Some(27));
    assert_eq!(
        hash_code_bound(5, 5, 2, 8).unwrap(),
        BigRational::from_integer(40.into())
    );
    pass(
        13,
        "shift families are regular; counting bound matches hand values",
    );
}

#[test]
fn oracle_spotchecks() {
    // the oracles themselves agree with directly known values
    let z7 = group("Z:7");
    assert_eq!(naive_max(&z7, |g, s| naive_sk_prime_ok(g, s, 2)), 3);
    let s3 = group("S:3");
    assert_eq!(naive_max(&s3, |g, s| naive_sk_ok(g, s, 2, 1)), 2);
    let one = BigUint::one();
    assert_eq!(ryser_permanent(&SquareMatrix01::identity(5)).unwrap(), one);
}
