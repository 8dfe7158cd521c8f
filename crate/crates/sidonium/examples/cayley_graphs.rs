//! The two graph views of the word properties: walk-uniqueness of the
//! Cayley digraph matches the distinct-products check, and the girth of
//! the bipartite Cayley graph reflects the alternating property.
//!
//! Run with: cargo run --example cayley_graphs

use sidonium::digraph::patterns::is_fk_free;
use sidonium::digraph::undirected::bipartite_cayley;
use sidonium::digraph::{cayley_digraph, degree_profile};
use sidonium::group::{build_group, ElementSet, GroupSpec};
use sidonium::sidon::search::{max_sk_in, SearchBudget};
use sidonium::sidon::{check_sk, check_sk_prime, VerifyCaps};

fn main() -> sidonium::Result<()> {
    let caps = VerifyCaps::default();

    // search a size-2 distinct-products set in the order-48 group and
    // build its Cayley digraph
    let g = build_group(&GroupSpec::parse("os:5,2")?)?;
    let candidates: Vec<usize> = g.elements().filter(|&e| e != 0).collect();
    let budget = SearchBudget {
        target: Some(2),
        ..Default::default()
    };
    let found = max_sk_in(&g, 2, 1, &candidates, &budget)?;
    let set = found.witness;
    assert!(check_sk(&g, &set, 2, &caps)?.holds);
    let d = cayley_digraph(&g, &set)?;
    let p = degree_profile(&d);
    let (free, _) = is_fk_free(&d, 2)?;
    println!(
        "os:5,2 with a searched 2-element set: {} vertices, semidegrees all {}, walk-unique: {free}",
        d.n(),
        p.min_semidegree()
    );

    // a violating set shows up as an equal-endpoint walk pair
    let z5 = build_group(&GroupSpec::parse("Z:5")?)?;
    let bad = ElementSet::new(&z5, [1, 2])?;
    let d = cayley_digraph(&z5, &bad)?;
    let (free, witness) = is_fk_free(&d, 2)?;
    println!("\nZ:5 with {{1,2}}: walk-unique: {free}");
    if let Some(w) = witness {
        println!(
            "  walks {:?} and {:?} share endpoints",
            w.walks[0], w.walks[1]
        );
    }

    // bipartite Cayley girth vs the alternating property
    let z7 = build_group(&GroupSpec::parse("Z:7")?)?;
    for members in [vec![0usize, 1, 3], vec![0, 1, 2]] {
        let set = ElementSet::new(&z7, members.iter().copied())?;
        let graph = bipartite_cayley(&z7, &set)?;
        let holds = check_sk_prime(&z7, &set, 2, &caps)?.holds;
        println!(
            "Z:7 with {:?}: girth {:?}, alternating property: {holds}",
            members,
            graph.girth()
        );
    }
    Ok(())
}
