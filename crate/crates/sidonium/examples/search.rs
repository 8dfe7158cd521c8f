//! Exhaustive maximum-set searches with upper bounds alongside.
//!
//! Run with: cargo run --example search

use sidonium::group::{build_group, GroupSpec};
use sidonium::sidon::bounds::upper_bound_report;
use sidonium::sidon::search::{max_sk, max_sk_prime, SearchBudget};

fn main() -> sidonium::Result<()> {
    let budget = SearchBudget::default();
    println!("group        k   M_k  M_k'  nodes(M_k)  best upper bound");
    for spec_text in ["Z:7", "Z:16", "S:3", "S:4", "prod(S:3,S:3)", "os:3,2"] {
        let g = build_group(&GroupSpec::parse(spec_text)?)?;
        for k in [2u32, 3] {
            let sk = max_sk(&g, k, 1, &budget)?;
            let skp = max_sk_prime(&g, k, &budget)?;
            let bounds = upper_bound_report(&g, k, 1, None)?;
            let best = bounds
                .entries
                .iter()
                .filter(|e| {
                    e.applicable && e.target != sidonium::sidon::bounds::BoundTarget::SkPrime
                })
                .map(|e| e.value)
                .min()
                .unwrap_or(0);
            println!(
                "{spec_text:<12} {k}   {:>3}  {:>4}  {:>10}  {best}",
                sk.value, skp.value, sk.nodes
            );
            assert!(sk.exact && skp.exact);
            assert!((sk.value as u64) <= best);
        }
    }

    // a targeted search stops as soon as the requested size appears
    let g = build_group(&GroupSpec::parse("prod(S:3,S:3)")?)?;
    let targeted = max_sk(
        &g,
        2,
        1,
        &SearchBudget {
            target: Some(2),
            ..Default::default()
        },
    )?;
    println!(
        "\ntargeted search in prod(S:3,S:3): found size {} after {} nodes (exact: {})",
        targeted.value, targeted.nodes, targeted.exact
    );
    Ok(())
}
