//! The blocked Hamilton-path family: positions cycle through the parts of
//! a fixed partition, so no two members glue into an unbalanced cycle.
//!
//! Run with: cargo run --example path_families

use sidonium::digraph::paths::{sigma_paths, two_part_cycles};

fn main() -> sidonium::Result<()> {
    let family = sigma_paths(10, 2)?;
    println!(
        "n = 10, r = 2: {} members over parts of size {} ({} Hamilton paths total)",
        family.family_size, family.part_size, family.hamilton_paths_total
    );
    println!(
        "derived pairwise-compatible family bound: n!/|family| = {}",
        family.derived_clique_bound
    );

    let members: Vec<Vec<usize>> = family.members().collect();
    let mut four_cycles = 0usize;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            for c in two_part_cycles(&members[i], &members[j], 4)? {
                assert_eq!(c.cycle_type, 0, "unbalanced cycle between members");
                four_cycles += 1;
            }
        }
    }
    println!(
        "all {} pairs scanned: {four_cycles} two-part 4-cycles, every one balanced",
        members.len() * (members.len() - 1) / 2
    );

    // outside the family, unbalanced two-part cycles do appear
    let p = vec![0, 1, 2, 3];
    let q = vec![2, 0, 1, 3];
    let cycles = two_part_cycles(&p, &q, 3)?;
    println!(
        "\nfree paths 0-1-2-3 and 2-0-1-3: triangle of type {} found",
        cycles[0].cycle_type
    );
    Ok(())
}
