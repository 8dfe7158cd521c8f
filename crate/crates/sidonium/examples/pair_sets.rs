//! Pair constructions in product groups: the stabilizer and full-group
//! variants, and the conjugacy-class recipe.
//!
//! Run with: cargo run --example pair_sets

use sidonium::construct::{class_recipe, sn_cross};
use sidonium::group::{build_group, GroupSpec};
use sidonium::sidon::VerifyCaps;

fn main() -> sidonium::Result<()> {
    let caps = VerifyCaps::default();

    println!("pairs (α, απ) over a point stabilizer or the whole group:");
    for n in [3usize, 4, 5] {
        for (full, alternating) in [(false, false), (true, false), (true, true)] {
            let ps = sn_cross(n, full, alternating)?;
            let mult = ps.verified_multiplicity(&caps)?;
            println!(
                "  n={n} full={full:<5} alternating={alternating:<5} size {:>4}  claimed g = {}  exact multiplicity = {mult}",
                ps.len(),
                ps.claimed_g
            );
        }
    }

    println!("\nconjugacy-class recipe over S:4 (claimed g = |G|/class size):");
    let s4 = build_group(&GroupSpec::parse("S:4")?)?;
    for rep in s4.conjugacy_class_representatives() {
        let ps = class_recipe(&s4, rep)?;
        let mult = ps.verified_multiplicity(&caps)?;
        println!(
            "  class of {:<10} size {:>2}: claimed g = {:>2}, exact multiplicity = {mult}",
            s4.render(rep),
            ps.len(),
            ps.claimed_g
        );
    }
    Ok(())
}
