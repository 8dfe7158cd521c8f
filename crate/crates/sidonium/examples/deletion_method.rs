//! The deletion method: censusing the violation hypergraph exactly,
//! choosing the sample size by rational arithmetic, and repairing samples
//! until the guaranteed size is met.
//!
//! Run with: cargo run --example deletion_method

use sidonium::construct::probabilistic::{anticommuting_base, probabilistic_sidon, SidonKind};
use sidonium::group::{build_group, GroupSpec};
use sidonium::sidon::VerifyCaps;

fn main() -> sidonium::Result<()> {
    let caps = VerifyCaps::default();

    let z101 = build_group(&GroupSpec::parse("Z:101")?)?;
    let out = probabilistic_sidon(&z101, SidonKind::Second, None, 7, 256, &caps)?;
    println!("Z:101, alternating property:");
    println!(
        "  edge census by size: {:?}",
        out.profile.edge_counts_by_size
    );
    println!(
        "  k* = {}, guarantee ceil(k* - f(k*)) = {}",
        out.k_star, out.target
    );
    println!(
        "  produced {:?} (size {}) in {} attempts",
        out.set.members(),
        out.set.len(),
        out.attempts
    );

    let (a5, base) = anticommuting_base(5)?;
    println!(
        "\nA:5 with the thinned 5-cycle base ({} cycles):",
        base.len()
    );
    for r in base.render(&a5) {
        println!("  {r}");
    }
    let out = probabilistic_sidon(&a5, SidonKind::First, Some(&base), 3, 256, &caps)?;
    println!(
        "  distinct-products set of size {} (target {}): {:?}",
        out.set.len(),
        out.target,
        out.set.render(&a5)
    );
    Ok(())
}
