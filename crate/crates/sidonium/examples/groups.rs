//! Tour of the group layer: building groups from specs, element
//! arithmetic, conjugacy classes, and the field-automorphism family.
//!
//! Run with: cargo run --example groups

use sidonium::group::{build_group, find_os_parameters, point_stabilizer_subset, GroupSpec};

fn main() -> sidonium::Result<()> {
    for spec_text in ["Z:12", "S:4", "A:5", "prod(S:3,S:3)", "os:5,2"] {
        let spec = GroupSpec::parse(spec_text)?;
        let g = build_group(&spec)?;
        println!(
            "{spec_text:<16} order {:>6}, {:>3} involutions, abelian: {}",
            g.order(),
            g.count_involutions(),
            g.is_abelian()
        );
    }

    let s4 = build_group(&GroupSpec::parse("S:4")?)?;
    let a = s4.parse_element("(1 2 3 4)")?;
    let b = s4.parse_element("(1 2)")?;
    println!("\nIn S:4 with products applying the right factor first:");
    println!("  (1 2 3 4)(1 2)     = {}", s4.render(s4.mul(a, b)));
    println!("  (1 2 3 4)^-1       = {}", s4.render(s4.inv(a)));
    println!("  order of (1 2 3 4) = {}", s4.element_order(a)?);
    let class = s4.conjugacy_class(a)?;
    println!("  class of (1 2 3 4) = {:?}", class.render(&s4));

    let stab = point_stabilizer_subset(4, false, 1)?;
    println!("  stabilizer of 1 has {} elements", stab.len());

    println!("\nLargest admissible field-automorphism groups:");
    for n in [48u64, 47, 2000] {
        match find_os_parameters(n, 2)? {
            Some((p, m)) => println!("  order <= {n}: p = {p}, group order {m}"),
            None => println!("  order <= {n}: none"),
        }
    }
    Ok(())
}
