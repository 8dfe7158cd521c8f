//! Exact verification of the two Sidon-type word properties, with
//! violation witnesses.
//!
//! Run with: cargo run --example verify

use sidonium::group::{build_group, ElementSet, GroupSpec};
use sidonium::sidon::{check_sk, check_sk_prime, VerifyCaps, Witness};

fn main() -> sidonium::Result<()> {
    let caps = VerifyCaps::default();

    // two distinct commuting elements always violate the k = 2 property
    let z5 = build_group(&GroupSpec::parse("Z:5")?)?;
    let set = ElementSet::new(&z5, [0, 1])?;
    let rep = check_sk(&z5, &set, 2, &caps)?;
    println!("Z:5, {{0,1}}, length 2: holds = {}", rep.holds);
    if let Some(Witness::EqualWords { words }) = &rep.witness {
        println!("  equal products: {:?} and {:?}", words[0], words[1]);
    }

    // a non-commuting pair with distinct squares passes
    let s3 = build_group(&GroupSpec::parse("S:3")?)?;
    let set = ElementSet::new(
        &s3,
        [s3.parse_element("(1 2 3)")?, s3.parse_element("(1 2)")?],
    )?;
    let rep = check_sk(&s3, &set, 2, &caps)?;
    println!(
        "S:3, {{(1 2 3), (1 2)}}, length 2: holds = {}, multiplicity = {}",
        rep.holds, rep.multiplicity
    );

    // the alternating property: involution differences are fatal
    let v4 = build_group(&GroupSpec::parse("prod(Z:2,Z:2)")?)?;
    let set = ElementSet::new(&v4, [0, 2])?;
    let rep = check_sk_prime(&v4, &set, 2, &caps)?;
    println!(
        "Z:2 x Z:2, two elements, alternating length 2: holds = {}",
        rep.holds
    );
    if let Some(Witness::CyclicWord { pairs }) = &rep.witness {
        println!("  violating word (alpha_i, beta_i): {pairs:?}");
    }

    // the classic perfect difference set of Z:7
    let z7 = build_group(&GroupSpec::parse("Z:7")?)?;
    let sidon = ElementSet::new(&z7, [0, 1, 3])?;
    let rep = check_sk_prime(&z7, &sidon, 2, &caps)?;
    println!(
        "Z:7, {{0,1,3}}, alternating length 2: holds = {}",
        rep.holds
    );
    Ok(())
}
