//! Permanents and the permutation lift: a set with distinct products in a
//! group of order n induces permutations of the group, counted exactly by
//! the permanent of the incidence matrix and bounded below by the doubly
//! stochastic estimate.
//!
//! Run with: cargo run --example permanents

use sidonium::construct::permanent::{cayley_matrix, ef_bound, permanent_lift, ryser_permanent};
use sidonium::group::{build_group, ElementSet, GroupSpec};
use sidonium::matrix::SquareMatrix01;
use sidonium::sidon::{check_sk, check_sk_perms, VerifyCaps};

fn main() -> sidonium::Result<()> {
    println!(
        "per(I_4)        = {}",
        ryser_permanent(&SquareMatrix01::identity(4))?
    );
    println!(
        "per(J_3)        = {}",
        ryser_permanent(&SquareMatrix01::ones(3))?
    );
    println!("bound n=3, r=3  = {}", ef_bound(3, 3)?);
    println!(
        "bound n=6, r=2  = {} (so any such matrix has per >= 1)",
        ef_bound(6, 2)?
    );

    let s3 = build_group(&GroupSpec::parse("S:3")?)?;
    let set = ElementSet::new(
        &s3,
        [s3.parse_element("(1 2 3)")?, s3.parse_element("(1 2)")?],
    )?;
    let caps = VerifyCaps::default();
    assert!(check_sk(&s3, &set, 2, &caps)?.holds);

    let m = cayley_matrix(&s3, &set)?;
    println!("\nincidence matrix of {{(1 2 3), (1 2)}} in S:3:");
    println!(
        "  row sums {:?}, column sums {:?}",
        m.row_sums(),
        m.col_sums()
    );
    let per = ryser_permanent(&m)?;
    let lifted = permanent_lift(&s3, &set)?;
    println!(
        "  permanent = {per}, lifted permutations = {}",
        lifted.len()
    );
    for p in &lifted {
        println!("    {p}");
    }
    let rep = check_sk_perms(&lifted, 2, &caps)?;
    println!("  lifted set keeps the property in S_6: {}", rep.holds);
    Ok(())
}
