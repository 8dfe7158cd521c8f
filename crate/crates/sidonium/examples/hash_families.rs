//! Cyclic-shift families with exact cover regularity and the counting
//! bound they power.
//!
//! Run with: cargo run --example hash_families

use sidonium::construct::hash_family::{hash_code_bound, hash_shift_family};

fn main() -> sidonium::Result<()> {
    for (t, v) in [(4usize, 3usize), (6, 4), (5, 5)] {
        let fam = hash_shift_family(t, v)?;
        println!("t = {t}, v = {v}: {fam:?}");
        for x in 1..t {
            assert_eq!(fam.iter().filter(|s| s.contains(&x)).count(), v - 2);
        }
        println!(
            "  every element of 1..{} covered exactly {} times",
            t - 1,
            v - 2
        );
    }

    println!("\ncounting bound C(t,2) q^((1-(v-2)/(t-1)) n):");
    for (t, v, q, n) in [(4u64, 3u64, 2u64, 6u64), (3, 3, 3, 4), (5, 4, 2, 12)] {
        println!(
            "  t={t} v={v} q={q} n={n}: {}",
            hash_code_bound(t, v, q, n)?
        );
    }
    Ok(())
}
