//! The integer upper bounds across every group of order at most 12.
//!
//! Run with: cargo run --example bounds

use sidonium::group::catalog::small_group_catalog;
use sidonium::sidon::bounds::{upper_bound_report, BoundName};
use sidonium::sidon::search::{max_sk, SearchBudget};

fn main() -> sidonium::Result<()> {
    let k = 2;
    println!("group      order  M_2  trivial  strict  index2  z2d  census");
    for (name, g) in small_group_catalog(12)? {
        let m = max_sk(&g, k, 1, &SearchBudget::default())?.value;
        let report = upper_bound_report(&g, k, 1, None)?;
        let cell = |n: BoundName| -> String {
            report
                .get(n)
                .filter(|e| e.applicable)
                .map(|e| e.value.to_string())
                .unwrap_or_else(|| "-".to_string())
        };
        println!(
            "{name:<10} {:>5}  {m:>3}  {:>7}  {:>6}  {:>6}  {:>3}  {:>6}",
            g.order(),
            cell(BoundName::Trivial),
            cell(BoundName::DimovskiStrict),
            cell(BoundName::Index2Abelian),
            cell(BoundName::Z2dQuotient),
            cell(BoundName::OrderCensus),
        );
    }
    Ok(())
}
