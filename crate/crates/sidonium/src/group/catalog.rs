//! A corpus of small groups: one representative of every isomorphism class
//! of order at most 16, all realized as multiplication tables.

use super::table::{self, MulTable};
use super::{build_group, FiniteGroup, GroupSpec};
use crate::error::Result;

fn cyclic(n: usize) -> MulTable {
    MulTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic table")
}

fn prod(parts: &[usize]) -> MulTable {
    let mut t = cyclic(parts[0]);
    for &p in &parts[1..] {
        t = table::product(&t, &cyclic(p)).expect("product table");
    }
    t
}

fn from_spec(spec: &str) -> MulTable {
    let g = build_group(&GroupSpec::parse(spec).expect("spec")).expect("group");
    g.to_table().expect("table")
}

/// Central product `D8 ∘ Z4`: quotient of `D8 x Z4` by the diagonal central
/// involution.
fn pauli() -> MulTable {
    let d8 = table::dihedral(4).expect("d8");
    let g = table::product(&d8, &cyclic(4)).expect("product");
    // the central involution of D8 is the rotation r^2 (index 2); pair it
    // with 2 in Z4
    let z = 2 * 4 + 2;
    table::central_quotient(&g, &[0, z]).expect("quotient")
}

/// Every group of order at most `max_order` up to isomorphism (complete for
/// `max_order <= 16`), as `(name, group)` pairs sorted by order.
pub fn small_group_catalog(max_order: usize) -> Result<Vec<(String, FiniteGroup)>> {
    let mut entries: Vec<(String, MulTable)> = Vec::new();
    let mut push = |name: &str, t: MulTable| entries.push((name.to_string(), t));

    for n in 1..=max_order.min(16) {
        match n {
            1 => push("Z1", cyclic(1)),
            2 => push("Z2", cyclic(2)),
            3 => push("Z3", cyclic(3)),
            4 => {
                push("Z4", cyclic(4));
                push("Z2xZ2", prod(&[2, 2]));
            }
            5 => push("Z5", cyclic(5)),
            6 => {
                push("Z6", cyclic(6));
                push("S3", from_spec("S:3"));
            }
            7 => push("Z7", cyclic(7)),
            8 => {
                push("Z8", cyclic(8));
                push("Z4xZ2", prod(&[4, 2]));
                push("Z2xZ2xZ2", prod(&[2, 2, 2]));
                push("D8", table::dihedral(4)?);
                push("Q8", table::dicyclic(2)?);
            }
            9 => {
                push("Z9", cyclic(9));
                push("Z3xZ3", prod(&[3, 3]));
            }
            10 => {
                push("Z10", cyclic(10));
                push("D10", table::dihedral(5)?);
            }
            11 => push("Z11", cyclic(11)),
            12 => {
                push("Z12", cyclic(12));
                push("Z6xZ2", prod(&[6, 2]));
                push("D12", table::dihedral(6)?);
                push("A4", from_spec("A:4"));
                push("Dic3", table::dicyclic(3)?);
            }
            13 => push("Z13", cyclic(13)),
            14 => {
                push("Z14", cyclic(14));
                push("D14", table::dihedral(7)?);
            }
            15 => push("Z15", cyclic(15)),
            16 => {
                push("Z16", cyclic(16));
                push("Z8xZ2", prod(&[8, 2]));
                push("Z4xZ4", prod(&[4, 4]));
                push("Z4xZ2xZ2", prod(&[4, 2, 2]));
                push("Z2^4", prod(&[2, 2, 2, 2]));
                push("D16", table::dihedral(8)?);
                push("SD16", table::semidirect_cyclic(8, 2, 3)?);
                push("M16", table::semidirect_cyclic(8, 2, 5)?);
                push("Q16", table::dicyclic(4)?);
                push("D8xZ2", table::product(&table::dihedral(4)?, &cyclic(2))?);
                push("Q8xZ2", table::product(&table::dicyclic(2)?, &cyclic(2))?);
                push("Z4sZ4", table::semidirect_cyclic(4, 4, 3)?);
                push("Z2^2sZ4", table::klein_by_z4_swap()?);
                push("D8oZ4", pauli());
            }
            _ => unreachable!(),
        }
    }

    Ok(entries
        .into_iter()
        .map(|(name, t)| {
            let g = FiniteGroup::from_table(t, format!("table:{name}"));
            (name, g)
        })
        .collect())
}
