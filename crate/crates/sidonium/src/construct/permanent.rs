//! Exact permanents by Ryser's inclusion-exclusion, the doubly stochastic
//! lower bound, and the lift of a group subset to the permutations it
//! induces on the group.

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, Permutation};
use crate::matrix::SquareMatrix01;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const RYSER_CAP: usize = 30;

/// Exact permanent by Ryser's formula with Gray-code subset updates:
/// `per(M) = (-1)^n Σ_S (-1)^{|S|} Π_i Σ_{j∈S} M_{ij}`.
pub fn ryser_permanent(m: &SquareMatrix01) -> Result<BigUint> {
    let n = m.n();
    if n > RYSER_CAP {
        return Err(Error::WorkCap {
            needed: 1u128 << n,
            cap: 1 << RYSER_CAP,
        });
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    if n <= 20 {
        let total = ryser_i128(m);
        debug_assert!(total >= 0);
        return Ok(BigUint::from(total as u128));
    }
    let mut row_sums = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for t in 1u64..(1 << n) {
        let bit = t.trailing_zeros() as usize;
        let added = gray >> bit & 1 == 0;
        gray ^= 1 << bit;
        for i in 0..n {
            if m.get(i, bit) {
                row_sums[i] += if added { 1 } else { -1 };
            }
        }
        let mut product = BigInt::one();
        for &s in &row_sums {
            if s == 0 {
                product = BigInt::zero();
                break;
            }
            product *= s;
        }
        if product.is_zero() {
            continue;
        }
        let bits = gray.count_ones() as usize;
        if (n - bits) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    if total.is_negative() {
        return Err(Error::invalid("permanent computation went negative"));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}

fn ryser_i128(m: &SquareMatrix01) -> i128 {
    let n = m.n();
    let mut row_sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut gray: u64 = 0;
    for t in 1u64..(1 << n) {
        let bit = t.trailing_zeros() as usize;
        let added = gray >> bit & 1 == 0;
        gray ^= 1 << bit;
        for i in 0..n {
            if m.get(i, bit) {
                row_sums[i] += if added { 1 } else { -1 };
            }
        }
        let mut product: i128 = 1;
        for &s in &row_sums {
            product *= s as i128;
            if product == 0 {
                break;
            }
        }
        if product == 0 {
            continue;
        }
        let bits = gray.count_ones() as usize;
        if (n - bits) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    total
}

/// The lower bound `rowsum^n · n!/n^n` on the permanent of an `n×n` 0/1
/// matrix whose row and column sums all equal `rowsum` (dividing by the row
/// sum gives a doubly stochastic matrix).
pub fn ef_bound(n: u64, rowsum: u64) -> Result<BigRational> {
    if rowsum < 1 {
        return Err(Error::invalid("row sum must be at least 1"));
    }
    if n < 1 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    let mut numer = BigInt::from(rowsum).pow(n as u32);
    for i in 2..=n {
        numer *= BigInt::from(i);
    }
    let denom = BigInt::from(n).pow(n as u32);
    Ok(BigRational::new(numer, denom))
}

/// The 0/1 matrix `M[x][y] = 1` iff `x⁻¹y` lies in the set, i.e. iff
/// `y ∈ xA`; its permanent counts the permutations lifted below.
pub fn cayley_matrix(group: &FiniteGroup, set: &ElementSet) -> Result<SquareMatrix01> {
    let n = group.order();
    let mut m = SquareMatrix01::zero(n);
    for x in group.elements() {
        for &a in set.members() {
            if a >= n {
                return Err(Error::IndexRange { index: a, order: n });
            }
            m.set(x, group.mul(x, a), true);
        }
    }
    Ok(m)
}

pub const LIFT_ORDER_CAP: usize = 12;

/// All permutations `π` of the group's elements with `π(x) ∈ xA` for every
/// `x`, found by backtracking over the bipartite incidence structure. The
/// output size equals `per(M)` for the matrix of [`cayley_matrix`], and
/// when `A` has the length-`k` distinct-products property so does the
/// output, inside the symmetric group on `|Γ|` letters.
pub fn permanent_lift(group: &FiniteGroup, set: &ElementSet) -> Result<Vec<Permutation>> {
    let n = group.order();
    if n > LIFT_ORDER_CAP {
        return Err(Error::invalid(format!(
            "lift is capped at group order {LIFT_ORDER_CAP}, got {n}"
        )));
    }
    // choices[x] = xA, ascending
    let mut choices: Vec<Vec<usize>> = Vec::with_capacity(n);
    for x in group.elements() {
        let mut row: Vec<usize> = set.members().iter().map(|&a| group.mul(x, a)).collect();
        row.sort_unstable();
        choices.push(row);
    }
    let mut used = vec![false; n];
    let mut image = vec![0usize; n];
    let mut out = Vec::new();
    fn dfs(
        x: usize,
        n: usize,
        choices: &[Vec<usize>],
        used: &mut [bool],
        image: &mut [usize],
        out: &mut Vec<Permutation>,
    ) {
        if x == n {
            let one_line: Vec<usize> = image.iter().map(|&y| y + 1).collect();
            out.push(Permutation::from_one_line(&one_line).expect("bijection"));
            return;
        }
        for &y in &choices[x] {
            if used[y] {
                continue;
            }
            used[y] = true;
            image[x] = y;
            dfs(x + 1, n, choices, used, image, out);
            used[y] = false;
        }
    }
    if !set.is_empty() {
        dfs(0, n, &choices, &mut used, &mut image, &mut out);
    }
    Ok(out)
}
