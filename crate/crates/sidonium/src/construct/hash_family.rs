//! Cyclic-shift set families with exact cover regularity, and the matching
//! counting bound for words that are pairwise spread in some coordinate.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// The `t-1` cyclic shifts of `{1..v-2}` modulo `t-1`, as subsets of
/// `{1..t-1}`. Every element of `{1..t-1}` lies in exactly `v-2` of the
/// sets.
pub fn hash_shift_family(t: usize, v: usize) -> Result<Vec<Vec<usize>>> {
    if v < 3 || v > t {
        return Err(Error::invalid("need 3 <= v <= t"));
    }
    let modulus = t - 1;
    let width = v - 2;
    let family = (0..modulus)
        .map(|shift| {
            let mut set: Vec<usize> = (0..width).map(|x| (x + shift) % modulus + 1).collect();
            set.sort_unstable();
            set
        })
        .collect();
    Ok(family)
}

/// The bound `C(t,2) · q^{(1 - (v-2)/(t-1)) n}` on the size of a set of
/// words in `[q]^n` among which every `t` words show at least `v` values in
/// some coordinate. The block argument behind it cuts words into `t-1`
/// equal parts, so `t-1` must divide `n`; other lengths are refused rather
/// than rounded.
pub fn hash_code_bound(t: u64, v: u64, q: u64, n: u64) -> Result<BigRational> {
    if v < 3 || v > t {
        return Err(Error::invalid("need 3 <= v <= t"));
    }
    if q < 2 {
        return Err(Error::invalid("alphabet must have at least 2 letters"));
    }
    if n % (t - 1) != 0 {
        return Err(Error::invalid(format!(
            "t-1 = {} must divide n = {n}",
            t - 1
        )));
    }
    let exponent = n / (t - 1) * (t - v + 1);
    let choose_t2 = BigInt::from(t * (t - 1) / 2);
    let power = BigInt::from(q)
        .pow(u32::try_from(exponent).map_err(|_| Error::invalid("exponent too large"))?);
    Ok(BigRational::from(choose_t2 * power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn singleton_family() {
        assert_eq!(
            hash_shift_family(4, 3).unwrap(),
            vec![vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn pair_family() {
        assert_eq!(
            hash_shift_family(6, 4).unwrap(),
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5],]
        );
    }

    #[test]
    fn cover_regularity() {
        for t in 3..=12 {
            for v in 3..=t {
                let fam = hash_shift_family(t, v).unwrap();
                assert_eq!(fam.len(), t - 1);
                for x in 1..t {
                    let cover = fam.iter().filter(|s| s.contains(&x)).count();
                    assert_eq!(cover, v - 2, "element {x} of t={t}, v={v}");
                }
            }
        }
    }

    #[test]
    fn bound_values() {
        assert_eq!(hash_code_bound(4, 3, 2, 6).unwrap().to_u64(), Some(96));
        assert_eq!(hash_code_bound(3, 3, 3, 4).unwrap().to_u64(), Some(27));
        // v = t: exponent collapses to n/(t-1)
        assert_eq!(hash_code_bound(5, 5, 2, 8).unwrap().to_u64(), Some(10 * 4));
        assert!(hash_code_bound(4, 3, 2, 7).is_err());
        assert!(hash_code_bound(4, 2, 2, 6).is_err());
    }
}
