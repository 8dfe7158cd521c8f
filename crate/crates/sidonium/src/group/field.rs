//! Arithmetic in small finite fields `GF(p^k)`, realized as polynomials over
//! `F_p` modulo the least monic irreducible polynomial of degree `k`.
//!
//! Field elements are encoded as integers in `0..p^k` whose base-`p` digits
//! are the coefficients, constant term least significant.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SmallField {
    pub p: u64,
    pub k: u32,
    /// Coefficients of the reducing polynomial `x^k + m[k-1] x^{k-1} + ... + m[0]`.
    pub modulus: Vec<u64>,
    pub size: u64,
}

impl SmallField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::invalid("field extension degree must be positive"));
        }
        let size = p
            .checked_pow(k)
            .ok_or_else(|| Error::invalid("field size overflows"))?;
        let modulus = least_irreducible(p, k as usize);
        Ok(SmallField {
            p,
            k,
            modulus,
            size,
        })
    }

    fn decode(&self, mut e: u64) -> Vec<u64> {
        let mut c = vec![0u64; self.k as usize];
        for slot in c.iter_mut() {
            *slot = e % self.p;
            e /= self.p;
        }
        c
    }

    fn encode(&self, c: &[u64]) -> u64 {
        let mut e = 0u64;
        for &ci in c.iter().rev() {
            e = e * self.p + ci;
        }
        e
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let ca = self.decode(a);
        let cb = self.decode(b);
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &ai) in ca.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce using x^k = -(m[k-1] x^{k-1} + ... + m[0])
        for d in (k..2 * k).rev() {
            let coeff = prod[d];
            if coeff == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, &mj) in self.modulus.iter().enumerate() {
                let sub = (coeff * mj) % self.p;
                let idx = d - k + j;
                prod[idx] = (prod[idx] + self.p * self.p - sub) % self.p;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.size - 2)
    }

    /// The Frobenius automorphism `x -> x^p`.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }
}

/// Least monic irreducible polynomial of degree `k` over `F_p`, where
/// candidates are ordered by their coefficient vector read as a base-`p`
/// integer (constant term least significant).
fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0]; // x itself
    }
    let bound = p.pow(k as u32);
    for code in 0..bound {
        let mut c = vec![0u64; k];
        let mut e = code;
        for slot in c.iter_mut() {
            *slot = e % p;
            e /= p;
        }
        if is_irreducible(p, &c) {
            return c;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Trial division by every monic polynomial of degree 1..=k/2.
fn is_irreducible(p: u64, tail: &[u64]) -> bool {
    let k = tail.len();
    let mut poly = tail.to_vec();
    poly.push(1); // monic leading coefficient
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut div = vec![0u64; d];
            let mut e = code;
            for slot in div.iter_mut() {
                *slot = e % p;
                e /= p;
            }
            div.push(1);
            if divides(p, &div, &poly) {
                return false;
            }
        }
    }
    true
}

/// Whether monic `d` divides monic `f` over `F_p`.
fn divides(p: u64, d: &[u64], f: &[u64]) -> bool {
    let mut rem = f.to_vec();
    while rem.len() >= d.len() {
        let lead = *rem.last().unwrap() % p;
        if lead != 0 {
            let shift = rem.len() - d.len();
            for (i, &di) in d.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p * p - (lead * di) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
